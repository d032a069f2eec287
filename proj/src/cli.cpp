#include "ybe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "ybe/catalog.hpp"
#include "ybe/census.hpp"
#include "ybe/construct.hpp"
#include "ybe/fixtures.hpp"
#include "ybe/permbrace.hpp"

namespace ybe::cli {

namespace {

// Raised for verb-level usage problems that CLI11 cannot see.
struct UsageError : Error {
  using Error::Error;
};

// Raised once a report has been printed and the verb should exit 1.
struct Failed {};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string tf(bool b) { return b ? "true" : "false"; }

std::string factors_text(std::span<const int> f) {
  std::string out;
  for (int x : f) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "1" : out;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_pairs(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  for (const auto& [k, v] : kv) out << k << std::string(w - k.size() + 2, ' ') << v << '\n';
}

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

std::string resolve_store(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("YBX_STORE"); env && *env) return env;
  return {};
}

Brace load_brace(const std::string& spec, std::istream& in) {
  if (spec.find(':') != std::string::npos) return brace_from_spec(spec);
  return brace_from(parse(read_input(spec, in)));
}

std::string hash_suffix(const std::string& h) {
  const std::size_t c = h.find(':');
  return c == std::string::npos ? h : h.substr(c + 1);
}

// ---- verbs -----------------------------------------------------------------

bool validate_record(const CatalogRecord& r, std::ostream& out) {
  switch (r.kind) {
    case RecordKind::Solution:
    case RecordKind::Census: {
      bool all = true;
      for (std::size_t s = 0; s < r.sections.size(); ++s) {
        const ValidationReport v = validate(Solution(r.sections[s]));
        if (r.kind == RecordKind::Census) out << "entry " << s + 1 << ": ";
        out << "involutive non-degenerate: " << yes_no(v.ok()) << '\n';
        if (!v.ok()) {
          out << "  non-degenerate: " << yes_no(v.nondegenerate) << '\n'
              << "  involutive: " << yes_no(v.involutive) << '\n'
              << "  braid: " << yes_no(v.braid) << '\n'
              << "  failure: " << v.failure << '\n';
          all = false;
        }
      }
      return all;
    }
    case RecordKind::Brace: {
      const BraceReport v = validate_brace(brace_from(r));
      out << "left brace: " << yes_no(v.ok) << '\n';
      if (!v.ok) out << "  failure: " << v.failure << '\n';
      return v.ok;
    }
    case RecordKind::Datum: {
      auto [b, d] = datum_from(r);
      const BraceReport bv = validate_brace(b);
      out << "left brace: " << yes_no(bv.ok) << '\n';
      if (!bv.ok) {
        out << "  failure: " << bv.failure << '\n';
        return false;
      }
      try {
        const ConstructedSolution cs = build_solution(b, d);
        out << "datum: yes (" << cs.solution.size() << " points)\n";
        return validate_record(solution_record(cs.solution), out);
      } catch (const InvalidArgument& e) {
        out << "datum: no\n  failure: " << e.what() << '\n';
        return false;
      }
    }
  }
  return false;
}

std::vector<std::pair<std::string, std::string>> solution_invariants(const Solution& s) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("n", std::to_string(s.size()));
  const ValidationReport v = validate(s);
  kv.emplace_back("solution", tf(v.ok()));
  if (!v.ok()) return kv;
  const auto mpl = multipermutation_level(s);
  const PermGroup& g = s.permutation_group();
  kv.emplace_back("indecomposable", tf(is_indecomposable(s)));
  kv.emplace_back("uniconnected", tf(is_uniconnected(s)));
  kv.emplace_back("mpl", mpl ? std::to_string(*mpl) : "none");
  kv.emplace_back("group_order", std::to_string(g.order()));
  kv.emplace_back("group", describe(g.table()));
  const Retraction ret = retraction(s);
  kv.emplace_back("retraction_size", std::to_string(ret.solution.size()));
  kv.emplace_back("retraction_uniconnected", tf(is_uniconnected(ret.solution)));
  kv.emplace_back("class_direct", std::to_string(dehornoy_class_direct(s)));
  try {
    const PermutationBrace pb = permutation_brace(s);
    int l = 1;
    for (int idx : pb.generator_map) l = std::lcm(l, additive_order(pb.brace, idx));
    kv.emplace_back("class_exponent", std::to_string(additive_exponent(pb.brace)));
    kv.emplace_back("class_lcm", std::to_string(l));
    kv.emplace_back("brace_additive", factors_text(additive_invariants(pb.brace)));
  } catch (const BoundError& e) {
    kv.emplace_back("class_exponent", "n/a");
    kv.emplace_back("class_lcm", "n/a");
    kv.emplace_back("brace_additive", "n/a");
  }
  kv.emplace_back("canonical_hash", payload_hash(solution_record(canonical_form(s).form)));
  return kv;
}

std::vector<std::pair<std::string, std::string>> brace_invariants(const Brace& b) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("m", std::to_string(b.order()));
  const BraceReport v = validate_brace(b);
  kv.emplace_back("brace", tf(v.ok));
  if (!v.ok) return kv;
  int transitive = 0;
  const auto orbits = lambda_orbits(b);
  for (const auto& o : orbits) transitive += is_transitive_cycle_base(b, o);
  kv.emplace_back("additive", factors_text(additive_invariants(b)));
  kv.emplace_back("multiplicative", describe(b.multiplicative_group()));
  kv.emplace_back("socle", std::to_string(socle(b).size()));
  kv.emplace_back("exponent", std::to_string(additive_exponent(b)));
  kv.emplace_back("lambda_orbits", std::to_string(orbits.size()));
  kv.emplace_back("transitive_cycle_bases", std::to_string(transitive));
  kv.emplace_back("canonical_hash", payload_hash(brace_record(canonical_brace(b))));
  return kv;
}

std::vector<Subgroup> parse_family(const std::string& text) {
  std::vector<Subgroup> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    Subgroup k;
    std::stringstream ps(part);
    std::string num;
    while (std::getline(ps, num, ',')) {
      try {
        k.push_back(std::stoi(num));
      } catch (const std::exception&) {
        throw UsageError("bad element '" + num + "' in --k " + text);
      }
    }
    std::sort(k.begin(), k.end());
    out.push_back(std::move(k));
  }
  return out;
}

void emit_record(const CatalogRecord& r, const std::string& store, std::ostream& out, bool print) {
  if (print) out << serialize(r);
  if (!store.empty()) store_put(store, r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"ybx: left braces and involutive set-theoretic solutions of the Yang-Baxter equation", "ybx"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input, store, brace_spec, out_path, mult, name, datum_path;
  int order = 0, size_n = 0, bound = 0, max_families = 3;
  bool records = false, long_run = false, no_classes = false, as_record = false;
  std::vector<int> reps;
  std::vector<std::string> families;

  auto* validate_cmd = app.add_subcommand("validate", "check a solution, brace, datum or census record");
  validate_cmd->add_option("input", input, "record file ('-' or omitted: stdin)");

  auto* inv_cmd = app.add_subcommand("invariants", "report invariants of a solution or brace record");
  inv_cmd->add_option("input", input, "record file ('-' or omitted: stdin)");
  inv_cmd->add_flag("--record", as_record, "print a record with the invariants attached");

  auto* construct_cmd = app.add_subcommand("construct", "build a solution from a brace and orbit data");
  construct_cmd->add_option("--brace", brace_spec, "family spec (trivial:, C:, sd:) or brace record file");
  construct_cmd->add_option("--datum", datum_path, "datum record file instead of --brace/--a/--k");
  construct_cmd->add_option("--a", reps, "orbit representative (repeatable)");
  construct_cmd->add_option("--k", families, "subgroups for the matching --a: 'e1,e2;e1,e3' (default {0})");
  construct_cmd->add_option("--max-families", max_families, "cap on subgroups per orbit")->capture_default_str();
  construct_cmd->add_option("--out", out_path, "write the record here instead of stdout");
  construct_cmd->add_option("--store", store, "store directory (default $YBX_STORE)");

  auto* eb_cmd = app.add_subcommand("enumerate-braces", "all braces of an order, up to isomorphism");
  eb_cmd->add_option("--order", order, "brace order");
  eb_cmd->add_option("--mult", mult, "only braces with this multiplicative group (Q8, D16, C3xC4, ...)");
  eb_cmd->add_option("--bound", bound, "order bound (default 16)");
  eb_cmd->add_flag("--records", records, "print records instead of the summary table");
  eb_cmd->add_option("--store", store, "store directory (default $YBX_STORE)");

  auto* es_cmd = app.add_subcommand("enumerate-solutions", "indecomposable solutions whose permutation brace is the given brace");
  es_cmd->add_option("--brace", brace_spec, "family spec or brace record file")->required();
  es_cmd->add_option("--bound", bound, "order bound (default 100)");
  es_cmd->add_flag("--records", records, "print records instead of the summary table");
  es_cmd->add_option("--store", store, "store directory (default $YBX_STORE)");

  auto* census_cmd = app.add_subcommand("census", "all solutions of size n up to isomorphism");
  census_cmd->add_option("--n", size_n, "solution size")->required();
  census_cmd->add_flag("--long-run", long_run, "allow n up to 8");
  census_cmd->add_flag("--no-classes", no_classes, "skip the permutation-brace class columns");
  census_cmd->add_flag("--records", records, "print records instead of the summary table");
  census_cmd->add_option("--store", store, "store directory (default $YBX_STORE); long runs stream into it");

  auto* cc_cmd = app.add_subcommand("check-conjectures", "audit class bounds over the census of size n");
  cc_cmd->add_option("--n", size_n, "solution size")->required();
  cc_cmd->add_flag("--long-run", long_run, "allow n up to 8");

  auto* ex_cmd = app.add_subcommand("examples", "list built-in fixtures or print one");
  ex_cmd->add_option("--name", name, "fixture name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ybx: " << e.what() << '\n';
    return kUsage;
  }

  auto progress = [&err](const std::string& msg) { err << msg << '\n'; };

  try {
    if (validate_cmd->parsed()) {
      bool ok = true;
      for (const auto& r : parse_all(read_input(input, in))) ok = validate_record(r, out) && ok;
      return ok ? kOk : kFailure;
    }

    if (inv_cmd->parsed()) {
      const CatalogRecord r = parse(read_input(input, in));
      std::vector<std::pair<std::string, std::string>> kv;
      if (r.kind == RecordKind::Solution) kv = solution_invariants(solution_from(r));
      else if (r.kind == RecordKind::Brace) kv = brace_invariants(brace_from(r));
      else throw UsageError("invariants takes a solution or brace record");
      if (as_record) {
        CatalogRecord withinv = r;
        for (const auto& [k, v] : kv)
          if (k != "n" && k != "m") withinv.set(k, v);
        out << serialize(withinv);
      } else {
        print_pairs(out, kv);
      }
      const bool ok = kv[1].second == "true";
      return ok ? kOk : kFailure;
    }

    if (construct_cmd->parsed()) {
      Brace b = trivial_brace(std::vector<int>{1});
      ConstructionDatum d;
      if (!datum_path.empty()) {
        if (!brace_spec.empty() || !reps.empty()) throw UsageError("--datum excludes --brace and --a");
        std::tie(b, d) = datum_from(parse(read_input(datum_path, in)));
      } else {
        if (brace_spec.empty() || reps.empty()) throw UsageError("construct needs --brace and at least one --a, or --datum");
        if (families.size() > reps.size()) throw UsageError("more --k than --a");
        b = load_brace(brace_spec, in);
        d.representatives = reps;
        for (std::size_t i = 0; i < reps.size(); ++i)
          d.families.push_back(i < families.size() ? parse_family(families[i]) : std::vector<Subgroup>{{0}});
      }
      for (const auto& f : d.families)
        if (static_cast<int>(f.size()) > max_families)
          throw UsageError("an orbit has " + std::to_string(f.size()) + " subgroups, above --max-families " +
                           std::to_string(max_families));
      const BraceReport bv = validate_brace(b);
      if (!bv.ok) {
        out << "left brace: no\n  failure: " << bv.failure << '\n';
        return kFailure;
      }
      ConstructedSolution cs = [&] {
        try {
          return build_solution(b, d);
        } catch (const InvalidArgument& e) {
          out << "datum rejected: " << e.what() << '\n';
          throw Failed{};
        }
      }();
      const CatalogRecord r = record_of_solution(cs.solution);
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << serialize(r);
      } else {
        out << serialize(r);
      }
      if (const std::string dir = resolve_store(store); !dir.empty()) store_put(dir, r);
      return kOk;
    }

    if (eb_cmd->parsed()) {
      if (order <= 0 && mult.empty()) throw UsageError("enumerate-braces needs --order or --mult");
      std::vector<Brace> braces;
      if (!mult.empty()) {
        const Group g = group_from_name(mult);
        if (order > 0 && order != g.order()) throw UsageError("--order disagrees with the order of --mult");
        braces = enumerate_braces_with_multiplicative_group(g, bound > 0 ? bound : 64);
      } else {
        braces = enumerate_braces(order, bound > 0 ? bound : kDefaultBraceBound);
      }
      const std::string dir = resolve_store(store);
      TextTable t({"#", "additive", "multiplicative", "socle", "exponent", "hash"});
      for (std::size_t i = 0; i < braces.size(); ++i) {
        const CatalogRecord r = record_of_brace(braces[i]);
        emit_record(r, dir, out, records);
        t.add({std::to_string(i + 1), r.get("additive"), r.get("multiplicative"), r.get("socle"), r.get("exponent"),
               hash_suffix(r.get("canonical_hash"))});
      }
      if (!records) {
        t.print(out);
        out << braces.size() << " brace(s)\n";
      }
      return kOk;
    }

    if (es_cmd->parsed()) {
      const Brace b = load_brace(brace_spec, in);
      const BraceReport bv = validate_brace(b);
      if (!bv.ok) {
        out << "left brace: no\n  failure: " << bv.failure << '\n';
        return kFailure;
      }
      const IndecomposableEnumeration e = enumerate_indecomposable(b, bound > 0 ? bound : kDefaultGroupBound);
      const std::string dir = resolve_store(store);
      TextTable t({"#", "a", "|K|", "n", "uniconnected", "group", "class", "hash"});
      for (std::size_t i = 0; i < e.entries.size(); ++i) {
        const auto& entry = e.entries[i];
        const CatalogRecord r = record_of_solution(entry.built.solution);
        emit_record(r, dir, out, records);
        t.add({std::to_string(i + 1), std::to_string(entry.datum.a), std::to_string(entry.datum.k.size()),
               std::to_string(entry.built.solution.size()), r.get("uniconnected"), r.get("group"), r.get("class"),
               hash_suffix(r.get("canonical_hash"))});
      }
      if (!records) {
        t.print(out);
        out << e.entries.size() << " indecomposable solution(s)\n";
      }
      if (e.bachi_disagreements) err << "note: " << e.bachi_disagreements << " brace-level criterion disagreement(s)\n";
      return kOk;
    }

    if (census_cmd->parsed()) {
      CensusOptions opts;
      opts.long_run = long_run;
      opts.with_classes = !no_classes;
      opts.progress = progress;
      const std::string dir = resolve_store(store);
      if (long_run && !dir.empty())
        opts.on_form = [&dir](const Solution& s) { store_put(dir, record_of_solution(s)); };
      const CensusReport rep = enumerate_solutions(size_n, opts);
      TextTable t({"#", "indecomposable", "uniconnected", "mpl", "|G|", "group", "class", "exp", "lcm"});
      for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& e = rep.entries[i];
        if (records || !dir.empty()) {
          CatalogRecord r = record_of_solution(e.form);
          emit_record(r, dir, out, records);
        }
        t.add({std::to_string(i + 1), tf(e.indecomposable), tf(e.uniconnected), e.mpl ? std::to_string(*e.mpl) : "none",
               std::to_string(e.group_order), e.group, std::to_string(e.class_direct),
               opts.with_classes ? std::to_string(e.class_exponent) : "-",
               opts.with_classes ? std::to_string(e.class_lcm) : "-"});
      }
      if (!records) {
        t.print(out);
        out << "n=" << rep.n << " total=" << rep.total << " indecomposable=" << rep.indecomposable << '\n';
      }
      return kOk;
    }

    if (cc_cmd->parsed()) {
      CensusOptions opts;
      opts.long_run = long_run;
      opts.with_classes = true;
      opts.progress = progress;
      const CensusReport rep = enumerate_solutions(size_n, opts);
      int max_all = 0, max_ind = 0, max_abelian = 0, disagree = 0;
      for (const auto& e : rep.entries) {
        max_all = std::max(max_all, e.class_direct);
        if (e.indecomposable) max_ind = std::max(max_ind, e.class_direct);
        if (e.abelian_group) max_abelian = std::max(max_abelian, e.class_direct);
        disagree += e.class_direct != e.class_exponent || e.class_direct != e.class_lcm;
      }
      print_pairs(out, {{"n", std::to_string(rep.n)},
                        {"solutions", std::to_string(rep.total)},
                        {"indecomposable", std::to_string(rep.indecomposable)},
                        {"a_n", std::to_string(a_n(size_n))},
                        {"g_n", std::to_string(g_n(size_n))},
                        {"max_class", std::to_string(max_all)},
                        {"max_class_indecomposable", std::to_string(max_ind)},
                        {"max_class_abelian_group", std::to_string(max_abelian)},
                        {"class_method_disagreements", std::to_string(disagree)},
                        {"above_dixon_bound", std::to_string(rep.dixon_exceeded)},
                        {"violations", std::to_string(rep.violations.size())}});
      for (const auto& v : rep.violations)
        out << "violation " << v.kind << ": entry " << v.entry + 1 << " has class " << v.value << " > " << v.bound
            << '\n';
      return rep.violations.empty() && disagree == 0 ? kOk : kFailure;
    }

    if (ex_cmd->parsed()) {
      if (name.empty()) {
        TextTable t({"name", "description"});
        for (const auto& e : example_list()) t.add({e.name, e.description});
        t.print(out);
      } else {
        out << serialize(example_record(name));
      }
      return kOk;
    }
  } catch (const Failed&) {
    return kFailure;
  } catch (const UsageError& e) {
    err << "ybx: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "ybx: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundError& e) {
    err << "ybx: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "ybx: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace ybe::cli
