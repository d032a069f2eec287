// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// A criterion passes when its check holds and it finishes inside its budget.
//
//   acceptance [--long-run] [--only N] [--expect-fail N,M,...]
//
// --long-run extends the conjecture audit (criterion 7) to n = 8.
// --expect-fail makes the exit status 0 when exactly the listed criteria
// fail; the PASS/FAIL lines are unchanged.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ybe/census.hpp"
#include "ybe/construct.hpp"
#include "ybe/fixtures.hpp"
#include "ybe/permbrace.hpp"

using namespace ybe;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

bool long_run = false;

std::vector<Brace> braces_up_to(int m) {
  std::vector<Brace> out;
  for (int k = 1; k <= m; ++k)
    for (auto& b : enumerate_braces(k)) out.push_back(std::move(b));
  return out;
}

// K = {0} on orbits in order until they generate (B, +). Used where a brace
// has no transitive cycle base.
ConstructedSolution build_from_cycle_base(const Brace& b) {
  for (const auto& o : lambda_orbits(b))
    if (is_transitive_cycle_base(b, o)) return build_indecomposable(b, {o.front(), {0}});
  ConstructionDatum datum;
  std::vector<int> chosen;
  for (const auto& o : lambda_orbits(b)) {
    if (o.front() == 0) continue;
    datum.representatives.push_back(o.front());
    datum.families.push_back({Subgroup{0}});
    chosen.insert(chosen.end(), o.begin(), o.end());
    if (is_cycle_base(b, chosen)) break;
  }
  if (b.order() == 1) return build_indecomposable(b, {0, {0}});
  return build_solution(b, datum);
}

int count_indecomposable(const Brace& b, bool& all_uniconnected, int bound = kDefaultGroupBound) {
  const auto e = enumerate_indecomposable(b, bound);
  for (const auto& entry : e.entries) all_uniconnected = all_uniconnected && is_uniconnected(entry.built.solution);
  return static_cast<int>(e.entries.size());
}

void fixtures(Outcome& o) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  const Solution s4 = size4_d8_example();
  const ValidationReport v4 = validate(s4);
  o.require(v4.involutive && v4.nondegenerate && v4.braid, "size-4 example validates");
  o.require(is_indecomposable(s4), "size-4 example indecomposable");
  o.require(!is_uniconnected(s4), "size-4 example not uniconnected");
  o.require(s4.permutation_group().order() == 8 && is_dihedral(s4.permutation_group().table()),
            "size-4 group is D8");
  const double t4 = std::chrono::duration<double>(clock::now() - t0).count();

  t0 = clock::now();
  const Solution s8 = size8_example();
  o.require(validate(s8).ok(), "size-8 example validates");
  o.require(is_uniconnected(s8), "size-8 example uniconnected");
  const Retraction r = retraction(s8);
  o.require(!is_uniconnected(r.solution), "size-8 retraction not uniconnected");
  const double t8 = std::chrono::duration<double>(clock::now() - t0).count();
  o.require(t4 < 1.0 && t8 < 1.0, "each fixture under 1 s");
  o.detail << "size-4 " << t4 << "s, size-8 " << t8 << "s";
}

void triple_agreement(Outcome& o) {
  int checked = 0;
  auto check = [&](const Solution& s, const std::string& what) {
    const int d = dehornoy_class_direct(s);
    o.require(d == dehornoy_class_via_lcm(s) && d == dehornoy_class_via_exponent(s), what);
    ++checked;
  };
  for (int n = 1; n <= 6; ++n)
    for (const CensusEntry& e : enumerate_solutions(n).entries) {
      o.require(e.class_direct == e.class_lcm && e.class_direct == e.class_exponent,
                "census n=" + std::to_string(n));
      ++checked;
    }
  check(size4_d8_example(), "size-4 example");
  check(size8_example(), "size-8 example");
  for (int k = 1; k <= 8; ++k) check(shift_example(k), "shift " + std::to_string(k));
  for (const Brace& b : braces_up_to(12)) {
    for (const auto& e : enumerate_indecomposable(b).entries) check(e.built.solution, "constructed");
    check(build_from_cycle_base(b).solution, "cycle-base construction");
  }
  o.detail << checked << " solutions";
}

void closed_form(Outcome& o) {
  std::vector<Brace> corpus = braces_up_to(15);
  // orders 16..21 through the families and filtered searches that stay cheap
  for (auto& b : enumerate_braces_with_multiplicative_group(dihedral_group(16))) corpus.push_back(std::move(b));
  for (const char* spec : {"trivial:17", "sd:triv9,triv2,inv", "trivial:3,6", "trivial:19", "sd:triv5,triv4,inv",
                           "sd:triv7,triv3,pow:2", "trivial:21"})
    corpus.push_back(brace_from_spec(spec));
  int checked = 0;
  for (const Brace& b : corpus)
    for (const auto& e : enumerate_indecomposable(b, 64).entries) {
      o.require(omega_closed_form_check(b, e.built), "closed form at brace order " + std::to_string(b.order()));
      ++checked;
    }
  o.detail << checked << " solutions from " << corpus.size() << " braces";
}

void dihedral_uniqueness(Outcome& o) {
  std::optional<Solution> six;
  for (int n : {3, 5, 7}) {
    std::vector<Brace> dihedral;
    for (auto& b : enumerate_braces(2 * n))
      if (is_dihedral(b.multiplicative_group())) dihedral.push_back(std::move(b));
    o.require(dihedral.size() == 1, "one dihedral brace of order " + std::to_string(2 * n));
    if (dihedral.size() != 1) continue;
    const auto e = enumerate_indecomposable(dihedral[0]);
    o.require(e.entries.size() == 1, "one solution at order " + std::to_string(2 * n));
    for (const auto& entry : e.entries) {
      o.require(is_uniconnected(entry.built.solution), "uniconnected");
      o.require(entry.built.solution.size() == 2 * n, "size 2n");
      if (n == 3) six = entry.built.solution;
    }
  }
  CensusOptions opt;
  opt.with_classes = false;
  int census_d6 = 0;
  for (const Solution& s : solution_forms(6, opt))
    if (is_indecomposable(s) && is_dihedral(s.permutation_group().table())) {
      ++census_d6;
      o.require(six && isomorphic(s, *six), "census D6 solution matches the constructed one");
    }
  o.require(census_d6 == 1, "census n=6 has one indecomposable solution with group D6");
  o.detail << "census n=6 D6 count " << census_d6;
}

void minimal_non_cyclic(Outcome& o) {
  bool uni = true;
  int twelve = 0;
  for (const Brace& b : enumerate_braces(12))
    if (minimal_non_cyclic_type(b.multiplicative_group())) twelve += count_indecomposable(b, uni);
  o.require(twelve == 2, "order 12 gives 2");

  const Group g21 = brace_from_spec("sd:triv7,triv3,pow:2").multiplicative_group();
  int c21 = 0;
  for (const Brace& b : enumerate_braces_with_multiplicative_group(g21)) c21 += count_indecomposable(b, uni);
  o.require(c21 == 2, "(7,3,1) gives q-1 = 2");

  std::vector<int> c56;
  for (int t = 1; t <= 3; ++t)
    c56.push_back(count_indecomposable(brace_from_spec("sd:triv7,C2.3." + std::to_string(t) + ",inv"), uni, 64));
  o.require(c56 == std::vector<int>{1, 1, 1}, "(7,2,3) gives 1 for each t");
  o.require(uni, "all uniconnected");
  o.detail << "12: " << twelve << ", 21: " << c21 << ", 56: " << c56[0] << "," << c56[1] << "," << c56[2];
}

void quaternion(Outcome& o) {
  bool uni = true;
  int total = 0;
  const auto braces = enumerate_braces_with_multiplicative_group(quaternion_group());
  for (const Brace& b : braces) total += count_indecomposable(b, uni);
  o.require(total == 1, "one solution");
  o.require(uni, "uniconnected");
  o.detail << braces.size() << " braces, " << total << " solution";
}

void audits(Outcome& o) {
  const int max_n = long_run ? kLongRunCensusBound : kDefaultCensusBound;
  CensusOptions opt;
  opt.long_run = long_run;
  if (long_run) opt.progress = [](const std::string& m) { std::cerr << m << '\n'; };
  int solutions = 0;
  for (int n = 1; n <= max_n; ++n) {
    const CensusReport r = enumerate_solutions(n, opt);
    solutions += r.total;
    o.require(r.violations.empty(), "no violations at n=" + std::to_string(n));
    for (const CensusEntry& e : r.entries) {
      o.require(e.class_direct <= a_n(n), "d <= a_n");
      if (e.indecomposable) o.require(e.class_direct <= n, "d <= |X|");
    }
  }
  o.detail << "n <= " << max_n << ", " << solutions << " solutions";
}

// Checked as stated: both solutions of class 2. The census has one of class
// 2 and one of class 4, so this criterion fails.
void d8_count(Outcome& o) {
  int d8 = 0;
  std::ostringstream classes;
  for (const CensusEntry& e : enumerate_solutions(4).entries) {
    if (!e.indecomposable || !is_dihedral(e.form.permutation_group().table()) || e.group_order != 8) continue;
    ++d8;
    const int exponent = additive_exponent(permutation_brace(e.form).brace);
    classes << (d8 > 1 ? "," : "") << e.class_direct << "/" << exponent;
    o.require(e.class_direct == 2, "class 2 (got " + std::to_string(e.class_direct) + ")");
    o.require(exponent == 2, "additive exponent 2 (got " + std::to_string(exponent) + ")");
  }
  o.require(d8 == 2, "two D8 solutions");
  o.detail << d8 << " solutions, class/exponent " << classes.str();
}

void oracles(Outcome& o) {
  for (int m = 1; m <= 6; ++m) {
    const auto fast = enumerate_braces(m);
    const auto slow = oracle::brute_braces(m);
    o.require(fast.size() == slow.size(), "brace count at order " + std::to_string(m));
    for (const Brace& s : slow) {
      int hits = 0;
      for (const Brace& f : fast) hits += oracle::brute_brace_isomorphic(f, s);
      o.require(hits == 1, "brace match at order " + std::to_string(m));
    }
  }
  CensusOptions opt;
  opt.with_classes = false;
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Table> pruned;
    for (const Solution& s : solution_forms(n, opt)) pruned.insert(oracle::brute_canonical(s.table()));
    o.require(pruned == oracle::unpruned_census(n), "census at n=" + std::to_string(n));
  }
  int pairs = 0;
  for (const Brace& b : braces_up_to(12)) {
    const auto autos = automorphisms(b);
    const auto data = indecomposable_data(b, false);
    std::vector<Solution> sols;
    for (const auto& d : data) sols.push_back(build_indecomposable(b, d).solution);
    for (std::size_t i = 0; i < data.size(); ++i)
      for (std::size_t j = 0; j < data.size(); ++j, ++pairs)
        o.require(bachi_equivalent(b, data[i], data[j], BachiReading::ConjugatorEqualsZ, autos) ==
                      isomorphic(sols[i], sols[j]),
                  "criterion vs isomorphism at order " + std::to_string(b.order()));
  }
  o.detail << pairs << " datum pairs";
}

void round_trip(Outcome& o) {
  int checked = 0;
  for (const Brace& b : braces_up_to(12)) {
    const ConstructedSolution cs = build_from_cycle_base(b);
    o.require(brace_isomorphic(permutation_brace(cs.solution).brace, b),
              "round trip at order " + std::to_string(b.order()));
    ++checked;
  }
  o.detail << checked << " braces";
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long-run") == 0) {
      long_run = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::istringstream list(argv[++i]);
      for (std::string id; std::getline(list, id, ',');) expected_failures.insert(std::stoi(id));
    } else {
      std::cerr << "usage: acceptance [--long-run] [--only N] [--expect-fail N,M,...]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "fixtures validate and classify", 2.0, fixtures},
      {2, "Dehornoy class triple agreement", 600.0, triple_agreement},
      {3, "closed form for Omega", 60.0, closed_form},
      {4, "dihedral uniqueness", 300.0, dihedral_uniqueness},
      {5, "minimal non-cyclic counts", 600.0, minimal_non_cyclic},
      {6, "quaternion case", 60.0, quaternion},
      {7, "conjecture audits", long_run ? 1e9 : 600.0, audits},
      {8, "D8 counterexample count", 60.0, d8_count},
      {9, "oracle equivalences", 900.0, oracles},
      {10, "permutation-brace round trip", 300.0, round_trip},
  };

  std::set<int> failed, run;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    run.insert(c.id);
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) failed.insert(c.id);
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << o.detail.str() << "; " << std::fixed << std::setprecision(2) << secs << "s of " << c.budget_seconds
              << "s" << (in_time ? "" : ", over budget") << ")\n"
              << std::defaultfloat;
  }
  std::set<int> expected;
  for (int id : expected_failures)
    if (run.count(id)) expected.insert(id);
  std::cout << failed.size() << " of " << run.size() << " criteria failed";
  if (!expected.empty()) std::cout << (failed == expected ? " (as expected)" : " (expected a different set)");
  std::cout << '\n';
  return failed == expected ? 0 : 1;
}
