#include "ybe/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "ybe/construct.hpp"
#include "ybe/errors.hpp"
#include "ybe/permbrace.hpp"

namespace ybe {

namespace {

// Row key used for symmetry breaking: cycle type of the row, then the length
// of the cycle through the row's own point.
using RowKey = std::pair<std::vector<int>, int>;

RowKey row_key(std::span<const int> row, int x) {
  const Permutation p(std::vector<Point>(row.begin(), row.end()));
  return {p.cycle_type(), p.cycle_length(x)};
}

// The permutation with the given cycle type whose first cycle, of length
// `own`, is (0 1 ... own-1); the remaining cycles follow in ascending length.
std::vector<int> representative_row(std::vector<int> type, int own) {
  type.erase(std::find(type.begin(), type.end(), own));
  std::vector<int> row;
  auto emit = [&](int len) {
    const int base = static_cast<int>(row.size());
    for (int k = 1; k < len; ++k) row.push_back(base + k);
    row.push_back(base);
  };
  emit(own);
  for (int len : type) emit(len);
  return row;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int min_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = min_part; k <= rest; ++k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

class CycleSetSearch {
 public:
  CycleSetSearch(int n, RowKey key, std::set<Solution>& forms, const CensusOptions& options)
      : n_(n), key_(std::move(key)), forms_(forms), options_(options),
        t_(static_cast<std::size_t>(n * n), -1), row_used_(static_cast<std::size_t>(n), 0), diag_used_(0) {}

  void run() {
    const auto row0 = representative_row(key_.first, key_.second);
    for (int y = 0; y < n_; ++y)
      if (!assign(0, y, row0[static_cast<std::size_t>(y)])) return;
    if (propagate()) dfs();
  }

 private:
  int& cell(int x, int y) { return t_[static_cast<std::size_t>(x * n_ + y)]; }
  int at(int x, int y) const { return t_[static_cast<std::size_t>(x * n_ + y)]; }

  bool assign(int x, int y, int v) {
    const unsigned bit = 1u << v;
    if (row_used_[static_cast<std::size_t>(x)] & bit) return false;
    if (x == y && (diag_used_ & bit)) return false;
    cell(x, y) = v;
    row_used_[static_cast<std::size_t>(x)] |= bit;
    if (x == y) diag_used_ |= bit;
    trail_.push_back(x * n_ + y);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int c = trail_.back();
      trail_.pop_back();
      const int x = c / n_, y = c % n_;
      const unsigned bit = 1u << t_[static_cast<std::size_t>(c)];
      row_used_[static_cast<std::size_t>(x)] &= ~bit;
      if (x == y) diag_used_ &= ~bit;
      t_[static_cast<std::size_t>(c)] = -1;
    }
  }

  // Fixpoint of: the cycle-set identity, forced last entries of rows and of
  // the diagonal, and the row-key lower bound on completed rows.
  bool propagate() {
    const unsigned full = (1u << n_) - 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
          const int ab = at(a, b), ba = at(b, a);
          if (ab < 0 || ba < 0) continue;
          for (int c = 0; c < n_; ++c) {
            const int ac = at(a, c), bc = at(b, c);
            if (ac < 0 || bc < 0) continue;
            const int l = at(ab, ac), r = at(ba, bc);
            if (l >= 0 && r >= 0) {
              if (l != r) return false;
            } else if (l >= 0) {
              if (!assign(ba, bc, l)) return false;
              changed = true;
            } else if (r >= 0) {
              if (!assign(ab, ac, r)) return false;
              changed = true;
            }
          }
        }
      for (int x = 0; x < n_; ++x) {
        const unsigned used = row_used_[static_cast<std::size_t>(x)];
        if (std::popcount(used) != n_ - 1) continue;
        for (int y = 0; y < n_; ++y)
          if (at(x, y) < 0) {
            if (!assign(x, y, std::countr_zero(full & ~used))) return false;
            changed = true;
            break;
          }
      }
      if (std::popcount(diag_used_) == n_ - 1) {
        for (int x = 0; x < n_; ++x)
          if (at(x, x) < 0) {
            if (!assign(x, x, std::countr_zero(full & ~diag_used_))) return false;
            changed = true;
            break;
          }
      }
    }
    for (int x = 1; x < n_; ++x)
      if (row_used_[static_cast<std::size_t>(x)] == full &&
          row_key(std::span<const int>(t_).subspan(static_cast<std::size_t>(x * n_), static_cast<std::size_t>(n_)), x) <
              key_)
        return false;
    return true;
  }

  void dfs() {
    int c = 0;
    while (c < n_ * n_ && t_[static_cast<std::size_t>(c)] >= 0) ++c;
    if (c == n_ * n_) {
      record();
      return;
    }
    const int x = c / n_, y = c % n_;
    for (int v = 0; v < n_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(x, y, v) && propagate()) dfs();
      undo_to(mark);
    }
  }

  void record() {
    ++leaves_;
    std::vector<std::vector<Point>> sigma(static_cast<std::size_t>(n_), std::vector<Point>(static_cast<std::size_t>(n_)));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) sigma[static_cast<std::size_t>(x)][static_cast<std::size_t>(at(x, y))] = y;
    Solution form = canonical_form(Solution(sigma)).form;
    auto [it, inserted] = forms_.insert(std::move(form));
    if (inserted && options_.on_form) options_.on_form(*it);
  }

  int n_;
  RowKey key_;
  std::set<Solution>& forms_;
  const CensusOptions& options_;
  std::vector<int> t_;
  std::vector<unsigned> row_used_;
  unsigned diag_used_;
  std::vector<int> trail_;

 public:
  long long leaves_ = 0;
};

}  // namespace

std::vector<Solution> solution_forms(int n, const CensusOptions& options) {
  const int bound = options.long_run ? kLongRunCensusBound : kDefaultCensusBound;
  if (n < 1) throw InvalidArgument("census size must be positive");
  if (n > bound) throw BoundError("census", static_cast<std::size_t>(n), static_cast<std::size_t>(bound));
  std::set<Solution> forms;
  for (const auto& type : partitions(n)) {
    std::vector<int> lengths = type;
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int own : lengths) {
      CycleSetSearch search(n, RowKey{type, own}, forms, options);
      search.run();
      if (options.progress) {
        std::string t;
        for (int l : type) t += (t.empty() ? "" : ",") + std::to_string(l);
        options.progress("n=" + std::to_string(n) + " row type [" + t + "] own " + std::to_string(own) + ": " +
                         std::to_string(search.leaves_) + " tables, " + std::to_string(forms.size()) + " classes so far");
      }
    }
  }
  return {forms.begin(), forms.end()};
}

CensusReport enumerate_solutions(int n, const CensusOptions& options) {
  CensusReport rep;
  rep.n = n;
  for (Solution& s : solution_forms(n, options)) {
    CensusEntry e{.form = std::move(s)};
    const Solution& f = e.form;
    e.indecomposable = is_indecomposable(f);
    e.uniconnected = is_uniconnected(f);
    e.mpl = multipermutation_level(f);
    const PermGroup& g = f.permutation_group();
    e.group_order = g.order();
    e.group = describe(g.table());
    e.abelian_group = g.table().is_abelian();
    e.class_direct = dehornoy_class_direct(f);
    if (options.with_classes) {
      const PermutationBrace pb = permutation_brace(f);
      e.class_exponent = additive_exponent(pb.brace);
      int l = 1;
      for (int idx : pb.generator_map) l = std::lcm(l, additive_order(pb.brace, idx));
      e.class_lcm = l;
    }
    rep.indecomposable += e.indecomposable;
    rep.entries.push_back(std::move(e));
  }
  rep.total = static_cast<int>(rep.entries.size());
  rep.violations = audit_conjectures(rep);
  const double dixon = std::pow(24.0, (n - 1) / 3.0);
  for (const auto& e : rep.entries) rep.dixon_exceeded += e.class_direct > dixon + 1e-9;
  return rep;
}

long long a_n(int n) {
  if (n < 1) throw InvalidArgument("a_n needs n >= 1");
  // best[s] over distinct parts, processed part by part (0/1 knapsack).
  std::vector<long long> best(static_cast<std::size_t>(n) + 1, 0);
  best[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = n; s >= part; --s)
      if (best[static_cast<std::size_t>(s - part)] > 0)
        best[static_cast<std::size_t>(s)] =
            std::max(best[static_cast<std::size_t>(s)], best[static_cast<std::size_t>(s - part)] * part);
  return best[static_cast<std::size_t>(n)];
}

long long g_n(int n) {
  if (n < 1) throw InvalidArgument("g_n needs n >= 1");
  long long best = 1;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int min_part, long long l) -> void {
    best = std::max(best, l);  // the remaining points are fixed
    for (int k = std::max(min_part, 2); k <= rest; ++k) self(self, rest - k, k, std::lcm(l, static_cast<long long>(k)));
  };
  rec(rec, n, 2, 1);
  return best;
}

std::vector<Violation> audit_conjectures(const CensusReport& report) {
  std::vector<Violation> out;
  const long long an = a_n(report.n), gn = g_n(report.n);
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    if (e.class_direct > an) out.push_back({"a_n", i, e.class_direct, static_cast<int>(an)});
    if (e.indecomposable && e.class_direct > report.n) out.push_back({"size", i, e.class_direct, report.n});
    if (e.abelian_group && e.class_direct > gn) out.push_back({"g_n", i, e.class_direct, static_cast<int>(gn)});
  }
  return out;
}

DihedralClassReport dihedral_class_check(int n_exp, int m) {
  if (n_exp < 1 || m < 1) throw InvalidArgument("dihedral_class_check: need n_exp >= 1 and m >= 1");
  DihedralClassReport rep;
  rep.n_exp = n_exp;
  rep.m = m;
  rep.inside_hypothesis = n_exp > 3 && m % 2 == 1;
  const int order = (1 << n_exp) * m;
  const Group d = dihedral_group(order);
  for (const Brace& b : enumerate_braces_with_multiplicative_group(d)) {
    rep.covered = true;
    DihedralClassRow row;
    row.additive = additive_invariants(b);
    row.cyclic_additive = row.additive.size() == 1;
    // Smallest union of lambda-orbits (in orbit order) that generates (B, +).
    ConstructionDatum datum;
    std::vector<int> chosen;
    for (const auto& orbit : lambda_orbits(b)) {
      if (orbit.front() == 0) continue;
      datum.representatives.push_back(orbit.front());
      datum.families.push_back({Subgroup{0}});
      chosen.insert(chosen.end(), orbit.begin(), orbit.end());
      if (is_cycle_base(b, chosen)) break;
    }
    const ConstructedSolution cs = build_solution(b, datum);
    row.solution_size = cs.solution.size();
    row.class_direct = dehornoy_class_direct(cs.solution);
    row.expected = row.cyclic_additive ? order : order / 2;
    row.agrees = row.class_direct == row.expected;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ybe
