#include "ybe/construct.hpp"

#include <algorithm>
#include <numeric>

#include "ybe/errors.hpp"

namespace ybe {

std::vector<std::vector<int>> lambda_orbits(const Brace& b) {
  const int m = b.order();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int a = 0; a < m; ++a) {
        const int y = b.lambda(a, orbit[i]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

bool additively_generates(const Brace& b, std::span<const int> subset) {
  std::vector<char> in(static_cast<std::size_t>(b.order()), 0);
  std::vector<int> reached{0};
  in[0] = 1;
  for (std::size_t i = 0; i < reached.size(); ++i)
    for (int s : subset) {
      const int y = b.add(reached[i], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        reached.push_back(y);
      }
    }
  return static_cast<int>(reached.size()) == b.order();
}

bool lambda_invariant(const Brace& b, std::span<const int> subset) {
  std::vector<char> in(static_cast<std::size_t>(b.order()), 0);
  for (int s : subset) in[static_cast<std::size_t>(s)] = 1;
  for (int a = 0; a < b.order(); ++a)
    for (int s : subset)
      if (!in[static_cast<std::size_t>(b.lambda(a, s))]) return false;
  return true;
}

std::vector<int> orbit_of(const Brace& b, int a) {
  for (auto& o : lambda_orbits(b))
    if (std::binary_search(o.begin(), o.end(), a)) return o;
  return {};
}

std::vector<int> image_of(std::span<const int> f, const Subgroup& k) {
  std::vector<int> out;
  for (int x : k) out.push_back(f[static_cast<std::size_t>(x)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_cycle_base(const Brace& b, std::span<const int> subset) {
  return lambda_invariant(b, subset) && additively_generates(b, subset);
}

bool is_transitive_cycle_base(const Brace& b, std::span<const int> subset) {
  if (subset.empty() || !is_cycle_base(b, subset)) return false;
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return orbit_of(b, sorted.front()) == sorted;
}

Subgroup stabilizer_st(const Brace& b, int a) {
  Subgroup s;
  for (int x = 0; x < b.order(); ++x)
    if (b.lambda(x, a) == a) s.push_back(x);
  return s;
}

ConstructedSolution build_solution(const Brace& b, const ConstructionDatum& datum) {
  const auto& reps = datum.representatives;
  if (reps.empty()) throw InvalidArgument("construction datum needs at least one orbit");
  if (datum.families.size() != reps.size()) throw InvalidArgument("one subgroup family is needed per orbit");
  const Group g = b.multiplicative_group();

  std::vector<int> y_union;
  std::vector<std::vector<int>> orbits;
  for (int a : reps) {
    if (a < 0 || a >= b.order()) throw InvalidArgument("orbit representative out of range");
    auto o = orbit_of(b, a);
    for (const auto& prev : orbits)
      if (prev == o) throw InvalidArgument("two representatives lie in the same lambda-orbit");
    y_union.insert(y_union.end(), o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  if (!additively_generates(b, y_union))
    throw InvalidArgument("the chosen orbits do not form a cycle base (they do not generate (B,+))");

  Subgroup core_meet;
  for (int x = 0; x < b.order(); ++x) core_meet.push_back(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (datum.families[i].empty()) throw InvalidArgument("empty subgroup family for orbit " + std::to_string(i));
    const Subgroup st = stabilizer_st(b, reps[i]);
    for (const auto& k : datum.families[i]) {
      if (!std::is_sorted(k.begin(), k.end()) || !is_subgroup(g, k))
        throw InvalidArgument("K is not a (sorted) subgroup of (B,o)");
      if (!std::includes(st.begin(), st.end(), k.begin(), k.end()))
        throw InvalidArgument("K is not contained in St(a) for a = " + std::to_string(reps[i]));
      core_meet = intersect(core_meet, core(g, k));
    }
  }
  if (core_meet.size() != 1) throw InvalidArgument("the cores of the K's intersect non-trivially");

  ConstructedSolution out{trivial_solution(1), {}, datum, {}};
  std::vector<int> point_orbit;
  out.coset_of.resize(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < datum.families[i].size(); ++j) {
      const CosetSpace cs = left_cosets(g, datum.families[i][j]);
      const int base = static_cast<int>(out.labels.size());
      std::vector<int> point(static_cast<std::size_t>(b.order()));
      for (int x = 0; x < b.order(); ++x) point[static_cast<std::size_t>(x)] = base + cs.coset_of[static_cast<std::size_t>(x)];
      for (int r : cs.representatives) out.labels.push_back({static_cast<int>(i), static_cast<int>(j), r});
      out.coset_of[i].push_back(std::move(point));
    }

  const int n = static_cast<int>(out.labels.size());
  std::vector<std::vector<Point>> rows(static_cast<std::size_t>(n), std::vector<Point>(static_cast<std::size_t>(n)));
  for (int p = 0; p < n; ++p) {
    const PointLabel& lp = out.labels[static_cast<std::size_t>(p)];
    const int shift = b.lambda(lp.rep, reps[static_cast<std::size_t>(lp.orbit)]);
    for (int q = 0; q < n; ++q) {
      const PointLabel& lq = out.labels[static_cast<std::size_t>(q)];
      const int image = b.mul(shift, lq.rep);
      rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          out.coset_of[static_cast<std::size_t>(lq.orbit)][static_cast<std::size_t>(lq.family)][static_cast<std::size_t>(image)];
    }
  }
  out.solution = Solution(rows);
  return out;
}

ConstructedSolution build_indecomposable(const Brace& b, const IndecomposableDatum& datum) {
  if (datum.a < 0 || datum.a >= b.order()) throw InvalidArgument("a is out of range");
  if (!additively_generates(b, orbit_of(b, datum.a)))
    throw InvalidArgument("the lambda-orbit of a = " + std::to_string(datum.a) + " does not generate (B,+)");
  const Group g = b.multiplicative_group();
  if (!is_subgroup(g, datum.k)) throw InvalidArgument("K is not a subgroup of (B,o)");
  if (core(g, datum.k).size() != 1) throw InvalidArgument("K is not core-free");
  return build_solution(b, ConstructionDatum{{datum.a}, {{datum.k}}});
}

bool bachi_equivalent(const Brace& b, const IndecomposableDatum& d1, const IndecomposableDatum& d2,
                      BachiReading reading, std::span<const std::vector<int>> autos) {
  std::vector<std::vector<int>> own;
  if (autos.empty()) {
    own = automorphisms(b, std::max(b.order(), kDefaultGroupBound));
    autos = own;
  }
  if (d1.k.size() != d2.k.size()) return false;
  const Group g = b.multiplicative_group();
  for (const auto& psi : autos) {
    const int target = psi[static_cast<std::size_t>(d1.a)];
    const Subgroup k1 = image_of(psi, d1.k);
    for (int z = 0; z < b.order(); ++z) {
      if (b.lambda(z, d2.a) != target) continue;
      if (reading == BachiReading::ConjugatorEqualsZ) {
        if (conjugate(g, d2.k, z) == k1) return true;
      } else {
        for (int x = 0; x < b.order(); ++x)
          if (conjugate(g, d2.k, x) == k1) return true;
      }
    }
  }
  return false;
}

std::vector<IndecomposableDatum> indecomposable_data(const Brace& b, bool minimal_representatives_only) {
  const Group g = b.multiplicative_group();
  const auto subs = subgroups(g, std::max(b.order(), kDefaultGroupBound));
  std::vector<Subgroup> core_free;
  for (const auto& s : subs)
    if (core(g, s).size() == 1) core_free.push_back(s);
  std::vector<IndecomposableDatum> out;
  for (const auto& orbit : lambda_orbits(b)) {
    if (!additively_generates(b, orbit)) continue;
    const std::size_t take = minimal_representatives_only ? 1 : orbit.size();
    for (std::size_t i = 0; i < take; ++i) {
      const int a = orbit[i];
      const Subgroup st = stabilizer_st(b, a);
      for (const auto& k : core_free)
        if (std::includes(st.begin(), st.end(), k.begin(), k.end())) out.push_back({a, k});
    }
  }
  return out;
}

IndecomposableEnumeration enumerate_indecomposable(const Brace& b, int bound) {
  if (b.order() > bound)
    throw BoundError("enumerate_indecomposable", static_cast<std::size_t>(b.order()), static_cast<std::size_t>(bound));
  IndecomposableEnumeration result;
  const auto autos = automorphisms(b, bound);
  for (const auto& d : indecomposable_data(b)) {
    ConstructedSolution built = build_indecomposable(b, d);
    bool duplicate = false;
    for (const auto& kept : result.entries) {
      const bool brace_level = bachi_equivalent(b, d, kept.datum, BachiReading::ConjugatorEqualsZ, autos);
      const bool solution_level = kept.built.solution.size() == built.solution.size() &&
                                  isomorphic(kept.built.solution, built.solution, bound);
      if (brace_level != solution_level) ++result.bachi_disagreements;
      if (solution_level) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) result.entries.push_back({d, std::move(built)});
  }
  return result;
}

}  // namespace ybe
