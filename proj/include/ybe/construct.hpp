#pragma once

#include <span>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Orbits of the lambda-action, each sorted, ordered by minimal element.
std::vector<std::vector<int>> lambda_orbits(const Brace& b);
/// lambda-invariant and additively generating.
bool is_cycle_base(const Brace& b, std::span<const int> subset);
/// A single lambda-orbit that is a cycle base.
bool is_transitive_cycle_base(const Brace& b, std::span<const int> subset);
/// St(a) = {x : lambda_x(a) = a}, a subgroup of (b, o).
Subgroup stabilizer_st(const Brace& b, int a);

/// Input of the general construction: one representative a_i per chosen
/// lambda-orbit and, for each, a family of subgroups K_{i,j} of St(a_i).
struct ConstructionDatum {
  std::vector<int> representatives;
  std::vector<std::vector<Subgroup>> families;
};

/// A single orbit representative and one core-free K inside St(a).
struct IndecomposableDatum {
  int a = 0;
  Subgroup k{0};
};

/// Point x of the solution is the coset rep o K_{orbit, family}.
struct PointLabel {
  int orbit;
  int family;
  int rep;
};

struct ConstructedSolution {
  Solution solution;
  std::vector<PointLabel> labels;
  ConstructionDatum datum;
  /// coset_of[i][j][x]: point index of x o K_{i,j}.
  std::vector<std::vector<std::vector<int>>> coset_of;
};

/// X = disjoint union of the coset spaces b/K_{i,j} (ordered by i, j, then
/// minimal coset element) with sigma_{x K}(y K') = lambda_x(a_i) o y o K'.
/// Throws InvalidArgument naming the violated condition.
ConstructedSolution build_solution(const Brace& b, const ConstructionDatum& datum);
ConstructedSolution build_indecomposable(const Brace& b, const IndecomposableDatum& datum);

/// Which conjugator the isomorphism criterion uses: psi(K1) = g o K2 o g^- with
/// g equal to the z of psi(a1) = lambda_z(a2), or with any g in b.
enum class BachiReading { ConjugatorEqualsZ, ExistsConjugator };

/// Brace-level test for isomorphism of two indecomposable constructions over b.
/// `autos` defaults to automorphisms(b) when empty.
bool bachi_equivalent(const Brace& b, const IndecomposableDatum& d1, const IndecomposableDatum& d2,
                      BachiReading reading = BachiReading::ConjugatorEqualsZ,
                      std::span<const std::vector<int>> autos = {});

/// Every IndecomposableDatum over b: each a whose orbit is a transitive cycle
/// base, with each core-free subgroup K of St(a).
std::vector<IndecomposableDatum> indecomposable_data(const Brace& b, bool minimal_representatives_only = true);

struct IndecomposableEntry {
  IndecomposableDatum datum;
  ConstructedSolution built;
};

struct IndecomposableEnumeration {
  std::vector<IndecomposableEntry> entries;
  /// Pairs the criterion called inequivalent although the solutions are
  /// isomorphic; the solution-level test wins.
  int bachi_disagreements = 0;
};

/// Pairwise non-isomorphic indecomposable solutions whose permutation brace
/// is b. Deduplicated by the brace-level criterion, then confirmed by
/// solution isomorphism.
IndecomposableEnumeration enumerate_indecomposable(const Brace& b, int bound = kDefaultGroupBound);

}  // namespace ybe
