#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/construct.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// The left brace structure on the permutation group of a solution. Brace
/// elements are the group's element indices; o is composition.
struct PermutationBrace {
  PermGroup group;
  Brace brace;
  std::vector<int> generator_map;  // x -> index of sigma_x
};

inline constexpr int kDefaultPermBraceBound = 1024;

/// Builds + from composition alone via a + sigma_y = a o sigma_{a^-1(y)}:
/// a breadth-first walk from the identity gives every element a sum of
/// generators, which is folded into the table. With a seed the walk visits
/// generators in a shuffled order; the resulting table must not change.
///
/// Throws ConsistencyError if the walk misses an element or any of the
/// exhaustive checks (brace axioms, lambda_g(sigma_x) = sigma_{g(x)}) fails,
/// and BoundError when the group is larger than `bound`.
PermutationBrace permutation_brace(const Solution& s, std::optional<std::uint64_t> shuffle_seed = std::nullopt,
                                   int bound = kDefaultPermBraceBound);

int dehornoy_class_via_exponent(const Solution& s);
int dehornoy_class_via_lcm(const Solution& s);

/// Compares Omega_n(xK, ..., xK, yK) from the recursion with
/// ((n-1) lambda_x(a))^- o y o K for every pair of points and every
/// n <= max_n (0 means class + 1).
bool omega_closed_form_check(const Brace& b, const ConstructedSolution& cs, int max_n = 0);

}  // namespace ybe
