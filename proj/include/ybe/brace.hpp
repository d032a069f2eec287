#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybe/group.hpp"
#include "ybe/perm.hpp"

namespace ybe {

/// A finite left brace on {0, ..., m-1} given by its + and o tables; 0 is the
/// identity of both operations.
///
/// The constructor checks table shape only; `validate_brace` checks the axioms.
/// The derived accessors (neg, inv, lambda) assume a validated brace.
class Brace {
 public:
  Brace(int order, std::vector<int> add, std::vector<int> mul);

  int order() const noexcept { return m_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  /// Inverse for o.
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// lambda_a(b) = -a + a o b.
  int lambda(int a, int b) const { return add(neg(a), mul(a, b)); }

  std::span<const int> add_table() const noexcept { return add_; }
  std::span<const int> mul_table() const noexcept { return mul_; }

  Group additive_group() const { return Group(m_, add_); }
  Group multiplicative_group() const { return Group(m_, mul_); }

  friend bool operator==(const Brace& a, const Brace& b) {
    return a.m_ == b.m_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * m_ + b); }

  int m_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;  // -1 where no inverse exists
  std::vector<int> inv_;
};

struct BraceReport {
  bool ok = false;
  std::string failure;
  std::optional<std::array<int, 3>> witness;
};

BraceReport validate_brace(const Brace& b);

/// Trivial brace (a o b = a + b) on Z/f1 x Z/f2 x ...; the first factor is
/// the most significant digit of an element index.
Brace trivial_brace(std::span<const int> factors);
/// C(p, n, t): Z/p^n with a o b = a + b + p^t ab.
Brace cyclic_brace(int p, int n, int t);
/// Element index of (x, y) is x * |b2| + y.
Brace direct_product(const Brace& b1, const Brace& b2);

/// alpha[y] is the image array of alpha_y, an automorphism of ap; y ranges
/// over the elements of aq. Product: (a1, a2) o (b1, b2) = (a1 o alpha_{a2}(b1), a2 o b2),
/// addition componentwise, element index x * |aq| + y. Throws InvalidArgument
/// unless every alpha_y is a brace automorphism of ap and y -> alpha_y is a
/// homomorphism from (aq, o).
Brace semidirect_product(const Brace& ap, const Brace& aq, const std::vector<std::vector<int>>& alpha);

/// Action specs for semidirect products whose left factor has cyclic additive
/// group labeled by residues: "triv", "inv" (alpha_y = (-1)^y) and "pow:k"
/// (alpha_y = multiplication by k^y).
std::vector<std::vector<int>> action_from_spec(const Brace& ap, const Brace& aq, const std::string& spec);

std::vector<std::vector<int>> lambda_table(const Brace& b);
std::vector<int> socle(const Brace& b);
int additive_order(const Brace& b, int x);
int multiplicative_order(const Brace& b, int x);
int additive_exponent(const Brace& b);
std::vector<int> additive_invariants(const Brace& b);

/// Maps preserving both operations, as image arrays. Search over images of a
/// small generating set of (b, o).
std::vector<std::vector<int>> automorphisms(const Brace& b, int bound = kDefaultGroupBound);
/// Aut(b, +) as image arrays, by images of an additive generating set.
std::vector<std::vector<int>> additive_automorphisms(const Brace& b, int bound = kDefaultGroupBound);
/// Brace automorphisms obtained by filtering Aut(b, +) for o-preservation.
std::vector<std::vector<int>> automorphisms_by_additive_filter(const Brace& b, int bound = kDefaultGroupBound);

std::optional<std::vector<int>> find_brace_isomorphism(const Brace& b1, const Brace& b2,
                                                       int bound = kDefaultGroupBound);
inline bool brace_isomorphic(const Brace& b1, const Brace& b2, int bound = kDefaultGroupBound) {
  return find_brace_isomorphism(b1, b2, bound).has_value();
}
/// Relabels b along the bijection f (old index -> new index).
Brace relabel_brace(const Brace& b, std::span<const int> f);

bool is_left_ideal(const Brace& b, std::span<const int> subset);
bool is_ideal(const Brace& b, std::span<const int> subset);
/// Quotient by an ideal; cosets are labeled in order of their minimal element.
Brace quotient(const Brace& b, std::span<const int> ideal);
Brace quotient_by_socle(const Brace& b);

/// Invariant-factor lists of all abelian groups of order m, deterministic order.
std::vector<std::vector<int>> abelian_groups(int m);

inline constexpr int kDefaultBraceBound = 16;

/// One representative per isomorphism class of left braces of order m, found
/// as regular subgroups of Hol(A) for every abelian A of order m. Ordered by
/// additive group (as in `abelian_groups`), then by discovery.
std::vector<Brace> enumerate_braces(int m, int bound = kDefaultBraceBound);

/// Braces whose multiplicative group is isomorphic to g, found by searching
/// homomorphic images of g's generators in Hol(A).
std::vector<Brace> enumerate_braces_with_multiplicative_group(const Group& g, int bound = 64);

/// Lexicographically least (add, mul) table pair over the labelings induced
/// by minimal generating tuples of (b, o); equal exactly on isomorphic braces.
Brace canonical_brace(const Brace& b);

}  // namespace ybe
