#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

/// Subgroups are sorted lists of element indices.
using Subgroup = std::vector<int>;

/// Default upper bound on the group order for exhaustive subgroup work.
inline constexpr int kDefaultGroupBound = 100;

/// A finite group given by its Cayley table on {0, ..., order-1}.
/// Element 0 is the identity.
class Group {
 public:
  /// `table[a * order + b]` is the product a*b. Throws FormatError on a
  /// malformed table and ConsistencyError if 0 is not a two-sided identity or
  /// some element lacks an inverse. Associativity is the caller's contract.
  Group(int order, std::vector<int> table);

  int order() const noexcept { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int power(int a, long long k) const;
  int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  std::span<const int> element_orders() const noexcept { return orders_; }
  std::span<const int> table() const noexcept { return table_; }
  bool is_abelian() const;

  /// Histogram: entry k counts elements of order k (size order+1).
  std::vector<int> order_profile() const;

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
};

Group cyclic_group(int n);
/// Dihedral group of the given (even) order, realised on a regular polygon.
Group dihedral_group(int order);
/// Quaternion group of order 8.
Group quaternion_group();
Group direct_product(const Group& a, const Group& b);

Subgroup generated_subgroup(const Group& g, std::span<const int> generators);
bool is_subgroup(const Group& g, std::span<const int> elements);
Subgroup conjugate(const Group& g, const Subgroup& h, int x);  // x h x^-1
bool is_normal(const Group& g, const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// All subgroups, each exactly once, sorted by (order, elements). Built by
/// joining cyclic subgroups until closed. Throws BoundError above `bound`.
std::vector<Subgroup> subgroups(const Group& g, int bound = kDefaultGroupBound);

/// Intersection of all conjugates of `h`.
Subgroup core(const Group& g, const Subgroup& h);

/// A greedy generating set: repeatedly adds the smallest element of maximal
/// order not yet generated.
std::vector<int> small_generating_set(const Group& g);

/// Isomorphism g1 -> g2 as an image array, or nullopt. Generator images are
/// backtracked with element-order pruning.
std::optional<std::vector<int>> find_isomorphism(const Group& g1, const Group& g2,
                                                 int bound = 1 << 14);
bool is_isomorphic(const Group& g1, const Group& g2);

bool is_cyclic(const Group& g);
/// Dihedral of order 2n with n >= 3.
bool is_dihedral(const Group& g);
/// A x| C2 with A abelian of index 2 and C2 acting by inversion.
bool is_generalized_dihedral(const Group& g);
/// Generalized quaternion 2-group of order >= 8.
bool is_generalized_quaternion(const Group& g);
/// Every subgroup normal.
bool is_dedekind(const Group& g, int bound = kDefaultGroupBound);

/// Miller-Moreno type of a minimal non-cyclic group.
///   'a': C_p x C_p, p stored in `p`.
///   'b': the quaternion group of order 8.
///   'c': <a, b | a^p = b^(q^n) = 1, b^-1 a b = a^r>, with (p, q, n).
struct MinimalNonCyclic {
  char type = 0;
  int p = 0;
  int q = 0;
  int n = 0;
  friend bool operator==(const MinimalNonCyclic&, const MinimalNonCyclic&) = default;
};

/// nullopt unless `g` is non-cyclic with every proper subgroup cyclic.
std::optional<MinimalNonCyclic> minimal_non_cyclic_type(const Group& g,
                                                        int bound = kDefaultGroupBound);

/// Invariant factors d1 | d2 | ... of an abelian group (empty for the trivial
/// group). Throws InvalidArgument for non-abelian input.
std::vector<int> abelian_invariants(const Group& g);

/// Short structure name: "1", "C6", "C2xC4", "D8", "Q8", "C7:C3", or
/// "G<order>" when nothing more specific applies.
std::string describe(const Group& g);

// Small number theory shared by several modules.
bool is_prime(long long n);
std::vector<std::pair<int, int>> factorize(int n);  // (prime, exponent), ascending

}  // namespace ybe
