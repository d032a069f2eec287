#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ybe/group.hpp"

namespace ybe {

using Point = int;

/// A bijection of {0, ..., n-1} stored as its image table.
///
/// Composition follows (p * q)(i) = p(q(i)) everywhere in the library.
class Permutation {
 public:
  Permutation() = default;

  /// Throws FormatError unless `image` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(int degree);

  /// Parses 1-indexed cycle notation such as "(1 3 2 4)(5,6)". An empty
  /// string or "()" is the identity.
  static Permutation from_cycles(int degree, std::string_view text);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  Point operator()(Point i) const { return image_[static_cast<std::size_t>(i)]; }
  std::span<const Point> image() const noexcept { return image_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  int order() const;

  /// Cycle lengths in ascending order, fixed points included.
  std::vector<int> cycle_type() const;

  /// Length of the cycle through `i`.
  int cycle_length(Point i) const;

  /// 1-indexed cycle notation, fixed points omitted; "()" for the identity.
  std::string to_cycles() const;

  /// 0-indexed, space-separated image list.
  std::string to_images() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> image_;
};

/// Returns p * q, i.e. the map i -> p(q(i)). Throws InvalidArgument on a
/// degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A fully materialized permutation group.
///
/// Elements are listed breadth-first from the identity (index 0), extending
/// each element by the generators in input order. Every element carries one
/// word in the generators: word [k1, ..., kr] evaluates to
/// gen[k1] * ... * gen[kr].
class PermGroup {
 public:
  /// Throws InvalidArgument on an empty list or mixed degrees.
  static PermGroup closure(std::span<const Permutation> generators);

  int degree() const noexcept { return degree_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }

  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::span<const int> word(int index) const { return words_[static_cast<std::size_t>(index)]; }

  std::optional<int> index_of(const Permutation& p) const;

  /// Index of generator k inside elements().
  int generator_index(int k) const { return generator_index_[static_cast<std::size_t>(k)]; }

  /// Cayley table of the group on element indices; built on first use.
  const Group& table() const;

  /// Orbits on points, each sorted, ordered by their smallest point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  bool is_regular() const;

  /// Element indices fixing `point`.
  Subgroup stabilizer(Point point) const;

 private:
  PermGroup() = default;

  struct TableCache;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> generator_index_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::shared_ptr<TableCache> table_;
};

/// Left cosets x*H of a subgroup of a Cayley-table group.
///
/// Cosets are ordered by their smallest element index and that element is the
/// representative, so the identity coset comes first with representative 0.
struct CosetSpace {
  Subgroup subgroup;
  std::vector<std::vector<int>> cosets;
  std::vector<int> representatives;
  std::vector<int> coset_of;  // element index -> coset index
};

CosetSpace left_cosets(const Group& group, const Subgroup& subgroup);

}  // namespace ybe
