#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

/// A candidate involutive non-degenerate solution given by its sigma-table:
/// sigma(x, y) is sigma_x(y) and r(x, y) = (sigma_x(y), tau_y(x)) with
/// tau_y(x) = sigma^-1_{sigma_x(y)}(x).
///
/// Construction only checks the table shape; `validate` decides whether the
/// table really is a solution. Everything else assumes a validated solution.
class Solution {
 public:
  /// Throws FormatError on ragged rows or out-of-range entries.
  explicit Solution(const std::vector<std::vector<Point>>& rows);
  explicit Solution(std::span<const Permutation> sigma);

  int size() const noexcept { return n_; }
  Point sigma(Point x, Point y) const { return sigma_[idx(x, y)]; }
  /// sigma_x^-1(y); only meaningful when every row is a bijection.
  Point sigma_inv(Point x, Point y) const { return sigma_inv_[idx(x, y)]; }
  /// The cycle-set operation x . y = sigma_x^-1(y).
  Point dot(Point x, Point y) const { return sigma_inv(x, y); }
  Point tau(Point y, Point x) const { return sigma_inv(sigma(x, y), x); }

  bool rows_bijective() const noexcept { return rows_bijective_; }
  std::span<const Point> row(Point x) const {
    return std::span<const Point>(sigma_).subspan(static_cast<std::size_t>(x * n_), static_cast<std::size_t>(n_));
  }
  Permutation sigma_perm(Point x) const;
  std::vector<std::vector<Point>> table() const;

  /// Closure of the sigma_x; computed on first use.
  const PermGroup& permutation_group() const;

  friend bool operator==(const Solution& a, const Solution& b) { return a.n_ == b.n_ && a.sigma_ == b.sigma_; }
  friend bool operator<(const Solution& a, const Solution& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.sigma_ < b.sigma_;
  }

 private:
  std::size_t idx(Point x, Point y) const { return static_cast<std::size_t>(x * n_ + y); }
  void init();

  struct GroupCache;

  int n_ = 0;
  std::vector<Point> sigma_;
  std::vector<Point> sigma_inv_;
  bool rows_bijective_ = false;
  std::shared_ptr<GroupCache> group_;
};

/// Outcome of `validate`. When a check fails, `witness` holds the offending
/// points (pair in the first two slots, third slot -1 unless a braid triple).
struct ValidationReport {
  bool nondegenerate = false;
  bool involutive = false;
  bool braid = false;
  std::optional<std::array<Point, 3>> witness;
  std::string failure;

  bool ok() const noexcept { return nondegenerate && involutive && braid; }
};

ValidationReport validate(const Solution& s);

Solution trivial_solution(int n);
/// sigma_x = gamma for every x.
Solution shift_solution(const Permutation& gamma);
/// The solution transported along the bijection f: sigma'_{f(x)}(f(y)) = f(sigma_x(y)).
Solution relabel(const Solution& s, const Permutation& f);

bool is_indecomposable(const Solution& s);
bool is_uniconnected(const Solution& s);

struct Retraction {
  Solution solution;
  std::vector<int> class_of;  // point -> class, classes numbered by first occurrence
};

Retraction retraction(const Solution& s);

/// Multipermutation level; nullopt marks a solution that is not
/// multipermutation (the retraction sequence stalls above one point).
std::optional<int> multipermutation_level(const Solution& s);

/// Witness bijection f with sigma'_{f(x)}(f(y)) = f(sigma_x(y)), or nullopt.
/// Throws BoundError above `bound` points.
std::optional<Permutation> find_isomorphism(const Solution& a, const Solution& b, int bound = 12);
inline bool isomorphic(const Solution& a, const Solution& b, int bound = 12) {
  return find_isomorphism(a, b, bound).has_value();
}

/// Omega_k(args) for the cycle-set operation; args must be non-empty.
Point omega(const Solution& s, std::span<const Point> args);

/// Smallest d >= 1 with Omega_{d+1}(x, ..., x, y) = y for all x, y.
int dehornoy_class_direct(const Solution& s);

/// Lexicographically smallest sigma-table over all relabelings, with the
/// relabeling (original point -> canonical point) that produces it.
struct CanonicalForm {
  Solution form;
  Permutation labeling;
};

CanonicalForm canonical_form(const Solution& s);

}  // namespace ybe
