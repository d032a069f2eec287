#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

inline constexpr int kDefaultCensusBound = 6;
inline constexpr int kLongRunCensusBound = 8;

struct CensusEntry {
  Solution form;  // canonical form
  bool indecomposable = false;
  bool uniconnected = false;
  std::optional<int> mpl{};
  int group_order = 0;
  std::string group{};  // describe() of the permutation group
  bool abelian_group = false;
  int class_direct = 0;
  int class_exponent = 0;
  int class_lcm = 0;
};

struct CensusOptions {
  /// Permits n up to kLongRunCensusBound.
  bool long_run = false;
  /// Computes the permutation-brace classes (skip for a bare count).
  bool with_classes = true;
  /// Called on every new canonical form during the search (streaming).
  std::function<void(const Solution&)> on_form;
  /// Progress messages; never part of the report.
  std::function<void(const std::string&)> progress;
};

struct Violation {
  std::string kind;  // "a_n", "size", "g_n"
  std::size_t entry = 0;
  int value = 0;
  int bound = 0;
};

struct CensusReport {
  int n = 0;
  int total = 0;
  int indecomposable = 0;
  std::vector<CensusEntry> entries;  // sorted by canonical form
  std::vector<Violation> violations;
  /// Report-only: entries whose class exceeds 24^((n-1)/3).
  int dixon_exceeded = 0;
};

/// Canonical forms of all involutive non-degenerate solutions on n points,
/// sorted. Searches cycle-set tables (x . y = sigma_x^-1(y)) cell by cell with
/// propagation of (x.y).(x.z) = (y.x).(y.z). Throws BoundError above the bound.
std::vector<Solution> solution_forms(int n, const CensusOptions& options = {});

/// solution_forms plus invariants; violations are filled by audit_conjectures.
CensusReport enumerate_solutions(int n, const CensusOptions& options = {});

/// Maximum product of distinct positive integers summing to n.
long long a_n(int n);
/// Landau's function: maximum order of a permutation of n points.
long long g_n(int n);

/// d <= a_n for all entries, d <= n for indecomposable entries, d <= g(n)
/// for entries with abelian permutation group.
std::vector<Violation> audit_conjectures(const CensusReport& report);

struct DihedralClassRow {
  std::vector<int> additive;  // invariant factors of (B, +)
  bool cyclic_additive = false;
  int solution_size = 0;
  int class_direct = 0;
  int expected = 0;
  bool agrees = false;
};

struct DihedralClassReport {
  int n_exp = 0;
  int m = 0;
  bool inside_hypothesis = false;  // n_exp > 3 and m odd
  bool covered = false;            // at least one qualifying brace
  std::vector<DihedralClassRow> rows;
};

/// For every brace of order 2^n_exp * m with dihedral multiplicative group,
/// builds a solution from it and compares its class with 2^n_exp * m (cyclic
/// additive group) or 2^(n_exp - 1) * m (otherwise).
DihedralClassReport dihedral_class_check(int n_exp, int m);

}  // namespace ybe
