#pragma once

#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/catalog.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Four points: sigma_1 = (3 4), sigma_2 = (1 3 2 4), sigma_3 = (1 4 2 3),
/// sigma_4 = (1 2) in 1-indexed cycles. Indecomposable, group D8, class 2.
Solution size4_d8_example();

/// Eight points, uniconnected, with a retraction of size 4 that is not.
Solution size8_example();

/// sigma_x = gamma for every x, gamma the k-cycle (1 2 ... k).
Solution shift_example(int k);

/// Brace family specs:
///   trivial:<f1>,<f2>,...   trivial brace on Z/f1 x Z/f2 x ...
///   C:<p>,<n>,<t>           C(p, n, t)
///   sd:<left>,<right>,<act> semidirect product; left and right are trivK or
///                           Cp.n.t, act is triv, inv or pow:k
/// Throws FormatError on a malformed spec.
Brace brace_from_spec(const std::string& spec);

/// Q8, Dk (dihedral of order k), Ck, and products such as C2xC4.
Group group_from_name(const std::string& name);

struct ExampleInfo {
  std::string name;
  std::string description;
};

std::vector<ExampleInfo> example_list();

/// Record for a named example: size4-d8, size8, shift:<k>, brace:<spec>.
/// Carries the expected invariants the test suite checks against.
CatalogRecord example_record(const std::string& name);

}  // namespace ybe
