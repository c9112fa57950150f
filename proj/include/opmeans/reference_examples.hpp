#pragma once

// Recomputation of the printed reference numbers for natural_t.

#include <string>
#include <vector>

#include "opmeans/symcore.hpp"

namespace opmeans {

struct ReferenceMatrices {
  SymMatrix a;            // [[2, 1], [1, 2]]
  SymMatrix b;            // [[2, -2], [-2, 5]]
  SymMatrix c;            // [[3, -1], [-1, 3]], congruence factor
  SymMatrix b_flipped;    // [[2, 2], [2, 5]]
  SymMatrix a_condition;  // [[4, 1], [1, 2]]
  SymMatrix b_condition;  // diag(4, 1)
};

ReferenceMatrices reference_matrices();

struct ExampleResult {
  std::string name;
  std::vector<double> expected;
  std::vector<double> computed;
  double tolerance = 0.0;  // absolute, per entry
  bool ok = false;
};

/// Matrix entries are listed row-major; eigenvalue pairs ascending.
std::vector<ExampleResult> reproduce_reference_examples();

}  // namespace opmeans
