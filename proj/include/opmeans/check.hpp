#pragma once

// Evaluation of a single catalog claim on concrete inputs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opmeans/claims.hpp"
#include "opmeans/symcore.hpp"

namespace opmeans {

/// {0, 0.1, ..., 1.0}, built as i / 10 so both endpoints are exact.
std::vector<double> default_t_grid();

struct ClaimInputs {
  SymMatrix a;
  SymMatrix b;
  std::optional<SymMatrix> c;      // for claims with C >= A + B
  std::optional<GeneralMatrix> x;  // for the transformer inequality
  std::vector<double> t_grid = default_t_grid();
  /// Seeds the auxiliary randomness inside a check (unit vectors, orthogonal
  /// matrices, perturbation directions).
  std::uint64_t seed = 0;
  /// Norm kinds for the norm claims; empty means every kind.
  std::vector<NormKind> norms;

  ClaimInputs(SymMatrix a_, SymMatrix b_) : a(std::move(a_)), b(std::move(b_)) {}
};

struct InputsDigest {
  std::uint64_t seed = 0;
  int dim = 0;
  std::vector<double> t_values;
};

/// Outcome of one check. Margins are normalized by the comparison scale
/// max(1, ||operands||): an inequality contributes lambda_min(rhs - lhs) /
/// scale, an identity contributes -||lhs - rhs|| / scale. The reported value
/// is the worst over all sub-comparisons, and passed <=> value >= -tolerance.
struct CheckReport {
  ClaimId claim{};
  double margin_or_residual = 0.0;
  double tolerance = kDefaultRelTol;
  bool passed = true;
  InputsDigest inputs_digest;
  std::string detail;  // label of the worst sub-comparison
};

struct CheckOptions {
  double rel_tol = kDefaultRelTol;
};

/// Evaluates `claim` on `inputs`. Throws HypothesisNotMet when the inputs do
/// not satisfy the claim's hypothesis, NotPositiveDefinite for non-SPD A or B.
/// For counterexample claims the report says whether the (generally false)
/// statement held on these particular inputs.
CheckReport check(ClaimId claim, const ClaimInputs& inputs, const CheckOptions& options = {});

}  // namespace opmeans
