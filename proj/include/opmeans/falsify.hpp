#pragma once

// Seeded random search for inputs that violate a counterexample claim.

#include <optional>

#include "opmeans/check.hpp"
#include "opmeans/random.hpp"

namespace opmeans {

struct Witness {
  SymMatrix a;
  SymMatrix b;
  std::optional<GeneralMatrix> x;
  int trial = 0;             // -1 for the pre-seeded reference inputs
  std::uint64_t seed = 0;    // per-trial seed that generated the inputs
  std::string detail;        // worst sub-comparison of the check
};

struct FalsificationReport {
  ClaimId claim{};
  bool found = false;
  int trials_run = 0;
  /// Most negative normalized margin seen (the witness margin when found).
  double violation_margin = 0.0;
  std::optional<Witness> witness;
};

struct FalsifyOptions {
  /// Dimensions cycle through [spec.dim, dim_max]; 0 keeps spec.dim fixed.
  int dim_max = 0;
  /// Try the printed example inputs before the random trials.
  bool reference_inputs_first = false;
  double required_margin = 1e-6;
};

/// Searches at most `trials` seeded samples; stops at the first sample whose
/// normalized margin is below -required_margin. Trial i draws its inputs from
/// derive_seed(spec.seed, claim, i), so the result depends only on the
/// arguments. Throws ParameterError for claims outside the counterexample
/// sub-catalog or a negative trial count.
FalsificationReport falsify(ClaimId claim, int trials, const RandomSpec& spec,
                            const FalsifyOptions& options = {});

}  // namespace opmeans
