#pragma once

// Random inputs that satisfy a claim's hypotheses.

#include "opmeans/check.hpp"
#include "opmeans/random.hpp"

namespace opmeans {

/// Draws inputs for `claim` from the ensemble described by `spec`, shaped by
/// the claim's InputProfile: ordered pairs for order hypotheses, a dominating
/// C for the eigenvalue comparison, commuting pairs where the hypothesis can
/// only hold for commuting operands, and a Gaussian X for the transformer
/// inequality. ClaimInputs::seed is set to spec.seed.
ClaimInputs make_trial_inputs(ClaimId claim, const RandomSpec& spec,
                              const std::vector<double>& t_grid = default_t_grid());

}  // namespace opmeans
