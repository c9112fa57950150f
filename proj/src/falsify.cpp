#include "opmeans/falsify.hpp"

#include <cmath>
#include <limits>

#include "opmeans/reference_examples.hpp"
#include "opmeans/trial_inputs.hpp"

namespace opmeans {

namespace {

std::optional<ClaimInputs> reference_inputs(ClaimId claim) {
  const ReferenceMatrices r = reference_matrices();
  switch (claim) {
    case ClaimId::kNaturalSymmetry:
    case ClaimId::kNaturalBelowArithmetic:
    case ClaimId::kNaturalVsSharpOrder:
      return ClaimInputs(r.a, r.b);
    case ClaimId::kNaturalTransformerP4: {
      ClaimInputs in(r.a, r.b);
      in.x = r.c.matrix();
      return in;
    }
    case ClaimId::kCondition26:
      return ClaimInputs(r.a_condition, r.b_condition);
    default:
      return std::nullopt;
  }
}

}  // namespace

FalsificationReport falsify(ClaimId claim, int trials, const RandomSpec& spec,
                            const FalsifyOptions& options) {
  if (!is_falsifiable(claim)) {
    throw ParameterError("falsify: " + std::string(info(claim).name) + " is not a counterexample claim");
  }
  if (trials < 0) throw ParameterError("falsify: trials must be >= 0");
  spec.validate();
  const int dim_max = options.dim_max > 0 ? options.dim_max : spec.dim;
  if (dim_max < spec.dim) throw ParameterError("falsify: dim_max below spec.dim");

  FalsificationReport report;
  report.claim = claim;
  report.violation_margin = std::numeric_limits<double>::infinity();

  auto try_inputs = [&](const ClaimInputs& in, int trial, std::uint64_t seed) {
    CheckReport r;
    try {
      r = check(claim, in);
    } catch (const HypothesisNotMet&) {
      return false;
    }
    report.violation_margin = std::min(report.violation_margin, r.margin_or_residual);
    if (r.margin_or_residual < -options.required_margin) {
      report.found = true;
      report.violation_margin = r.margin_or_residual;
      report.witness = Witness{in.a, in.b, in.x, trial, seed, r.detail};
      return true;
    }
    return false;
  };

  if (options.reference_inputs_first) {
    if (auto in = reference_inputs(claim); in && try_inputs(*in, -1, spec.seed)) return report;
  }
  const int span = dim_max - spec.dim + 1;
  for (int i = 0; i < trials; ++i) {
    RandomSpec trial_spec = spec;
    trial_spec.dim = spec.dim + i % span;
    trial_spec.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(claim), static_cast<std::uint64_t>(i));
    ++report.trials_run;
    if (try_inputs(make_trial_inputs(claim, trial_spec), i, trial_spec.seed)) return report;
  }
  if (!std::isfinite(report.violation_margin)) report.violation_margin = 0.0;
  return report;
}

}  // namespace opmeans
