#include "opmeans/suite.hpp"

#include <chrono>
#include <cmath>

#include "opmeans/trial_inputs.hpp"

namespace opmeans {

void SuiteConfig::validate() const {
  if (trials < 0) throw ParameterError("trials must be >= 0");
  if (falsify_trials < 0) throw ParameterError("falsify trials must be >= 0");
  if (dim_min < 1 || dim_max < dim_min) throw ParameterError("dims must satisfy 1 <= min <= max");
  if (!(cond_max >= 1.0) || !std::isfinite(cond_max)) throw ParameterError("cond_max must be >= 1");
  if (!(rel_tol >= 0.0)) throw ParameterError("tolerance must be >= 0");
  if (t_grid.empty()) throw ParameterError("t grid must not be empty");
  for (double t : t_grid) {
    if (!std::isfinite(t)) throw ParameterError("t grid values must be finite");
  }
  for (const NormKind& k : norms) {
    if (k.type == NormKind::Type::kKyFan && (k.k < 1 || k.k > dim_min)) {
      throw ParameterError("kyfan:k needs 1 <= k <= smallest dimension");
    }
  }
}

bool SuiteReport::claims_passed() const {
  for (const ClaimAggregate& c : claims) {
    if (!c.passed) return false;
  }
  return true;
}

bool SuiteReport::falsifications_found() const {
  for (const FalsificationReport& f : falsifications) {
    if (!f.found) return false;
  }
  return true;
}

bool SuiteReport::examples_ok() const {
  for (const ExampleResult& e : examples) {
    if (!e.ok) return false;
  }
  return true;
}

ClaimAggregate run_claim(ClaimId claim, const SuiteConfig& config) {
  config.validate();
  ClaimAggregate agg;
  agg.claim = claim;
  const int span = config.dim_max - config.dim_min + 1;
  const CheckOptions options{config.rel_tol};
  for (int i = 0; i < config.trials; ++i) {
    RandomSpec spec;
    spec.dim = config.dim_min + i % span;
    spec.seed = derive_seed(config.seed, static_cast<std::uint64_t>(claim), static_cast<std::uint64_t>(i));
    spec.cond_max = config.cond_max;

    ClaimInputs inputs = make_trial_inputs(claim, spec, config.t_grid);
    inputs.norms = config.norms;
    double margin;
    std::string detail;
    bool ok;
    try {
      const CheckReport r = check(claim, inputs, options);
      margin = r.margin_or_residual;
      detail = r.detail;
      ok = r.passed;
    } catch (const HypothesisNotMet& e) {
      margin = e.margin();
      detail = std::string("hypothesis not met: ") + e.hypothesis();
      ok = false;
    }
    ++agg.trials;
    if (!ok) ++agg.failures;
    if (!agg.worst_margin || margin < *agg.worst_margin) {
      agg.worst_margin = margin;
      agg.worst_detail = detail;
      agg.worst_seed = spec.seed;
      agg.worst_dim = spec.dim;
    }
  }
  agg.passed = agg.failures == 0;
  return agg;
}

FalsificationReport run_falsification(ClaimId claim, const SuiteConfig& config) {
  config.validate();
  RandomSpec spec;
  spec.dim = config.dim_min;
  spec.seed = config.seed;
  spec.cond_max = config.cond_max;
  FalsifyOptions options;
  options.dim_max = config.dim_max;
  return falsify(claim, config.falsify_trials, spec, options);
}

SuiteReport run_suite(const SuiteConfig& config, const SuiteProgress& progress) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  for (const ClaimInfo& ci : catalog()) {
    if (progress) progress(is_falsifiable(ci.id) ? "falsify" : "claim", ci.name);
    if (is_falsifiable(ci.id)) {
      report.falsifications.push_back(run_falsification(ci.id, config));
    } else {
      report.claims.push_back(run_claim(ci.id, config));
    }
  }
  if (progress) progress("examples", "reference examples");
  report.examples = reproduce_reference_examples();
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace opmeans
