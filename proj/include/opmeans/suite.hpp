#pragma once

// Batch verification: every claim over a seeded ensemble, every
// counterexample search, and the reference examples.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opmeans/check.hpp"
#include "opmeans/falsify.hpp"
#include "opmeans/reference_examples.hpp"

namespace opmeans {

struct SuiteConfig {
  int trials = 200;
  int dim_min = 2;
  int dim_max = 8;
  double cond_max = 1e3;
  std::vector<double> t_grid = default_t_grid();
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
  int falsify_trials = 1000;
  /// Norm kinds for the norm claims; empty means every kind.
  std::vector<NormKind> norms;

  void validate() const;
};

struct ClaimAggregate {
  ClaimId claim{};
  int trials = 0;
  int failures = 0;
  std::optional<double> worst_margin;  // empty when no trial ran
  std::string worst_detail;
  std::uint64_t worst_seed = 0;
  int worst_dim = 0;
  bool passed = true;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<ClaimAggregate> claims;
  std::vector<FalsificationReport> falsifications;
  std::vector<ExampleResult> examples;
  /// Not part of the serialized report, which must be reproducible.
  double wall_time_seconds = 0.0;

  bool claims_passed() const;
  bool falsifications_found() const;
  bool examples_ok() const;
};

/// Runs `claim` over config.trials seeded inputs. Trial i has dimension
/// dim_min + i mod (dim_max - dim_min + 1) and seed
/// derive_seed(config.seed, claim, i). A rejected hypothesis counts as a
/// failure, since the inputs are generated to satisfy it.
ClaimAggregate run_claim(ClaimId claim, const SuiteConfig& config);

/// Falsification search for a counterexample claim with the suite's ensemble.
FalsificationReport run_falsification(ClaimId claim, const SuiteConfig& config);

using SuiteProgress = std::function<void(std::string_view stage, std::string_view name)>;

/// Every theorem claim, every counterexample search and the reference
/// examples. Deterministic per config.
SuiteReport run_suite(const SuiteConfig& config, const SuiteProgress& progress = {});

}  // namespace opmeans
