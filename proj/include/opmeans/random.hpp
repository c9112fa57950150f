#pragma once

// Seeded random ensembles of positive-definite matrices.

#include <cstdint>
#include <random>
#include <utility>

#include "opmeans/symcore.hpp"

namespace opmeans {

struct RandomSpec {
  int dim = 2;
  std::uint64_t seed = 0;
  double cond_max = 1e3;  // eigenvalue spread cap
  double scale = 1.0;     // largest eigenvalue bound

  void validate() const;
};

using Rng = std::mt19937_64;

/// Mixes a master seed with two stream indices (claim, trial) into an
/// independent 64-bit seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

/// Q diag(d) Q^T with Q Haar-orthogonal and d log-uniform in
/// [scale / cond_max, scale]. Deterministic per seed.
SymMatrix random_spd(const RandomSpec& spec);

/// (A, B) with B = A + P, P drawn from the same ensemble, so A <= B.
std::pair<SymMatrix, SymMatrix> random_spd_pair_ordered(const RandomSpec& spec);

/// Two commuting positive-definite matrices sharing one random eigenbasis.
std::pair<SymMatrix, SymMatrix> random_spd_pair_commuting(const RandomSpec& spec);

GeneralMatrix random_gaussian(int rows, int cols, Rng& rng);
/// Haar-distributed orthogonal matrix (QR of a Gaussian, signs fixed).
GeneralMatrix random_orthogonal(int n, Rng& rng);
Vector random_unit_vector(int n, Rng& rng);

}  // namespace opmeans
