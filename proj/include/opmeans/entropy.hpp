#pragma once

// Tsallis-type relative operator entropies built on the weighted geometric
// mean and on natural_t.

#include "opmeans/symcore.hpp"

namespace opmeans {

struct EntropyParams {
  double t = 0.5;           // nonzero
  double limit_eps = 1e-6;  // weight used to probe the t -> 0 limit

  void validate() const;
};

/// (x^t - 1) / t for x > 0, t != 0.
double ln_t(double x, double t);

/// (A #_t B - A) / t, evaluated as A^{1/2} ln_t(A^{-1/2} B A^{-1/2}) A^{1/2}.
SymMatrix tsallis(const SymMatrix& a, const SymMatrix& b, double t);

/// (natural_t(A, B, t) - A) / t, evaluated as
/// A^{1/2} ln_t(B^{1/2} A^{-1} B^{1/2}) A^{1/2}.
SymMatrix quasi_tsallis(const SymMatrix& a, const SymMatrix& b, double t);

/// A^{1/2} log(B^{1/2} A^{-1} B^{1/2}) A^{1/2}, the t -> 0 limit of
/// quasi_tsallis.
SymMatrix quasi_relative_entropy(const SymMatrix& a, const SymMatrix& b);

/// ||quasi_tsallis(A, B, eps) - quasi_relative_entropy(A, B)||, spectral norm.
double quasi_limit_gap(const SymMatrix& a, const SymMatrix& b, double eps = 1e-6);

}  // namespace opmeans
