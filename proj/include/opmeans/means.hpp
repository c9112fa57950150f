#pragma once

// Two-variable means of positive-definite matrices and the scalar constants
// used to bound them.
//
// Besides the classical arithmetic, harmonic, weighted geometric and Heinz
// means this provides the "natural" operation
//
//     natural_t(A, B, t) = A^{1/2} (B^{1/2} A^{-1} B^{1/2})^t A^{1/2},
//
// which coincides with the weighted geometric mean A^{1-t} B^t when A and B
// commute, but is not symmetric in (A, B) and fails the transformer
// inequality. Its t = 1 endpoint is m_hat(A, B) = A^{1/2}B^{1/2}A^{-1}B^{1/2}A^{1/2}.
//
// Weights are accepted on all of R; claims restrict the range themselves.

#include "opmeans/symcore.hpp"

namespace opmeans {

SymMatrix arithmetic_mean(const SymMatrix& a, const SymMatrix& b);
SymMatrix harmonic_mean(const SymMatrix& a, const SymMatrix& b);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}.
SymMatrix geometric_mean_t(const SymMatrix& a, const SymMatrix& b, double t = 0.5);

/// A^{1/2} (B^{1/2} A^{-1} B^{1/2})^t A^{1/2}.
SymMatrix natural_t(const SymMatrix& a, const SymMatrix& b, double t = 0.5);

/// |A^{-1/2} B^{1/2} A^{1/2}|^2 = A^{1/2} B^{1/2} A^{-1} B^{1/2} A^{1/2}, evaluated
/// as that product (not through natural_t).
SymMatrix m_hat(const SymMatrix& a, const SymMatrix& b);

/// A^{1/2} B^{1/2}; not symmetric in general.
GeneralMatrix sqrt_product(const SymMatrix& a, const SymMatrix& b);

/// (A #_t B + A #_{1-t} B) / 2, for 0 <= t <= 1.
SymMatrix heinz(const SymMatrix& a, const SymMatrix& b, double t);

/// ||S|| ||T|| with the spectral norm.
double kappa(const GeneralMatrix& s, const GeneralMatrix& t);
double kappa(const SymMatrix& s, const SymMatrix& t);

/// (h + 1)^2 / (4h). Throws ParameterError for h <= 0.
double kantorovich(double h);

/// x^t + x^{-t}. Throws ParameterError for x <= 0.
double f_t(double x, double t);
/// max(f_t(alpha), f_t(beta)).
double k_t(double alpha, double beta, double t);

/// Scalars with m I <= A, B <= M I.
struct ScalarBounds {
  double m;
  double M;

  double h() const { return M / m; }
  /// Tightest bounds: extreme eigenvalues over the union of both spectra.
  static ScalarBounds from_spectra(const SymMatrix& a, const SymMatrix& b);
};

/// Scalars with alpha <= x <= beta on the spectrum of a ratio operator.
struct RatioBounds {
  double alpha;
  double beta;

  /// Tightest alpha A <= B <= beta A (spectrum of A^{-1/2} B A^{-1/2}).
  static RatioBounds geometric(const SymMatrix& a, const SymMatrix& b);
  /// Tightest B / beta <= A <= B / alpha (spectrum of B^{1/2} A^{-1} B^{1/2}).
  static RatioBounds natural(const SymMatrix& a, const SymMatrix& b);
};

/// The curve t -> A natural_t B with its spectral data cached, so evaluating
/// many weights costs one power per weight.
class NaturalPath {
 public:
  NaturalPath(const SymMatrix& a, const SymMatrix& b);
  SymMatrix at(double t) const;
  /// B^{1/2} A^{-1} B^{1/2}.
  const SpdFunctions& inner() const { return inner_; }
  const SymMatrix& a_sqrt() const { return a_sqrt_; }

 private:
  SymMatrix a_;
  SymMatrix a_sqrt_;
  SpdFunctions inner_;
};

/// The geodesic t -> A #_t B with its spectral data cached.
class GeometricPath {
 public:
  GeometricPath(const SymMatrix& a, const SymMatrix& b);
  SymMatrix at(double t) const;
  /// A^{-1/2} B A^{-1/2}.
  const SpdFunctions& inner() const { return inner_; }
  const SymMatrix& a_sqrt() const { return a_sqrt_; }

 private:
  SymMatrix a_;
  SymMatrix a_sqrt_;
  SpdFunctions inner_;
};

}  // namespace opmeans
