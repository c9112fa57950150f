#include "opmeans/means.hpp"

#include <algorithm>
#include <cmath>

namespace opmeans {

namespace {

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

// Inner operators are only guaranteed positive definite mathematically; a
// failure here means the inputs are too ill-conditioned to evaluate.
SpdFunctions inner_functions(const SymMatrix& m, const char* what) { return SpdFunctions(m, what); }

}  // namespace

SymMatrix arithmetic_mean(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "arithmetic_mean");
  return (a + b) * 0.5;
}

SymMatrix harmonic_mean(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "harmonic_mean");
  const SpdFunctions fa(a, "harmonic_mean: A");
  const SpdFunctions fb(b, "harmonic_mean: B");
  const SymMatrix avg_inv = (fa.inverse() + fb.inverse()) * 0.5;
  return SpdFunctions(avg_inv, "harmonic_mean: (A^-1 + B^-1)/2").inverse();
}

NaturalPath::NaturalPath(const SymMatrix& a, const SymMatrix& b)
    : a_(a), a_sqrt_(SymMatrix::zero(1)), inner_(SymMatrix::identity(1)) {
  require_same_dim(a, b, "natural_t");
  const SpdFunctions fa(a, "natural_t: A");
  const SpdFunctions fb(b, "natural_t: B");
  a_sqrt_ = fa.sqrt();
  inner_ = inner_functions(congruence(fb.sqrt().matrix(), fa.inverse()),
                           "natural_t: B^{1/2} A^{-1} B^{1/2}");
}

SymMatrix NaturalPath::at(double t) const {
  if (t == 0.0) return a_;
  return congruence(a_sqrt_.matrix(), inner_.power(t));
}

GeometricPath::GeometricPath(const SymMatrix& a, const SymMatrix& b)
    : a_(a), a_sqrt_(SymMatrix::zero(1)), inner_(SymMatrix::identity(1)) {
  require_same_dim(a, b, "geometric_mean_t");
  const SpdFunctions fa(a, "geometric_mean_t: A");
  require_positive_definite(b, "geometric_mean_t: B");
  a_sqrt_ = fa.sqrt();
  inner_ = inner_functions(congruence(fa.inv_sqrt().matrix(), b),
                           "geometric_mean_t: A^{-1/2} B A^{-1/2}");
}

SymMatrix GeometricPath::at(double t) const {
  if (t == 0.0) return a_;
  return congruence(a_sqrt_.matrix(), inner_.power(t));
}

SymMatrix geometric_mean_t(const SymMatrix& a, const SymMatrix& b, double t) {
  if (!std::isfinite(t)) throw ParameterError("geometric_mean_t: weight must be finite");
  return GeometricPath(a, b).at(t);
}

SymMatrix natural_t(const SymMatrix& a, const SymMatrix& b, double t) {
  if (!std::isfinite(t)) throw ParameterError("natural_t: weight must be finite");
  return NaturalPath(a, b).at(t);
}

SymMatrix m_hat(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "m_hat");
  const SpdFunctions fa(a, "m_hat: A");
  const SpdFunctions fb(b, "m_hat: B");
  // X = B^{1/2} A^{1/2}; result is X^T A^{-1} X.
  const GeneralMatrix x = fb.sqrt().matrix() * fa.sqrt().matrix();
  return congruence(x, fa.inverse());
}

GeneralMatrix sqrt_product(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "sqrt_product");
  return mat_fn(a, Power{0.5}).matrix() * mat_fn(b, Power{0.5}).matrix();
}

SymMatrix heinz(const SymMatrix& a, const SymMatrix& b, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterError("heinz: weight must lie in [0, 1]");
  const GeometricPath path(a, b);
  return (path.at(t) + path.at(1.0 - t)) * 0.5;
}

double kappa(const GeneralMatrix& s, const GeneralMatrix& t) {
  return spectral_norm(s) * spectral_norm(t);
}

double kappa(const SymMatrix& s, const SymMatrix& t) {
  return spectral_norm(s) * spectral_norm(t);
}

double kantorovich(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("kantorovich: h must be > 0");
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

double f_t(double x, double t) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ParameterError("f_t: x must be > 0");
  return std::pow(x, t) + std::pow(x, -t);
}

double k_t(double alpha, double beta, double t) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw ParameterError("k_t: bounds must be > 0");
  if (alpha > beta) throw ParameterError("k_t: alpha must not exceed beta");
  return std::max(f_t(alpha, t), f_t(beta, t));
}

ScalarBounds ScalarBounds::from_spectra(const SymMatrix& a, const SymMatrix& b) {
  const Vector ea = eigenvalues(a);
  const Vector eb = eigenvalues(b);
  ScalarBounds out{std::min(ea.minCoeff(), eb.minCoeff()), std::max(ea.maxCoeff(), eb.maxCoeff())};
  if (!(out.m > 0.0)) throw NotPositiveDefinite("ScalarBounds", out.m);
  return out;
}

RatioBounds RatioBounds::geometric(const SymMatrix& a, const SymMatrix& b) {
  const GeometricPath path(a, b);
  return {path.inner().min_eigenvalue(), path.inner().max_eigenvalue()};
}

RatioBounds RatioBounds::natural(const SymMatrix& a, const SymMatrix& b) {
  const NaturalPath path(a, b);
  return {path.inner().min_eigenvalue(), path.inner().max_eigenvalue()};
}

}  // namespace opmeans
