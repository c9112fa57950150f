#include "opmeans/entropy.hpp"

#include <cmath>

#include "opmeans/means.hpp"

namespace opmeans {

void EntropyParams::validate() const {
  if (!std::isfinite(t) || t == 0.0) throw ParameterError("entropy weight t must be finite and nonzero");
  if (!(limit_eps > 0.0 && limit_eps <= 1e-3)) {
    throw ParameterError("limit_eps must lie in (0, 1e-3]");
  }
}

namespace {

void require_nonzero_weight(double t, const char* what) {
  if (!std::isfinite(t) || t == 0.0) {
    throw ParameterError(std::string(what) + ": weight t must be finite and nonzero");
  }
}

// expm1 keeps full relative accuracy for small t log x.
double ln_t_unchecked(double x, double t) { return std::expm1(t * std::log(x)) / t; }

}  // namespace

double ln_t(double x, double t) {
  require_nonzero_weight(t, "ln_t");
  if (!(x > 0.0) || !std::isfinite(x)) throw ParameterError("ln_t: x must be > 0");
  return ln_t_unchecked(x, t);
}

SymMatrix tsallis(const SymMatrix& a, const SymMatrix& b, double t) {
  require_nonzero_weight(t, "tsallis");
  const GeometricPath path(a, b);
  const SymMatrix inner = path.inner().map([t](double x) { return ln_t_unchecked(x, t); });
  return congruence(path.a_sqrt().matrix(), inner);
}

SymMatrix quasi_tsallis(const SymMatrix& a, const SymMatrix& b, double t) {
  require_nonzero_weight(t, "quasi_tsallis");
  const NaturalPath path(a, b);
  const SymMatrix inner = path.inner().map([t](double x) { return ln_t_unchecked(x, t); });
  return congruence(path.a_sqrt().matrix(), inner);
}

SymMatrix quasi_relative_entropy(const SymMatrix& a, const SymMatrix& b) {
  const NaturalPath path(a, b);
  return congruence(path.a_sqrt().matrix(), path.inner().log());
}

double quasi_limit_gap(const SymMatrix& a, const SymMatrix& b, double eps) {
  EntropyParams{eps, eps}.validate();
  return spectral_norm(quasi_tsallis(a, b, eps) - quasi_relative_entropy(a, b));
}

}  // namespace opmeans
