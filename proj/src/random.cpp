#include "opmeans/random.hpp"

#include <algorithm>
#include <cmath>

namespace opmeans {

void RandomSpec::validate() const {
  if (dim < 1) throw ParameterError("RandomSpec: dim must be >= 1");
  if (!(cond_max >= 1.0) || !std::isfinite(cond_max)) {
    throw ParameterError("RandomSpec: cond_max must be a finite real >= 1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ParameterError("RandomSpec: scale must be a finite real > 0");
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(master) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

GeneralMatrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  GeneralMatrix g(rows, cols);
  // Fill column-major in a fixed order so the stream is reproducible.
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = normal(rng);
  return g;
}

GeneralMatrix random_orthogonal(int n, Rng& rng) {
  const GeneralMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<GeneralMatrix> qr(g);
  GeneralMatrix q = qr.householderQ();
  const GeneralMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Vector random_unit_vector(int n, Rng& rng) {
  Vector v = random_gaussian(n, 1, rng).col(0);
  const double nv = v.norm();
  if (nv == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / nv;
}

namespace {

Vector log_uniform_spectrum(const RandomSpec& spec, Rng& rng) {
  const double lo = std::log(spec.scale / spec.cond_max);
  const double hi = std::log(spec.scale);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector d(spec.dim);
  for (int i = 0; i < spec.dim; ++i) {
    d(i) = std::exp(lo + (hi - lo) * u(rng));
    d(i) = std::clamp(d(i), spec.scale / spec.cond_max, spec.scale);
  }
  return d;
}

}  // namespace

SymMatrix random_spd(const RandomSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const GeneralMatrix q = random_orthogonal(spec.dim, rng);
  const Vector d = log_uniform_spectrum(spec, rng);
  return symmetrize(q * d.asDiagonal() * q.transpose());
}

std::pair<SymMatrix, SymMatrix> random_spd_pair_ordered(const RandomSpec& spec) {
  RandomSpec sa = spec;
  sa.seed = derive_seed(spec.seed, 1);
  RandomSpec sp = spec;
  sp.seed = derive_seed(spec.seed, 2);
  SymMatrix a = random_spd(sa);
  SymMatrix p = random_spd(sp);
  SymMatrix b = a + p;
  return {std::move(a), std::move(b)};
}

std::pair<SymMatrix, SymMatrix> random_spd_pair_commuting(const RandomSpec& spec) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, 3));
  const GeneralMatrix q = random_orthogonal(spec.dim, rng);
  const Vector da = log_uniform_spectrum(spec, rng);
  const Vector db = log_uniform_spectrum(spec, rng);
  return {symmetrize(q * da.asDiagonal() * q.transpose()),
          symmetrize(q * db.asDiagonal() * q.transpose())};
}

}  // namespace opmeans
