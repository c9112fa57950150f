#include "opmeans/symcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace opmeans {

namespace {

void require_square(const GeneralMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

SymMatrix::SymMatrix(const GeneralMatrix& m) {
  require_square(m, "SymMatrix");
  m_ = (m + m.transpose()) * 0.5;
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  GeneralMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionError("SymMatrix: ragged initializer");
    }
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  *this = SymMatrix(m);
}

SymMatrix SymMatrix::identity(int n) {
  if (n < 1) throw DimensionError("identity: dim must be >= 1");
  return SymMatrix(GeneralMatrix::Identity(n, n), Trusted{});
}

SymMatrix SymMatrix::zero(int n) {
  if (n < 1) throw DimensionError("zero: dim must be >= 1");
  return SymMatrix(GeneralMatrix::Zero(n, n), Trusted{});
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  if (d.empty()) throw DimensionError("diagonal: empty diagonal");
  GeneralMatrix m = GeneralMatrix::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymMatrix(std::move(m), Trusted{});
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  require_same_dim(*this, o, "operator+");
  return SymMatrix(m_ + o.m_, Trusted{});
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  require_same_dim(*this, o, "operator-");
  return SymMatrix(m_ - o.m_, Trusted{});
}

SymMatrix SymMatrix::operator-() const { return SymMatrix(-m_, Trusted{}); }
SymMatrix SymMatrix::operator*(double s) const { return SymMatrix(m_ * s, Trusted{}); }
SymMatrix SymMatrix::operator/(double s) const { return SymMatrix(m_ / s, Trusted{}); }

SymMatrix symmetrize(const GeneralMatrix& m) { return SymMatrix(m); }

SpdDecomposition eig_sym(const SymMatrix& m) {
  const int n = m.dim();
  GeneralMatrix a = m.matrix();
  GeneralMatrix v = GeneralMatrix::Identity(n, n);

  const double threshold = kJacobiRelThreshold * a.norm();
  auto off_diagonal = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal() <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        // Smaller root of t^2 + 2 theta t - 1 = 0.
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged) {
    throw NumericalFailure("eig_sym: Jacobi iteration did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SpdDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]);
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

Vector eigenvalues(const SymMatrix& m) { return eig_sym(m).eigenvalues; }

double min_eigenvalue(const SymMatrix& m) { return eig_sym(m).min_eigenvalue(); }

double spectral_norm(const SymMatrix& m) {
  const Vector ev = eigenvalues(m);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double spectral_norm(const GeneralMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

namespace {

bool positive_definite_spectrum(const SpdDecomposition& d) {
  const double norm = std::max(std::abs(d.max_eigenvalue()), std::abs(d.min_eigenvalue()));
  return d.min_eigenvalue() > kPsdTol * std::max(1.0, norm);
}

}  // namespace

bool is_positive_definite(const SymMatrix& m) { return positive_definite_spectrum(eig_sym(m)); }

void require_positive_definite(const SymMatrix& m, const std::string& what) {
  const SpdDecomposition d = eig_sym(m);
  if (!positive_definite_spectrum(d)) throw NotPositiveDefinite(what, d.min_eigenvalue());
}

SpdFunctions::SpdFunctions(const SymMatrix& a, const std::string& what) : decomp_(eig_sym(a)) {
  if (!positive_definite_spectrum(decomp_)) throw NotPositiveDefinite(what, decomp_.min_eigenvalue());
}

SymMatrix SpdFunctions::power(double p) const {
  if (p == 1.0) return map([](double x) { return x; });
  if (p == -1.0) return map([](double x) { return 1.0 / x; });
  if (p == 0.5) return map([](double x) { return std::sqrt(x); });
  if (p == -0.5) return map([](double x) { return 1.0 / std::sqrt(x); });
  return map([p](double x) { return std::pow(x, p); });
}

SymMatrix SpdFunctions::log() const {
  return map([](double x) { return std::log(x); });
}

SymMatrix mat_fn(const SymMatrix& a, const ScalarFunction& f) {
  const SpdFunctions fa(a, "mat_fn");
  if (const auto* pw = std::get_if<Power>(&f)) return fa.power(pw->p);
  return fa.log();
}

SymMatrix congruence(const GeneralMatrix& x, const SymMatrix& a) {
  if (x.rows() != a.dim()) {
    throw DimensionError("congruence: X has " + std::to_string(x.rows()) +
                         " rows but A has dim " + std::to_string(a.dim()));
  }
  if (x.cols() < 1) throw DimensionError("congruence: X has no columns");
  return symmetrize(x.transpose() * a.matrix() * x);
}

double loewner_margin(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "loewner_margin");
  return min_eigenvalue(b - a);
}

SymMatrix block2(const SymMatrix& a, const GeneralMatrix& x, const SymMatrix& b) {
  const int n = a.dim();
  const int m = b.dim();
  if (x.rows() != n || x.cols() != m) {
    throw DimensionError("block2: off-diagonal block must be " + std::to_string(n) + "x" +
                         std::to_string(m));
  }
  GeneralMatrix out(n + m, n + m);
  out << a.matrix(), x, x.transpose(), b.matrix();
  return symmetrize(out);
}

double schur_psd(const SymMatrix& a, const GeneralMatrix& x, const SymMatrix& b) {
  if (x.rows() != a.dim() || x.cols() != b.dim()) {
    throw DimensionError("schur_psd: off-diagonal block shape mismatch");
  }
  const SpdFunctions fb(b, "schur_psd: bottom-right block");
  const SymMatrix complement =
      symmetrize(a.matrix() - x * fb.inverse().matrix() * x.transpose());
  return min_eigenvalue(complement);
}

Vector singular_values(const GeneralMatrix& m) {
  Eigen::JacobiSVD<GeneralMatrix> svd(m);
  return svd.singularValues();
}

SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b) {
  const int n = a.dim();
  const int m = b.dim();
  GeneralMatrix out = GeneralMatrix::Zero(n + m, n + m);
  out.topLeftCorner(n, n) = a.matrix();
  out.bottomRightCorner(m, m) = b.matrix();
  return SymMatrix(out);
}

NormKind NormKind::parse(const std::string& s) {
  if (s == "spectral") return spectral();
  if (s == "frobenius") return frobenius();
  if (s == "trace") return trace();
  if (s.rfind("kyfan:", 0) == 0) {
    const std::string rest = s.substr(6);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size() || k < 1) {
      throw ParameterError("invalid Ky Fan index in norm kind '" + s + "'");
    }
    return kyfan(k);
  }
  throw ParameterError("unknown norm kind '" + s +
                       "' (expected spectral|frobenius|trace|kyfan:k)");
}

std::string NormKind::to_string() const {
  switch (type) {
    case Type::kSpectral:
      return "spectral";
    case Type::kFrobenius:
      return "frobenius";
    case Type::kTrace:
      return "trace";
    case Type::kKyFan:
      return "kyfan:" + std::to_string(k);
  }
  return "unknown";
}

std::vector<NormKind> all_norm_kinds(int n) {
  std::vector<NormKind> kinds{NormKind::spectral(), NormKind::frobenius(), NormKind::trace()};
  for (int k = 1; k <= n; ++k) kinds.push_back(NormKind::kyfan(k));
  return kinds;
}

double ui_norm_from_singular_values(const Vector& s, NormKind kind) {
  switch (kind.type) {
    case NormKind::Type::kSpectral:
      return s.size() ? s(0) : 0.0;
    case NormKind::Type::kFrobenius:
      return s.norm();
    case NormKind::Type::kTrace:
      return s.sum();
    case NormKind::Type::kKyFan:
      if (kind.k < 1 || kind.k > s.size()) {
        throw ParameterError("Ky Fan index " + std::to_string(kind.k) + " outside 1.." +
                             std::to_string(s.size()));
      }
      return s.head(kind.k).sum();
  }
  return 0.0;
}

double ui_norm(const GeneralMatrix& m, NormKind kind) {
  return ui_norm_from_singular_values(singular_values(m), kind);
}

double comparison_scale(std::initializer_list<const SymMatrix*> ms) {
  double s = 1.0;
  for (const SymMatrix* m : ms) s = std::max(s, spectral_norm(*m));
  return s;
}

}  // namespace opmeans
