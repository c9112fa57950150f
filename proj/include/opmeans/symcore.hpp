#pragma once

// Dense real symmetric matrix kernel: a Jacobi eigensolver, spectral matrix
// functions, Loewner-order margins, 2x2 block assembly and unitarily
// invariant norms.

#include <Eigen/Dense>

#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "opmeans/errors.hpp"

namespace opmeans {

using GeneralMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative threshold for positive definiteness: A is positive definite when
/// lambda_min(A) > kPsdTol * max(1, ||A||).
inline constexpr double kPsdTol = 1e-10;
/// Default relative tolerance for Loewner comparisons and identity residuals.
inline constexpr double kDefaultRelTol = 1e-8;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelThreshold = 1e-14;

/// Dense real symmetric n x n matrix. Construction symmetrizes the input as
/// (M + M^T) / 2, so entry (i, j) equals entry (j, i) bit for bit.
class SymMatrix {
 public:
  explicit SymMatrix(const GeneralMatrix& m);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(int n);
  static SymMatrix zero(int n);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix diagonal(std::initializer_list<double> d);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const GeneralMatrix& matrix() const { return m_; }

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix operator-() const;
  SymMatrix operator*(double s) const;
  SymMatrix operator/(double s) const;
  friend SymMatrix operator*(double s, const SymMatrix& a) { return a * s; }

  bool operator==(const SymMatrix& o) const { return m_ == o.m_; }

 private:
  struct Trusted {};
  SymMatrix(GeneralMatrix m, Trusted) : m_(std::move(m)) {}
  GeneralMatrix m_;
};

/// (M + M^T) / 2 as a SymMatrix. Throws DimensionError for non-square input.
SymMatrix symmetrize(const GeneralMatrix& m);

/// Eigen-decomposition of a symmetric matrix: eigenvalues sorted descending
/// (ties keep their original order), eigenvectors stored as orthonormal
/// columns in matching order.
struct SpdDecomposition {
  Vector eigenvalues;
  GeneralMatrix eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  double min_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
  double max_eigenvalue() const { return eigenvalues(0); }
};

/// Cyclic Jacobi eigensolver. Converges when the off-diagonal Frobenius mass
/// falls below kJacobiRelThreshold * ||M||_F; throws NumericalFailure after
/// kJacobiMaxSweeps sweeps.
SpdDecomposition eig_sym(const SymMatrix& m);

/// Eigenvalues only, descending.
Vector eigenvalues(const SymMatrix& m);
double min_eigenvalue(const SymMatrix& m);

/// Largest singular value (= max |eigenvalue| for symmetric input).
double spectral_norm(const SymMatrix& m);
double spectral_norm(const GeneralMatrix& m);

bool is_positive_definite(const SymMatrix& m);
/// Throws NotPositiveDefinite naming `what` unless m is positive definite.
void require_positive_definite(const SymMatrix& m, const std::string& what);

struct Power {
  double p;
};
struct Log {};
using ScalarFunction = std::variant<Power, Log>;

/// Q diag(f(lambda)) Q^T, symmetrized.
template <class F>
SymMatrix spectral_map(const SpdDecomposition& d, F&& f) {
  Vector mapped(d.dim());
  for (int i = 0; i < d.dim(); ++i) mapped(i) = f(d.eigenvalues(i));
  return symmetrize(d.eigenvectors * mapped.asDiagonal() *
                    d.eigenvectors.transpose());
}

/// Matrix function of a positive-definite matrix.
SymMatrix mat_fn(const SymMatrix& a, const ScalarFunction& f);

/// Cached spectral data of a positive-definite matrix, so that several powers
/// of the same matrix cost one eigen-decomposition.
class SpdFunctions {
 public:
  SpdFunctions(const SymMatrix& a, const std::string& what = "matrix");

  SymMatrix power(double p) const;
  SymMatrix log() const;
  SymMatrix sqrt() const { return power(0.5); }
  SymMatrix inv_sqrt() const { return power(-0.5); }
  SymMatrix inverse() const { return power(-1.0); }
  template <class F>
  SymMatrix map(F&& f) const {
    return spectral_map(decomp_, std::forward<F>(f));
  }

  const SpdDecomposition& decomposition() const { return decomp_; }
  double min_eigenvalue() const { return decomp_.min_eigenvalue(); }
  double max_eigenvalue() const { return decomp_.max_eigenvalue(); }

 private:
  SpdDecomposition decomp_;
};

/// X^T A X, symmetrized. X may be rectangular (rows must equal dim(A)).
SymMatrix congruence(const GeneralMatrix& x, const SymMatrix& a);

/// lambda_min(B - A). B >= A holds at tolerance tau iff the margin >= -tau.
double loewner_margin(const SymMatrix& a, const SymMatrix& b);

/// The 2n x 2n symmetric block matrix [[A, X], [X^T, B]].
SymMatrix block2(const SymMatrix& a, const GeneralMatrix& x, const SymMatrix& b);

/// lambda_min(A - X B^{-1} X^T). Agrees in sign with the smallest eigenvalue
/// of block2(A, X, B) when B is positive definite.
double schur_psd(const SymMatrix& a, const GeneralMatrix& x, const SymMatrix& b);

/// Singular values, descending, length min(rows, cols).
Vector singular_values(const GeneralMatrix& m);

/// Block-diagonal A (+) B.
SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b);

/// A unitarily invariant norm, described by its symmetric gauge function.
struct NormKind {
  enum class Type { kSpectral, kFrobenius, kTrace, kKyFan };
  Type type = Type::kSpectral;
  int k = 0;  // only for kKyFan

  static NormKind spectral() { return {Type::kSpectral, 0}; }
  static NormKind frobenius() { return {Type::kFrobenius, 0}; }
  static NormKind trace() { return {Type::kTrace, 0}; }
  static NormKind kyfan(int k) { return {Type::kKyFan, k}; }

  /// Parses "spectral", "frobenius", "trace" or "kyfan:<k>".
  static NormKind parse(const std::string& s);
  std::string to_string() const;
  bool operator==(const NormKind&) const = default;
};

/// spectral, frobenius, trace, and every Ky Fan k in 1..n.
std::vector<NormKind> all_norm_kinds(int n);

double ui_norm(const GeneralMatrix& m, NormKind kind);
/// Norm evaluated on precomputed descending singular values.
double ui_norm_from_singular_values(const Vector& s, NormKind kind);

/// max(1, ||M_1||, ..., ||M_k||): the scale used to turn relative tolerances
/// into absolute ones.
double comparison_scale(std::initializer_list<const SymMatrix*> ms);

}  // namespace opmeans
