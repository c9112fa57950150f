#include "opmeans/check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "opmeans/entropy.hpp"
#include "opmeans/means.hpp"
#include "opmeans/random.hpp"

namespace opmeans {

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Accumulates normalized margins over the sub-comparisons of one claim.
class Collector {
 public:
  explicit Collector(double tol) : tol_(tol) {}

  void identity(const std::string& label, const SymMatrix& lhs, const SymMatrix& rhs) {
    identity(label, lhs.matrix(), rhs.matrix());
  }

  void identity(const std::string& label, const GeneralMatrix& lhs, const GeneralMatrix& rhs) {
    const double scale = std::max({1.0, spectral_norm(lhs), spectral_norm(rhs)});
    record(label, -spectral_norm(GeneralMatrix(lhs - rhs)) / scale);
  }

  // lo <= hi in the Loewner order.
  void loewner(const std::string& label, const SymMatrix& lo, const SymMatrix& hi) {
    const double scale = comparison_scale({&lo, &hi});
    record(label, loewner_margin(lo, hi) / scale);
  }

  void psd(const std::string& label, const SymMatrix& m) {
    const double scale = comparison_scale({&m});
    record(label, min_eigenvalue(m) / scale);
  }

  void scalar_leq(const std::string& label, double lo, double hi, double scale) {
    record(label, (hi - lo) / std::max({1.0, scale, std::abs(lo), std::abs(hi)}));
  }

  // The comparison must be violated by more than the tolerance: a raw margin
  // of -tol*scale maps to exactly -tol, anything above fails.
  void must_violate(const std::string& label, double margin, double scale) {
    record(label, -margin / std::max(1.0, scale) - 2.0 * tol_);
  }

  void note_t(double t) { ts_.insert(t); }

  CheckReport finish(ClaimId claim, const ClaimInputs& in) const {
    CheckReport r;
    r.claim = claim;
    r.margin_or_residual = worst_;
    r.tolerance = tol_;
    r.passed = worst_ >= -tol_;
    r.inputs_digest = InputsDigest{in.seed, in.a.dim(), {ts_.begin(), ts_.end()}};
    r.detail = worst_label_;
    return r;
  }

 private:
  void record(const std::string& label, double v) {
    if (std::isnan(v)) v = -std::numeric_limits<double>::infinity();
    if (v < worst_ || worst_label_.empty()) {
      worst_ = v;
      worst_label_ = label;
    }
  }

  double tol_;
  double worst_ = std::numeric_limits<double>::infinity();
  std::string worst_label_;
  std::set<double> ts_;
};

// Everything most claims need, computed once per check.
struct Common {
  const SymMatrix& a;
  const SymMatrix& b;
  SpdFunctions fa;
  SpdFunctions fb;
  NaturalPath natural;
  GeometricPath geometric;
  SymMatrix n;   // A natural B
  SymMatrix s;   // A # B
  SymMatrix mh;  // m_hat(A, B)
  GeneralMatrix p;  // A^{1/2} B^{1/2}

  Common(const SymMatrix& a_, const SymMatrix& b_)
      : a(a_),
        b(b_),
        fa(a_, "A"),
        fb(b_, "B"),
        natural(a_, b_),
        geometric(a_, b_),
        n(natural.at(0.5)),
        s(geometric.at(0.5)),
        mh(m_hat(a_, b_)),
        p(fa.sqrt().matrix() * fb.sqrt().matrix()) {}

  double kappa_ainv_b() const { return (1.0 / fa.min_eigenvalue()) * fb.max_eigenvalue(); }
  double kappa_a_binv() const { return fa.max_eigenvalue() * (1.0 / fb.min_eigenvalue()); }
};

SymMatrix inverse(const SymMatrix& m) { return SpdFunctions(m, "inverse").inverse(); }

double tau_for(const SymMatrix& x, const SymMatrix& y, double tol) {
  return tol * comparison_scale({&x, &y});
}

bool holds_leq(const SymMatrix& lo, const SymMatrix& hi, double tol) {
  return loewner_margin(lo, hi) >= -tau_for(lo, hi, tol);
}

void require_leq(const SymMatrix& lo, const SymMatrix& hi, double tol, const std::string& what) {
  const double margin = loewner_margin(lo, hi);
  if (margin < -tau_for(lo, hi, tol)) throw HypothesisNotMet(what, margin);
}

std::vector<double> unit_interval(const std::vector<double>& grid, bool drop_zero) {
  std::vector<double> out;
  for (double t : grid) {
    if (t < 0.0 || t > 1.0) continue;
    if (drop_zero && t == 0.0) continue;
    out.push_back(t);
  }
  return out;
}

std::string at_t(const std::string& label, double t) { return label + " t=" + fmt(t); }

std::vector<NormKind> norms_for(const ClaimInputs& in) {
  return in.norms.empty() ? all_norm_kinds(in.a.dim()) : in.norms;
}

// ---------------------------------------------------------------------------

void eq1_congruence_identity(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  c.identity("P (A#B)^-1 P^T vs N", congruence(k.p.transpose(), inverse(k.s)), k.n);
}

void inversion(const ClaimInputs& in, Collector& c) {
  const NaturalPath direct(in.a, in.b);
  const NaturalPath inverted(inverse(in.a), inverse(in.b));
  std::vector<double> ts = unit_interval(in.t_grid, false);
  ts.push_back(0.5);
  for (double t : ts) {
    c.note_t(t);
    c.identity(at_t("(N_t)^-1 vs A^-1 N_t B^-1", t), inverse(direct.at(t)), inverted.at(t));
  }
}

void lemma_two_identities(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  c.identity("N vs A # Mh", k.n, geometric_mean_t(in.a, k.mh, 0.5));
  // |Z|^{-2} with Z = A^{1/2} B^{-1/2} A^{-1/2}.
  const GeneralMatrix z = k.fa.sqrt().matrix() * k.fb.inv_sqrt().matrix() * k.fa.inv_sqrt().matrix();
  const SymMatrix z_abs_sq = congruence(z, SymMatrix::identity(in.a.dim()));
  c.identity("N vs A # |Z|^-2", k.n, geometric_mean_t(in.a, inverse(z_abs_sq), 0.5));
}

void riccati_unweighted(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  c.identity("N A^-1 N vs Mh", congruence(k.n.matrix(), k.fa.inverse()), k.mh);
  c.identity("Mh vs N_1", k.mh, k.natural.at(1.0));
}

void p3_analogue_max(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  c.psd("[[A, N], [N, Mh]] >= 0", block2(in.a, k.n.matrix(), k.mh));

  const double mh_scale = comparison_scale({&k.mh});
  const double n_scale = comparison_scale({&k.n});
  for (double eps : {1e-3, 1e-2}) {
    RandomSpec spec{in.a.dim(), derive_seed(in.seed, 0x9A3, static_cast<std::uint64_t>(1e4 * eps)),
                    10.0, 1.0};
    const SymMatrix dir = random_spd(spec);
    const SymMatrix y = k.n + dir * (eps * n_scale / spectral_norm(dir));
    // Schur complement of the A block: Mh - Y A^{-1} Y.
    const double margin = schur_psd(k.mh, y.matrix(), in.a);
    c.must_violate("N + eps P not feasible, eps=" + fmt(eps), margin, mh_scale);
  }
}

enum class Ordering { kALeB, kBLeA, kBoth };

Ordering ordering_of(const SymMatrix& a, const SymMatrix& b, double tol) {
  const bool le = holds_leq(a, b, tol);
  const bool ge = holds_leq(b, a, tol);
  if (le && ge) return Ordering::kBoth;
  if (le) return Ordering::kALeB;
  if (ge) return Ordering::kBLeA;
  throw HypothesisNotMet("A <= B or B <= A", std::max(loewner_margin(a, b), loewner_margin(b, a)));
}

void cor_order_bounds(const ClaimInputs& in, Collector& c, double tol) {
  const Ordering ord = ordering_of(in.a, in.b, tol);
  const Common k(in.a, in.b);
  if (ord != Ordering::kBLeA) {
    c.loewner("(i) A <= N", in.a, k.n);
    c.loewner("(i) N <= Mh", k.n, k.mh);
  }
  if (ord != Ordering::kALeB) {
    c.loewner("(ii) Mh <= N", k.mh, k.n);
    c.loewner("(ii) N <= A", k.n, in.a);
  }
}

void prop_kappa_upper(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const double k1 = kappa(k.fa.inverse(), in.b);
  const double k2 = kappa(in.a, k.fb.inverse());
  c.loewner("Mh <= kappa(A^-1,B) A", k.mh, in.a * k1);
  const GeneralMatrix z = k.fa.sqrt().matrix() * k.fb.inv_sqrt().matrix() * k.fa.inv_sqrt().matrix();
  const SymMatrix z_abs_inv_sq = inverse(congruence(z, SymMatrix::identity(in.a.dim())));
  c.loewner("A <= kappa(A,B^-1) |Z|^-2", in.a, z_abs_inv_sq * k2);
}

void cor_two_sided_kappa(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  c.loewner("A/sqrt(kappa(A,B^-1)) <= N", in.a / std::sqrt(k.kappa_a_binv()), k.n);
  c.loewner("N <= sqrt(kappa(A^-1,B)) A", k.n, in.a * std::sqrt(k.kappa_ainv_b()));
}

void thm_block_sqrtkappa_sharp(const ClaimInputs& in, Collector& c, double tol) {
  require_leq(in.a, in.b, tol, "A <= B");
  const Common k(in.a, in.b);
  const SymMatrix diag = k.s * std::sqrt(k.kappa_ainv_b());
  c.psd("[[sqrt(k) S, N], [N, sqrt(k) S]] >= 0", block2(diag, k.n.matrix(), diag));
}

void cor_sesquilinear(const ClaimInputs& in, Collector& c, double tol) {
  require_leq(in.a, in.b, tol, "A <= B");
  const Common k(in.a, in.b);
  const double k1 = k.kappa_ainv_b();
  Rng rng(derive_seed(in.seed, 0x5E5));
  for (int i = 0; i < 50; ++i) {
    const Vector x = random_unit_vector(in.a.dim(), rng);
    const Vector y = random_unit_vector(in.a.dim(), rng);
    for (const auto& [u, v, tag] : {std::tuple{x, y, "x,y"}, std::tuple{x, x, "x,x"}}) {
      const double inner = v.dot(k.n.matrix() * u);
      const double lhs = inner * inner;
      const double rhs = k1 * u.dot(k.s.matrix() * u) * v.dot(k.s.matrix() * v);
      c.scalar_leq(std::string("|<Nx,y>|^2 sample ") + std::to_string(i) + " " + tag, lhs, rhs, 1.0);
    }
  }
}

void cor_sharp_sandwich(const ClaimInputs& in, Collector& c, double tol) {
  const Ordering ord = ordering_of(in.a, in.b, tol);
  const Common k(in.a, in.b);
  if (ord != Ordering::kBLeA) {
    c.loewner("A <= B: N <= sqrt(kappa(A^-1,B)) S", k.n, k.s * std::sqrt(k.kappa_ainv_b()));
  }
  if (ord != Ordering::kALeB) {
    c.loewner("B <= A: S/sqrt(kappa(A,B^-1)) <= N", k.s / std::sqrt(k.kappa_a_binv()), k.n);
  }
}

void prop_block_nabla(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  c.psd("[[N, P], [P^T, A nabla B]] >= 0", block2(k.n, k.p, arithmetic_mean(in.a, in.b)));
}

void lemma_kantorovich(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const ScalarBounds bounds = ScalarBounds::from_spectra(in.a, in.b);
  const double root_k = std::sqrt(kantorovich(bounds.h()));
  c.loewner("A nabla B <= sqrt(K) S", arithmetic_mean(in.a, in.b), k.s * root_k);
  c.loewner("A nabla Mh <= sqrt(K) N", arithmetic_mean(in.a, k.mh), k.n * root_k);
}

void prop_block_harmonic_k(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const ScalarBounds bounds = ScalarBounds::from_spectra(in.a, in.b);
  const double root_k = std::sqrt(kantorovich(bounds.h()));
  c.psd("[[sqrt(K) H, P^T], [P, N]] >= 0",
        block2(harmonic_mean(in.a, in.b) * root_k, k.p.transpose(), k.n));
}

void remark_mm_bounds(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const ScalarBounds bounds = ScalarBounds::from_spectra(in.a, in.b);
  // |B^{1/2} A^{1/2}|^2 = A^{1/2} B A^{1/2}
  const SymMatrix q = congruence(k.fa.sqrt().matrix(), in.b);
  c.loewner("|B^1/2 A^1/2|^2 / M <= N", q / bounds.M, k.n);
  c.loewner("N <= |B^1/2 A^1/2|^2 / m", k.n, q / bounds.m);
}

void thm_sv_direct_sum(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const Vector sp = singular_values(k.p);
  const Vector sd = singular_values(direct_sum(k.n, k.s).matrix());
  const double scale = std::max(sp(0), sd(0));
  for (int j = 0; j < in.a.dim(); ++j) {
    c.scalar_leq("s_j(P) <= s_j(N (+) S), j=" + std::to_string(j + 1), sp(j), sd(j), scale);
  }
}

void prop31_i_through_vii(const ClaimInputs& in, Collector& c) {
  const int n = in.a.dim();
  const Common k(in.a, in.b);
  Rng rng(derive_seed(in.seed, 0x31));

  // (i) on the commuting companion of (A, B): B's spectrum in A's eigenbasis.
  const SpdDecomposition da = k.fa.decomposition();
  const SymMatrix b_comm = symmetrize(da.eigenvectors * k.fb.decomposition().eigenvalues.asDiagonal() *
                                      da.eigenvectors.transpose());
  const NaturalPath comm(in.a, b_comm);
  const SpdFunctions fbc(b_comm, "commuting companion");

  const NaturalPath inverted(k.fa.inverse(), k.fb.inverse());
  const SymMatrix n0 = k.natural.at(0.0);
  const SymMatrix n1 = k.natural.at(1.0);

  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  const std::vector<double> ts = unit_interval(in.t_grid, false);
  for (double t : ts) {
    c.note_t(t);
    const SymMatrix nt = k.natural.at(t);

    c.identity(at_t("(i) commuting: N_t vs A^{1-t} B^t", t), comm.at(t).matrix(),
               symmetrize(k.fa.power(1.0 - t).matrix() * fbc.power(t).matrix()).matrix());

    const double alpha = std::exp(log_scale(rng));
    const double beta = std::exp(log_scale(rng));
    c.identity(at_t("(ii) scaling", t), natural_t(in.a * alpha, in.b * beta, t),
               nt * (std::pow(alpha, 1.0 - t) * std::pow(beta, t)));

    const GeneralMatrix u = random_orthogonal(n, rng);
    c.identity(at_t("(iii) orthogonal congruence", t),
               natural_t(congruence(u, in.a), congruence(u, in.b), t), congruence(u, nt));

    c.identity(at_t("(iv) inversion", t), inverse(nt), inverted.at(t));

    c.identity(at_t("(v) N_t vs A #_t Mh", t), nt, geometric_mean_t(in.a, k.mh, t));
    c.identity(at_t("(v) N_t vs N_0 #_t N_1", t), nt, geometric_mean_t(n0, n1, t));

    c.identity(at_t("(vi) N_t vs N N_{1-t}^-1 N", t), nt,
               congruence(k.n.matrix(), inverse(k.natural.at(1.0 - t))));
  }

  constexpr double kEndpoints[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<SymMatrix> ns;
  for (double s : kEndpoints) ns.push_back(k.natural.at(s));
  for (std::size_t i = 0; i < std::size(kEndpoints); ++i) {
    for (std::size_t j = 0; j < std::size(kEndpoints); ++j) {
      for (double t : ts) {
        const double s = kEndpoints[i];
        const double u = kEndpoints[j];
        c.identity("(vii) N_s #_t N_u, s=" + fmt(s) + " t=" + fmt(t) + " u=" + fmt(u),
                   geometric_mean_t(ns[i], ns[j], t), k.natural.at((1.0 - t) * s + t * u));
      }
    }
  }
}

void thm_weighted_unique_solution(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  // P^{-1} = B^{-1/2} A^{-1/2}; the solution of P X P^T = N_t is P^{-1} N_t P^{-T}.
  const GeneralMatrix p_inv = k.fb.inv_sqrt().matrix() * k.fa.inv_sqrt().matrix();
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const SymMatrix x = congruence(p_inv.transpose(), k.natural.at(t));
    c.identity(at_t("X vs (A #_{1-t} B)^-1", t), x, inverse(k.geometric.at(1.0 - t)));
  }
}

void furuta_note(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    c.identity(at_t("N_t vs P (A #_{1-t} B)^-1 P^T", t), k.natural.at(t),
               congruence(k.p.transpose(), inverse(k.geometric.at(1.0 - t))));
  }
}

void cor_ui_norm(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const Vector sp = singular_values(k.p);
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const Vector sn = singular_values(k.natural.at(t).matrix());
    const Vector ss = singular_values(k.geometric.at(1.0 - t).matrix());
    for (const NormKind& kind : norms_for(in)) {
      const double lhs = std::pow(ui_norm_from_singular_values(sp, kind), 2);
      const double rhs = ui_norm_from_singular_values(sn, kind) * ui_norm_from_singular_values(ss, kind);
      c.scalar_leq(at_t("||P||^2 <= ||N_t|| ||S_{1-t}|| " + kind.to_string(), t), lhs, rhs, 1.0);
    }
  }
}

void remark_natural_norm(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const Vector s_half = singular_values(k.n.matrix());
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const Vector st = singular_values(k.natural.at(t).matrix());
    const Vector su = singular_values(k.natural.at(1.0 - t).matrix());
    for (const NormKind& kind : norms_for(in)) {
      const double lhs = ui_norm_from_singular_values(s_half, kind);
      const double rhs = std::sqrt(ui_norm_from_singular_values(st, kind) *
                                   ui_norm_from_singular_values(su, kind));
      c.scalar_leq(at_t("||N|| <= sqrt(||N_t|| ||N_{1-t}||) " + kind.to_string(), t), lhs, rhs, 1.0);
    }
  }
}

void thm_eigen_c(const ClaimInputs& in, Collector& c, double tol) {
  if (!in.c) throw HypothesisNotMet("C supplied with C >= A + B", 0.0);
  const SymMatrix sum = in.a + in.b;
  require_leq(sum, *in.c, tol, "C >= A + B");
  const Common k(in.a, in.b);
  const Vector lhs = eigenvalues(symmetrize(in.c->matrix() + k.p + k.p.transpose()));
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const Vector rhs = eigenvalues(*in.c + k.geometric.at(1.0 - t) + k.natural.at(t));
    const double scale = std::max(std::abs(lhs(0)), std::abs(rhs(0)));
    for (int j = 0; j < in.a.dim(); ++j) {
      c.scalar_leq(at_t("lambda_j, j=" + std::to_string(j + 1), t), lhs(j), rhs(j), scale);
    }
  }
}

void cor_eigen_sum_norm(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const GeneralMatrix root_sum = k.fa.sqrt().matrix() + k.fb.sqrt().matrix();
  const Vector sl = singular_values(root_sum * root_sum);
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const Vector sr =
        singular_values((in.a + in.b + k.geometric.at(1.0 - t) + k.natural.at(t)).matrix());
    for (const NormKind& kind : norms_for(in)) {
      c.scalar_leq(at_t("||(A^1/2+B^1/2)^2|| <= ||A+B+S_{1-t}+N_t|| " + kind.to_string(), t),
                   ui_norm_from_singular_values(sl, kind), ui_norm_from_singular_values(sr, kind), 1.0);
    }
  }
}

void prop_ft_bounds(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const RatioBounds rg = RatioBounds::geometric(in.a, in.b);
  const RatioBounds rn = RatioBounds::natural(in.a, in.b);
  const SymMatrix two_a = in.a * 2.0;
  auto reflected_sum = [&](const SymMatrix& x) { return x + congruence(in.a.matrix(), inverse(x)); };
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const SymMatrix ys = reflected_sum(k.geometric.at(t));
    c.loewner(at_t("2A <= S_t + A S_t^-1 A", t), two_a, ys);
    c.loewner(at_t("S_t + A S_t^-1 A <= k_t A", t), ys, in.a * k_t(rg.alpha, rg.beta, t));
    const SymMatrix yn = reflected_sum(k.natural.at(t));
    c.loewner(at_t("2A <= N_t + A N_t^-1 A", t), two_a, yn);
    c.loewner(at_t("N_t + A N_t^-1 A <= k_t A", t), yn, in.a * k_t(rn.alpha, rn.beta, t));
  }
  const ScalarBounds bounds = ScalarBounds::from_spectra(in.a, in.b);
  const double root_k = std::sqrt(kantorovich(bounds.h()));
  for (const auto& [x, tag] : {std::pair{k.s, "S"}, std::pair{k.n, "N"}}) {
    const SymMatrix half = reflected_sum(x) * 0.5;
    c.loewner(std::string("A <= (X + A X^-1 A)/2, X=") + tag, in.a, half);
    c.loewner(std::string("(X + A X^-1 A)/2 <= sqrt(K) A, X=") + tag, half, in.a * root_k);
  }
}

void entropy_quasi_identity(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  for (double t : unit_interval(in.t_grid, true)) {
    c.note_t(t);
    const SymMatrix qt = quasi_tsallis(in.a, in.b, t);
    c.identity(at_t("quasi_tsallis vs tsallis(N_0|N_1)", t), qt, tsallis(in.a, k.mh, t));
    c.identity(at_t("quasi_tsallis vs (N_t - A)/t", t), qt, (k.natural.at(t) - in.a) / t);
  }
}

void entropy_limit(const ClaimInputs& in, Collector& c) {
  constexpr double kEps = 1e-6;
  c.note_t(kEps);
  const SymMatrix limit = quasi_relative_entropy(in.a, in.b);
  const SymMatrix probe = quasi_tsallis(in.a, in.b, kEps);
  const double scale = comparison_scale({&limit, &in.a});
  c.scalar_leq("||quasi_tsallis_eps - S_hat||", spectral_norm(probe - limit), 0.0, scale);
}

void entropy_monotone(const ClaimInputs& in, Collector& c) {
  std::set<double> grid{-1.0, -0.5, 0.1, 0.5, 1.0};
  for (double t : in.t_grid) {
    if (t != 0.0) grid.insert(t);
  }
  const std::vector<double> ts(grid.begin(), grid.end());
  std::vector<SymMatrix> q;
  for (double t : ts) {
    c.note_t(t);
    q.push_back(quasi_tsallis(in.a, in.b, t));
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      c.loewner("T_s <= T_t, s=" + fmt(ts[i]) + " t=" + fmt(ts[j]), q[i], q[j]);
    }
  }
}

void entropy_lnt_bound(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const double k1 = kappa(k.fa.inverse(), in.b);
  for (double t : unit_interval(in.t_grid, true)) {
    c.note_t(t);
    c.loewner(at_t("quasi_tsallis_t <= ln_t(kappa) A", t), quasi_tsallis(in.a, in.b, t),
              in.a * ln_t(k1, t));
  }
}

void entropy_conditional_order(const ClaimInputs& in, Collector& c, double tol) {
  const SymMatrix mh = m_hat(in.a, in.b);
  const bool le = holds_leq(mh, in.b, tol);
  const bool ge = holds_leq(in.b, mh, tol);
  if (!le && !ge) {
    throw HypothesisNotMet("A natural_1 B <= A #_1 B or A natural_1 B >= A #_1 B",
                           std::max(loewner_margin(mh, in.b), loewner_margin(in.b, mh)));
  }
  for (double t : unit_interval(in.t_grid, true)) {
    c.note_t(t);
    const SymMatrix quasi = quasi_tsallis(in.a, in.b, t);
    const SymMatrix plain = tsallis(in.a, in.b, t);
    if (le) c.loewner(at_t("(i) quasi_tsallis_t <= tsallis_t", t), quasi, plain);
    if (ge) c.loewner(at_t("(ii) quasi_tsallis_t >= tsallis_t", t), plain, quasi);
  }
}

void entropy_sandwich_theorem(const ClaimInputs& in, Collector& c) {
  const SymMatrix lo = quasi_tsallis(in.a, in.b, 0.5);
  const SymMatrix hi = quasi_tsallis(in.a, in.b, 1.0);
  const SymMatrix zero = SymMatrix::zero(in.a.dim());
  auto weighted = [&](double t) { return t == 0.0 ? zero : quasi_tsallis(in.a, in.b, t) * t; };
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const SymMatrix mid = weighted(t) + weighted(1.0 - t);
    c.loewner(at_t("T_1/2 <= t T_t + (1-t) T_{1-t}", t), lo, mid);
    c.loewner(at_t("t T_t + (1-t) T_{1-t} <= T_1", t), mid, hi);
  }
}

void entropy_remark_chain(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const SymMatrix n0 = k.natural.at(0.0);
  const SymMatrix n1 = k.natural.at(1.0);
  c.identity("N_0 # N_1 vs N", geometric_mean_t(n0, n1, 0.5), k.n);
  const SymMatrix top = arithmetic_mean(n0, n1);
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const SymMatrix mid = arithmetic_mean(k.natural.at(t), k.natural.at(1.0 - t));
    c.loewner(at_t("N <= (N_t + N_{1-t})/2", t), k.n, mid);
    c.loewner(at_t("(N_t + N_{1-t})/2 <= N_0 nabla N_1", t), mid, top);
  }
}

void heinz_sandwich(const ClaimInputs& in, Collector& c) {
  const SymMatrix s = geometric_mean_t(in.a, in.b, 0.5);
  const SymMatrix v = arithmetic_mean(in.a, in.b);
  for (double t : unit_interval(in.t_grid, false)) {
    c.note_t(t);
    const SymMatrix hz = heinz(in.a, in.b, t);
    c.loewner(at_t("S <= Hz_t", t), s, hz);
    c.loewner(at_t("Hz_t <= A nabla B", t), hz, v);
  }
}

// Statements that are false in general.

void natural_symmetry(const ClaimInputs& in, Collector& c) {
  c.identity("A natural B vs B natural A", natural_t(in.a, in.b), natural_t(in.b, in.a));
}

void natural_below_arithmetic(const ClaimInputs& in, Collector& c) {
  c.loewner("N <= A nabla B", natural_t(in.a, in.b), arithmetic_mean(in.a, in.b));
}

void natural_transformer_p4(const ClaimInputs& in, Collector& c) {
  if (!in.x) throw ParameterError("natural_transformer_P4 requires a matrix X");
  const GeneralMatrix& x = *in.x;
  if (x.rows() != in.a.dim() || x.cols() != in.a.dim()) {
    throw DimensionError("natural_transformer_P4: X must be square of the same dimension as A");
  }
  c.loewner("X^T N X <= (X^T A X) natural (X^T B X)", congruence(x, natural_t(in.a, in.b)),
            natural_t(congruence(x, in.a), congruence(x, in.b)));
}

void condition_26(const ClaimInputs& in, Collector& c) {
  c.loewner("Mh <= B", m_hat(in.a, in.b), in.b);
}

void natural_vs_sharp_order(const ClaimInputs& in, Collector& c) {
  c.loewner("N <= S", natural_t(in.a, in.b), geometric_mean_t(in.a, in.b));
}

void sharp_sandwich_lower_if_a_le_b(const ClaimInputs& in, Collector& c, double tol) {
  require_leq(in.a, in.b, tol, "A <= B");
  const Common k(in.a, in.b);
  c.loewner("S/sqrt(kappa(A,B^-1)) <= N", k.s / std::sqrt(k.kappa_a_binv()), k.n);
}

void block_harmonic_printed_orientation(const ClaimInputs& in, Collector& c) {
  const Common k(in.a, in.b);
  const ScalarBounds bounds = ScalarBounds::from_spectra(in.a, in.b);
  const double root_k = std::sqrt(kantorovich(bounds.h()));
  c.psd("[[sqrt(K) H, P], [P^T, N]] >= 0", block2(harmonic_mean(in.a, in.b) * root_k, k.p, k.n));
}

}  // namespace

CheckReport check(ClaimId claim, const ClaimInputs& in, const CheckOptions& options) {
  if (in.a.dim() != in.b.dim()) throw DimensionError("check: A and B differ in dimension");
  if (in.c && in.c->dim() != in.a.dim()) throw DimensionError("check: C differs in dimension");
  require_positive_definite(in.a, "A");
  require_positive_definite(in.b, "B");

  const ClaimInfo& ci = info(claim);
  const double tol = ci.fixed_tolerance.value_or(options.rel_tol);
  if (!(tol >= 0.0)) throw ParameterError("check: tolerance must be >= 0");
  Collector c(tol);
  const double hyp_tol = options.rel_tol;

  switch (claim) {
    case ClaimId::kEq1CongruenceIdentity: eq1_congruence_identity(in, c); break;
    case ClaimId::kInversion: inversion(in, c); break;
    case ClaimId::kLemmaTwoIdentities: lemma_two_identities(in, c); break;
    case ClaimId::kRiccatiUnweighted: riccati_unweighted(in, c); break;
    case ClaimId::kP3AnalogueMax: p3_analogue_max(in, c); break;
    case ClaimId::kCorOrderBounds: cor_order_bounds(in, c, hyp_tol); break;
    case ClaimId::kPropKappaUpper: prop_kappa_upper(in, c); break;
    case ClaimId::kCorTwoSidedKappa: cor_two_sided_kappa(in, c); break;
    case ClaimId::kThmBlockSqrtkappaSharp: thm_block_sqrtkappa_sharp(in, c, hyp_tol); break;
    case ClaimId::kCorSesquilinear: cor_sesquilinear(in, c, hyp_tol); break;
    case ClaimId::kCorSharpSandwich: cor_sharp_sandwich(in, c, hyp_tol); break;
    case ClaimId::kPropBlockNabla: prop_block_nabla(in, c); break;
    case ClaimId::kLemmaKantorovich: lemma_kantorovich(in, c); break;
    case ClaimId::kPropBlockHarmonicK: prop_block_harmonic_k(in, c); break;
    case ClaimId::kRemarkMMBounds: remark_mm_bounds(in, c); break;
    case ClaimId::kThmSvDirectSum: thm_sv_direct_sum(in, c); break;
    case ClaimId::kProp31IThroughVii: prop31_i_through_vii(in, c); break;
    case ClaimId::kThmWeightedUniqueSolution: thm_weighted_unique_solution(in, c); break;
    case ClaimId::kFurutaNote: furuta_note(in, c); break;
    case ClaimId::kCorUiNorm: cor_ui_norm(in, c); break;
    case ClaimId::kRemarkNaturalNorm: remark_natural_norm(in, c); break;
    case ClaimId::kThmEigenC: thm_eigen_c(in, c, hyp_tol); break;
    case ClaimId::kCorEigenSumNorm: cor_eigen_sum_norm(in, c); break;
    case ClaimId::kPropFtBounds: prop_ft_bounds(in, c); break;
    case ClaimId::kEntropyQuasiIdentity: entropy_quasi_identity(in, c); break;
    case ClaimId::kEntropyLimit: entropy_limit(in, c); break;
    case ClaimId::kEntropyMonotone: entropy_monotone(in, c); break;
    case ClaimId::kEntropyLntBound: entropy_lnt_bound(in, c); break;
    case ClaimId::kEntropyConditionalOrder: entropy_conditional_order(in, c, hyp_tol); break;
    case ClaimId::kEntropySandwichTheorem: entropy_sandwich_theorem(in, c); break;
    case ClaimId::kEntropyRemarkChain: entropy_remark_chain(in, c); break;
    case ClaimId::kHeinzSandwich: heinz_sandwich(in, c); break;
    case ClaimId::kNaturalSymmetry: natural_symmetry(in, c); break;
    case ClaimId::kNaturalBelowArithmetic: natural_below_arithmetic(in, c); break;
    case ClaimId::kNaturalTransformerP4: natural_transformer_p4(in, c); break;
    case ClaimId::kCondition26: condition_26(in, c); break;
    case ClaimId::kNaturalVsSharpOrder: natural_vs_sharp_order(in, c); break;
    case ClaimId::kSharpSandwichLowerIfALeB: sharp_sandwich_lower_if_a_le_b(in, c, hyp_tol); break;
    case ClaimId::kBlockHarmonicPrintedOrientation: block_harmonic_printed_orientation(in, c); break;
  }
  return c.finish(claim, in);
}

}  // namespace opmeans
