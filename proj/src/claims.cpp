#include "opmeans/claims.hpp"

#include <array>

#include "opmeans/errors.hpp"

namespace opmeans {

namespace {

// Notation in the anchors: N_t = A natural_t B, N = N_{1/2}, S_t = A #_t B,
// S = S_{1/2}, Mh = |A^{-1/2} B^{1/2} A^{1/2}|^2, P = A^{1/2} B^{1/2},
// V = A nabla B, H = A ! B, K = (h+1)^2/(4h), kappa(S,T) = ||S|| ||T||.
constexpr auto kCatalog = std::to_array<ClaimInfo>({
    {ClaimId::kEq1CongruenceIdentity, "eq1_congruence_identity",
     "P (A # B)^{-1} P^T = N", ClaimKind::kIdentity, InputProfile::kFreePair},
    {ClaimId::kInversion, "inversion",
     "(A natural_t B)^{-1} = A^{-1} natural_t B^{-1}, t in {1/2} u grid", ClaimKind::kIdentity,
     InputProfile::kFreePair},
    {ClaimId::kLemmaTwoIdentities, "lemma_two_identities",
     "N = A # Mh = A # |A^{1/2} B^{-1/2} A^{-1/2}|^{-2}", ClaimKind::kIdentity,
     InputProfile::kFreePair},
    {ClaimId::kRiccatiUnweighted, "riccati_unweighted",
     "X = N solves X A^{-1} X = Mh (and Mh = N_1)", ClaimKind::kIdentity, InputProfile::kFreePair},
    {ClaimId::kP3AnalogueMax, "p3_analogue_max",
     "N = max{X >= 0 : [[A, X], [X, Mh]] >= 0} (membership + sampled dominance)",
     ClaimKind::kBlockPsd, InputProfile::kFreePair},
    {ClaimId::kCorOrderBounds, "cor_order_bounds",
     "A <= B => A <= N <= Mh;  B <= A => Mh <= N <= A", ClaimKind::kLoewnerInequality,
     InputProfile::kOrderedEither},
    {ClaimId::kPropKappaUpper, "prop_kappa_upper",
     "Mh <= kappa(A^{-1},B) A;  A <= kappa(A,B^{-1}) |A^{1/2} B^{-1/2} A^{-1/2}|^{-2}",
     ClaimKind::kLoewnerInequality, InputProfile::kFreePair},
    {ClaimId::kCorTwoSidedKappa, "cor_two_sided_kappa",
     "A / sqrt(kappa(A,B^{-1})) <= N <= sqrt(kappa(A^{-1},B)) A", ClaimKind::kLoewnerInequality,
     InputProfile::kFreePair},
    {ClaimId::kThmBlockSqrtkappaSharp, "thm_block_sqrtkappa_sharp",
     "A <= B => [[sqrt(k) S, N], [N, sqrt(k) S]] >= 0, k = kappa(A^{-1},B)", ClaimKind::kBlockPsd,
     InputProfile::kALeB},
    {ClaimId::kCorSesquilinear, "cor_sesquilinear",
     "A <= B => |<N x, y>|^2 <= kappa(A^{-1},B) <S x, x> <S y, y>", ClaimKind::kScalarBound,
     InputProfile::kALeB},
    {ClaimId::kCorSharpSandwich, "cor_sharp_sandwich",
     "A <= B => N <= sqrt(kappa(A^{-1},B)) S;  B <= A => S / sqrt(kappa(A,B^{-1})) <= N",
     ClaimKind::kLoewnerInequality, InputProfile::kOrderedEither},
    {ClaimId::kPropBlockNabla, "prop_block_nabla", "[[N, P], [P^T, V]] >= 0",
     ClaimKind::kBlockPsd, InputProfile::kFreePair},
    {ClaimId::kLemmaKantorovich, "lemma_kantorovich",
     "mI <= A,B <= MI => V <= sqrt(K) S  and  A nabla Mh <= sqrt(K) N", ClaimKind::kLoewnerInequality,
     InputProfile::kFreePair},
    {ClaimId::kPropBlockHarmonicK, "prop_block_harmonic_K",
     "mI <= A,B <= MI => [[sqrt(K) H, P^T], [P, N]] >= 0", ClaimKind::kBlockPsd,
     InputProfile::kFreePair},
    {ClaimId::kRemarkMMBounds, "remark_mM_bounds",
     "mI <= A,B <= MI => |B^{1/2} A^{1/2}|^2 / M <= N <= |B^{1/2} A^{1/2}|^2 / m",
     ClaimKind::kLoewnerInequality, InputProfile::kFreePair},
    {ClaimId::kThmSvDirectSum, "thm_sv_direct_sum", "s_j(P) <= s_j(N (+) S), j = 1..n",
     ClaimKind::kSingularValue, InputProfile::kFreePair},
    {ClaimId::kProp31IThroughVii, "prop31_i_through_vii",
     "natural_t: commuting case, scaling, orthogonal congruence, inversion, endpoint geodesic, "
     "N_t = N N_{1-t}^{-1} N, N_s #_t N_u = N_{(1-t)s+tu}",
     ClaimKind::kIdentity, InputProfile::kFreePair},
    {ClaimId::kThmWeightedUniqueSolution, "thm_weighted_unique_solution",
     "the solution X of P X P^T = N_t is (A #_{1-t} B)^{-1}", ClaimKind::kIdentity,
     InputProfile::kFreePair},
    {ClaimId::kFurutaNote, "furuta_note", "N_t = P (A #_{1-t} B)^{-1} P^T", ClaimKind::kIdentity,
     InputProfile::kFreePair},
    {ClaimId::kCorUiNorm, "cor_ui_norm", "||P||_u^2 <= ||N_t||_u ||S_{1-t}||_u for every norm u",
     ClaimKind::kNormInequality, InputProfile::kFreePair},
    {ClaimId::kRemarkNaturalNorm, "remark_natural_norm",
     "||N||_u <= ||N_t||_u^{1/2} ||N_{1-t}||_u^{1/2}", ClaimKind::kNormInequality,
     InputProfile::kFreePair},
    {ClaimId::kThmEigenC, "thm_eigen_C",
     "C >= A + B => lambda_j(C + P + P^T) <= lambda_j(C + S_{1-t} + N_t)",
     ClaimKind::kEigenvalueInequality, InputProfile::kCDominates},
    {ClaimId::kCorEigenSumNorm, "cor_eigen_sum_norm",
     "||(A^{1/2} + B^{1/2})^2||_u <= ||A + B + S_{1-t} + N_t||_u", ClaimKind::kNormInequality,
     InputProfile::kFreePair},
    {ClaimId::kPropFtBounds, "prop_ft_bounds",
     "2A <= S_t + A S_t^{-1} A <= k_t A;  2A <= N_t + A N_t^{-1} A <= k_t A;  "
     "A <= (X + A X^{-1} A)/2 <= sqrt(K) A for X in {S, N}",
     ClaimKind::kLoewnerInequality, InputProfile::kFreePair},
    {ClaimId::kEntropyQuasiIdentity, "entropy_quasi_identity",
     "quasi_tsallis_t(A|B) = tsallis_t(N_0 | N_1)", ClaimKind::kIdentity, InputProfile::kFreePair},
    {ClaimId::kEntropyLimit, "entropy_limit",
     "||quasi_tsallis_eps(A|B) - quasi_relative_entropy(A|B)|| <= 1e-4 scale at eps = 1e-6",
     ClaimKind::kIdentity, InputProfile::kFreePair, 1e-4},
    {ClaimId::kEntropyMonotone, "entropy_monotone",
     "s <= t (s, t != 0) => quasi_tsallis_s <= quasi_tsallis_t", ClaimKind::kLoewnerInequality,
     InputProfile::kFreePair},
    {ClaimId::kEntropyLntBound, "entropy_lnt_bound",
     "quasi_tsallis_t(A|B) <= ln_t(kappa(A^{-1},B)) A, 0 < t <= 1", ClaimKind::kLoewnerInequality,
     InputProfile::kFreePair},
    {ClaimId::kEntropyConditionalOrder, "entropy_conditional_order",
     "N_1 <= S_1 => quasi_tsallis_t <= tsallis_t;  N_1 >= S_1 => quasi_tsallis_t >= tsallis_t",
     ClaimKind::kLoewnerInequality, InputProfile::kCommuting},
    {ClaimId::kEntropySandwichTheorem, "entropy_sandwich_theorem",
     "quasi_tsallis_{1/2} <= t quasi_tsallis_t + (1-t) quasi_tsallis_{1-t} <= quasi_tsallis_1",
     ClaimKind::kLoewnerInequality, InputProfile::kFreePair},
    {ClaimId::kEntropyRemarkChain, "entropy_remark_chain",
     "N_0 # N_1 = N <= (N_t + N_{1-t})/2 <= N_0 nabla N_1", ClaimKind::kLoewnerInequality,
     InputProfile::kFreePair},
    {ClaimId::kHeinzSandwich, "heinz_sandwich", "S <= (S_t + S_{1-t})/2 <= V",
     ClaimKind::kLoewnerInequality, InputProfile::kFreePair},
    {ClaimId::kNaturalSymmetry, "natural_symmetry", "A natural B = B natural A",
     ClaimKind::kCounterexample, InputProfile::kFreePair},
    {ClaimId::kNaturalBelowArithmetic, "natural_below_arithmetic", "N <= V",
     ClaimKind::kCounterexample, InputProfile::kFreePair},
    {ClaimId::kNaturalTransformerP4, "natural_transformer_P4",
     "X^T N X <= (X^T A X) natural (X^T B X)", ClaimKind::kCounterexample,
     InputProfile::kPairWithX},
    {ClaimId::kCondition26, "condition_26", "Mh <= B", ClaimKind::kCounterexample,
     InputProfile::kFreePair},
    {ClaimId::kNaturalVsSharpOrder, "natural_vs_sharp_order", "N <= S",
     ClaimKind::kCounterexample, InputProfile::kFreePair},
    {ClaimId::kSharpSandwichLowerIfALeB, "sharp_sandwich_lower_if_a_le_b",
     "A <= B => S / sqrt(kappa(A,B^{-1})) <= N", ClaimKind::kCounterexample, InputProfile::kALeB},
    {ClaimId::kBlockHarmonicPrintedOrientation, "block_harmonic_printed_orientation",
     "mI <= A,B <= MI => [[sqrt(K) H, P], [P^T, N]] >= 0", ClaimKind::kCounterexample,
     InputProfile::kFreePair},
});

}  // namespace

std::span<const ClaimInfo> catalog() { return kCatalog; }

const ClaimInfo& info(ClaimId id) {
  for (const ClaimInfo& c : kCatalog) {
    if (c.id == id) return c;
  }
  throw ParameterError("unknown claim id");
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const ClaimInfo& c : kCatalog) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::kIdentity:
      return "identity";
    case ClaimKind::kLoewnerInequality:
      return "loewner_inequality";
    case ClaimKind::kBlockPsd:
      return "block_psd";
    case ClaimKind::kSingularValue:
      return "singular_value";
    case ClaimKind::kNormInequality:
      return "norm_inequality";
    case ClaimKind::kEigenvalueInequality:
      return "eigenvalue_inequality";
    case ClaimKind::kScalarBound:
      return "scalar_bound";
    case ClaimKind::kCounterexample:
      return "counterexample";
  }
  return "unknown";
}

}  // namespace opmeans
