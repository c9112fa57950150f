#include "opmeans/check.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "opmeans/means.hpp"
#include "opmeans/reference_examples.hpp"
#include "opmeans/trial_inputs.hpp"

namespace opmeans {
namespace {

const SymMatrix kA{{2.0, 1.0}, {1.0, 2.0}};
const SymMatrix kB{{2.0, -2.0}, {-2.0, 5.0}};

TEST(CheckTest, RiccatiOnReferencePair) {
  const CheckReport r = check(ClaimId::kRiccatiUnweighted, ClaimInputs(kA, kB));
  EXPECT_TRUE(r.passed);
  EXPECT_GE(r.margin_or_residual, -1e-9);
  EXPECT_EQ(r.tolerance, kDefaultRelTol);
  EXPECT_EQ(r.inputs_digest.dim, 2);
}

TEST(CheckTest, TwoSidedKappaOnReferencePair) {
  const CheckReport r = check(ClaimId::kCorTwoSidedKappa, ClaimInputs(kA, kB));
  EXPECT_TRUE(r.passed) << r.detail;
  // Independent evaluation of both sides: kappa(A, B^-1) = 3, kappa(A^-1, B) = 6.
  const GeneralMatrix n = testing::oracle_natural(kA.matrix(), kB.matrix(), 0.5);
  EXPECT_GE(testing::oracle_eigenvalues_desc(n - kA.matrix() / std::sqrt(3.0)).minCoeff(), -1e-12);
  EXPECT_GE(testing::oracle_eigenvalues_desc(std::sqrt(6.0) * kA.matrix() - n).minCoeff(), -1e-12);
}

TEST(CheckTest, EveryTheoremClaimPassesOnConformingInputs) {
  for (const ClaimInfo& ci : catalog()) {
    if (is_falsifiable(ci.id)) continue;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const RandomSpec spec{2 + static_cast<int>(seed) * 2, derive_seed(77, seed), 1e3, 1.0};
      const CheckReport r = check(ci.id, make_trial_inputs(ci.id, spec));
      EXPECT_TRUE(r.passed) << ci.name << " seed " << seed << ": " << r.margin_or_residual << " at " << r.detail;
    }
  }
}

TEST(CheckTest, TheoremClaimsHoldOnReferencePair) {
  // The pair is not Loewner-ordered, so claims with an order hypothesis are skipped.
  ClaimInputs in(kA, kB);
  in.c = kA + kB + SymMatrix::identity(2);
  for (const ClaimInfo& ci : catalog()) {
    if (is_falsifiable(ci.id) || ci.profile == InputProfile::kALeB || ci.profile == InputProfile::kOrderedEither ||
        ci.profile == InputProfile::kCommuting) {
      continue;
    }
    const CheckReport r = check(ci.id, in);
    EXPECT_TRUE(r.passed) << ci.name << ": " << r.margin_or_residual << " at " << r.detail;
  }
}

TEST(CheckTest, RejectsUnmetHypotheses) {
  // A and B of the reference pair are not comparable.
  EXPECT_THROW(check(ClaimId::kThmBlockSqrtkappaSharp, ClaimInputs(kA, kB)), HypothesisNotMet);
  EXPECT_THROW(check(ClaimId::kCorSesquilinear, ClaimInputs(kA, kB)), HypothesisNotMet);
  EXPECT_THROW(check(ClaimId::kCorOrderBounds, ClaimInputs(kA, kB)), HypothesisNotMet);
  EXPECT_THROW(check(ClaimId::kCorSharpSandwich, ClaimInputs(kA, kB)), HypothesisNotMet);
  EXPECT_THROW(check(ClaimId::kEntropyConditionalOrder, ClaimInputs(kA, kB)), HypothesisNotMet);
  EXPECT_THROW(check(ClaimId::kThmEigenC, ClaimInputs(kA, kB)), HypothesisNotMet);
  ClaimInputs small_c(kA, kB);
  small_c.c = kA + kB - SymMatrix::identity(2) * 0.1;
  try {
    check(ClaimId::kThmEigenC, small_c);
    FAIL();
  } catch (const HypothesisNotMet& e) {
    EXPECT_EQ(e.hypothesis(), "C >= A + B");
    EXPECT_NEAR(e.margin(), -0.1, 1e-12);
  }
  // A <= B holds for (A, A + I): accepted.
  EXPECT_NO_THROW(check(ClaimId::kThmBlockSqrtkappaSharp, ClaimInputs(kA, kA + SymMatrix::identity(2))));
}

TEST(CheckTest, RejectsInvalidOperands) {
  EXPECT_THROW(check(ClaimId::kInversion, ClaimInputs(kA, SymMatrix{{1.0, 2.0}, {2.0, 1.0}})), NotPositiveDefinite);
  EXPECT_THROW(check(ClaimId::kInversion, ClaimInputs(kA, SymMatrix::identity(3))), DimensionError);
  EXPECT_THROW(check(ClaimId::kNaturalTransformerP4, ClaimInputs(kA, kB)), ParameterError);
}

TEST(CheckTest, OrderBoundsBothDirections) {
  const SymMatrix big = kA + SymMatrix{{1.0, 0.2}, {0.2, 0.5}};
  const CheckReport up = check(ClaimId::kCorOrderBounds, ClaimInputs(kA, big));
  EXPECT_TRUE(up.passed);
  const CheckReport down = check(ClaimId::kCorOrderBounds, ClaimInputs(big, kA));
  EXPECT_TRUE(down.passed);
  EXPECT_EQ(up.detail.rfind("(i) ", 0), 0u);
  EXPECT_EQ(down.detail.rfind("(ii) ", 0), 0u);
}

TEST(CheckTest, SharpSandwichLowerBoundNeedsReverseOrder) {
  // With B <= A the lower bound is evaluated and holds.
  const SymMatrix small = kA * 0.3 + SymMatrix::identity(2) * 0.1;
  EXPECT_TRUE(check(ClaimId::kCorSharpSandwich, ClaimInputs(kA, small)).passed);
  EXPECT_TRUE(check(ClaimId::kSharpSandwichLowerIfALeB, ClaimInputs(kA, kA)).passed);
}

TEST(CheckTest, CounterexamplesOnReferenceInputs) {
  const ReferenceMatrices r = reference_matrices();

  const CheckReport sym = check(ClaimId::kNaturalSymmetry, ClaimInputs(r.a, r.b));
  EXPECT_FALSE(sym.passed);
  const double gap = (natural_t(r.a, r.b) - natural_t(r.b, r.a)).matrix().norm();
  EXPECT_GT(gap, 1e-2);

  const CheckReport cond = check(ClaimId::kCondition26, ClaimInputs(r.a_condition, r.b_condition));
  EXPECT_FALSE(cond.passed);
  // lambda_min(B - Mh) is about -0.21; the margin is that divided by the scale.
  const double scale = std::max(1.0, spectral_norm(m_hat(r.a_condition, r.b_condition)));
  EXPECT_NEAR(cond.margin_or_residual * scale, -0.21, 5e-2);

  ClaimInputs p4(r.a, r.b);
  p4.x = r.c.matrix();
  EXPECT_FALSE(check(ClaimId::kNaturalTransformerP4, p4).passed);

  EXPECT_FALSE(check(ClaimId::kNaturalBelowArithmetic, ClaimInputs(r.a, r.b_flipped)).passed);
}

TEST(CheckTest, PrintedPairSatisfiesArithmeticBound) {
  // A nabla B - A natural B for the printed pair: trace and determinant are
  // both positive, so the inequality holds there.
  const ReferenceMatrices r = reference_matrices();
  const GeneralMatrix d = arithmetic_mean(r.a, r.b).matrix() - testing::oracle_natural(r.a.matrix(), r.b.matrix(), 0.5);
  EXPECT_GT(d.trace(), 0.0);
  EXPECT_GT(d.determinant(), 0.0);
  EXPECT_TRUE(check(ClaimId::kNaturalBelowArithmetic, ClaimInputs(r.a, r.b)).passed);
}

TEST(CheckTest, PerturbationAboveNaturalLeavesFeasibleSet) {
  // Independent of the check: block2(A, N + eps P, Mh) has a negative eigenvalue.
  const GeneralMatrix n = testing::oracle_natural(kA.matrix(), kB.matrix(), 0.5);
  const GeneralMatrix mh = testing::oracle_natural(kA.matrix(), kB.matrix(), 1.0);
  const GeneralMatrix p = GeneralMatrix::Identity(2, 2);
  GeneralMatrix block(4, 4);
  block << kA.matrix(), n + 1e-3 * p, n + 1e-3 * p, mh;
  EXPECT_LT(testing::oracle_eigenvalues_desc(block).minCoeff(), -1e-8);
  EXPECT_TRUE(check(ClaimId::kP3AnalogueMax, ClaimInputs(kA, kB)).passed);
}

TEST(CheckTest, TighterToleranceExposesRoundoff) {
  const RandomSpec spec{8, 5, 1e3, 1.0};
  const CheckReport r = check(ClaimId::kProp31IThroughVii, make_trial_inputs(ClaimId::kProp31IThroughVii, spec),
                              CheckOptions{1e-17});
  EXPECT_FALSE(r.passed);
  EXPECT_LT(r.margin_or_residual, 0.0);
}

TEST(CheckTest, EntropyLimitUsesFixedTolerance) {
  const CheckReport r = check(ClaimId::kEntropyLimit, ClaimInputs(kA, kB), CheckOptions{1e-12});
  EXPECT_EQ(r.tolerance, 1e-4);
  EXPECT_TRUE(r.passed);
}

TEST(CheckTest, NormSubsetIsRespected) {
  ClaimInputs in(kA, kB);
  in.norms = {NormKind::kyfan(2)};
  const CheckReport r = check(ClaimId::kCorUiNorm, in);
  EXPECT_TRUE(r.passed);
  EXPECT_NE(r.detail.find("kyfan:2"), std::string::npos);
}

TEST(CheckTest, DigestRecordsWeights) {
  ClaimInputs in(kA, kB);
  in.t_grid = {0.0, 0.5, 1.0};
  in.seed = 9;
  const CheckReport r = check(ClaimId::kFurutaNote, in);
  EXPECT_EQ(r.inputs_digest.seed, 9u);
  EXPECT_EQ(r.inputs_digest.t_values, (std::vector<double>{0.0, 0.5, 1.0}));
}

TEST(CheckTest, DefaultGridHasExactEndpoints) {
  const std::vector<double> g = default_t_grid();
  ASSERT_EQ(g.size(), 11u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_EQ(g[3], 0.3);
}

}  // namespace
}  // namespace opmeans
