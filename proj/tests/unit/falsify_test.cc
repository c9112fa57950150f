#include "opmeans/falsify.hpp"

#include <gtest/gtest.h>

#include "opmeans/means.hpp"
#include "opmeans/reference_examples.hpp"

namespace opmeans {
namespace {

RandomSpec default_spec(std::uint64_t seed) {
  RandomSpec spec;
  spec.dim = 2;
  spec.seed = seed;
  return spec;
}

FalsifyOptions dims_2_to_8() {
  FalsifyOptions options;
  options.dim_max = 8;
  return options;
}

TEST(FalsifyTest, FindsEveryCounterexample) {
  for (const ClaimInfo& ci : catalog()) {
    if (!is_falsifiable(ci.id)) continue;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const FalsificationReport r = falsify(ci.id, 1000, default_spec(seed), dims_2_to_8());
      EXPECT_TRUE(r.found) << ci.name << " seed " << seed;
      EXPECT_LT(r.violation_margin, -1e-6) << ci.name;
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_EQ(r.trials_run, r.witness->trial + 1);
      // The witness re-checks to the same margin.
      ClaimInputs in(r.witness->a, r.witness->b);
      in.x = r.witness->x;
      EXPECT_EQ(check(ci.id, in).margin_or_residual, r.violation_margin);
    }
  }
}

TEST(FalsifyTest, DeterministicPerSeed) {
  const FalsificationReport r1 = falsify(ClaimId::kNaturalBelowArithmetic, 1000, default_spec(7), dims_2_to_8());
  const FalsificationReport r2 = falsify(ClaimId::kNaturalBelowArithmetic, 1000, default_spec(7), dims_2_to_8());
  ASSERT_TRUE(r1.found && r2.found);
  EXPECT_EQ(r1.trials_run, r2.trials_run);
  EXPECT_EQ(r1.violation_margin, r2.violation_margin);
  EXPECT_EQ(r1.witness->a, r2.witness->a);
  EXPECT_EQ(r1.witness->b, r2.witness->b);
}

TEST(FalsifyTest, ReferenceInputsFirst) {
  FalsifyOptions options;
  options.reference_inputs_first = true;

  const FalsificationReport sym = falsify(ClaimId::kNaturalSymmetry, 1000, default_spec(1), options);
  ASSERT_TRUE(sym.found);
  EXPECT_EQ(sym.witness->trial, -1);
  EXPECT_EQ(sym.trials_run, 0);
  const ReferenceMatrices r = reference_matrices();
  EXPECT_GT((natural_t(r.a, r.b) - natural_t(r.b, r.a)).matrix().norm(), 1e-2);

  const FalsificationReport p4 = falsify(ClaimId::kNaturalTransformerP4, 1000, default_spec(1), options);
  ASSERT_TRUE(p4.found);
  EXPECT_EQ(p4.witness->trial, -1);
  ASSERT_TRUE(p4.witness->x.has_value());
  EXPECT_EQ(*p4.witness->x, r.c.matrix());

  const FalsificationReport cond = falsify(ClaimId::kCondition26, 1000, default_spec(1), options);
  ASSERT_TRUE(cond.found);
  EXPECT_EQ(cond.witness->trial, -1);

  // The printed pair does not violate the arithmetic bound, so the search
  // falls through to random trials.
  const FalsificationReport arith = falsify(ClaimId::kNaturalBelowArithmetic, 1000, default_spec(1), options);
  ASSERT_TRUE(arith.found);
  EXPECT_GE(arith.witness->trial, 0);
}

TEST(FalsifyTest, ZeroTrials) {
  const FalsificationReport r = falsify(ClaimId::kNaturalSymmetry, 0, default_spec(1));
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.trials_run, 0);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(FalsifyTest, RejectsTheoremClaimsAndBadArguments) {
  EXPECT_THROW(falsify(ClaimId::kRiccatiUnweighted, 10, default_spec(1)), ParameterError);
  EXPECT_THROW(falsify(ClaimId::kNaturalSymmetry, -1, default_spec(1)), ParameterError);
  RandomSpec bad = default_spec(1);
  bad.cond_max = 0.5;
  EXPECT_THROW(falsify(ClaimId::kNaturalSymmetry, 10, bad), ParameterError);
}

TEST(FalsifyTest, UnreachableMarginIsNotFound) {
  FalsifyOptions options;
  options.required_margin = 10.0;
  const FalsificationReport r = falsify(ClaimId::kNaturalVsSharpOrder, 20, default_spec(3), options);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.trials_run, 20);
  EXPECT_LT(r.violation_margin, 0.0);
}

}  // namespace
}  // namespace opmeans
