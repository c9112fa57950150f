#include "opmeans/claims.hpp"

#include <set>
#include <string>

#include <gtest/gtest.h>

namespace opmeans {
namespace {

// Every statement the catalog must cover, by id.
const std::set<std::string> kRequiredTheoremClaims = {
    "eq1_congruence_identity", "inversion", "lemma_two_identities", "riccati_unweighted",
    "p3_analogue_max", "cor_order_bounds", "prop_kappa_upper", "cor_two_sided_kappa",
    "thm_block_sqrtkappa_sharp", "cor_sesquilinear", "cor_sharp_sandwich", "prop_block_nabla",
    "lemma_kantorovich", "prop_block_harmonic_K", "remark_mM_bounds", "thm_sv_direct_sum",
    "prop31_i_through_vii", "thm_weighted_unique_solution", "furuta_note", "cor_ui_norm",
    "remark_natural_norm", "thm_eigen_C", "cor_eigen_sum_norm", "prop_ft_bounds",
    "entropy_quasi_identity", "entropy_limit", "entropy_monotone", "entropy_lnt_bound",
    "entropy_conditional_order", "entropy_sandwich_theorem", "entropy_remark_chain", "heinz_sandwich",
};

const std::set<std::string> kRequiredCounterexamples = {
    "natural_symmetry", "natural_below_arithmetic", "natural_transformer_P4", "condition_26",
    "natural_vs_sharp_order", "sharp_sandwich_lower_if_a_le_b", "block_harmonic_printed_orientation",
};

TEST(CatalogTest, CoversEveryRequiredStatementWithoutOrphans) {
  std::set<std::string> theorems;
  std::set<std::string> counterexamples;
  for (const ClaimInfo& c : catalog()) {
    (is_falsifiable(c.id) ? counterexamples : theorems).insert(std::string(c.name));
  }
  EXPECT_EQ(theorems, kRequiredTheoremClaims);
  EXPECT_EQ(counterexamples, kRequiredCounterexamples);
  EXPECT_EQ(catalog().size(), kRequiredTheoremClaims.size() + kRequiredCounterexamples.size());
}

TEST(CatalogTest, EntriesAreDistinctAndAnchored) {
  std::set<std::string> names;
  std::set<std::string> anchors;
  std::set<int> ids;
  for (const ClaimInfo& c : catalog()) {
    EXPECT_FALSE(c.anchor.empty()) << c.name;
    EXPECT_TRUE(names.insert(std::string(c.name)).second) << c.name;
    EXPECT_TRUE(anchors.insert(std::string(c.anchor)).second) << c.name;
    EXPECT_TRUE(ids.insert(static_cast<int>(c.id)).second) << c.name;
    EXPECT_EQ(&info(c.id), &c);
  }
}

TEST(CatalogTest, ParseRoundTrips) {
  for (const ClaimInfo& c : catalog()) {
    ASSERT_TRUE(parse_claim(c.name).has_value());
    EXPECT_EQ(*parse_claim(c.name), c.id);
  }
  EXPECT_FALSE(parse_claim("block_sharp_P3_typo").has_value());
}

TEST(CatalogTest, OnlyTheTruncationClaimHasAFixedTolerance) {
  for (const ClaimInfo& c : catalog()) {
    if (c.id == ClaimId::kEntropyLimit) {
      ASSERT_TRUE(c.fixed_tolerance.has_value());
      EXPECT_EQ(*c.fixed_tolerance, 1e-4);
    } else {
      EXPECT_FALSE(c.fixed_tolerance.has_value()) << c.name;
    }
  }
}

TEST(CatalogTest, KindNames) {
  EXPECT_EQ(to_string(ClaimKind::kBlockPsd), "block_psd");
  EXPECT_EQ(to_string(ClaimKind::kCounterexample), "counterexample");
  EXPECT_EQ(to_string(info(ClaimId::kThmSvDirectSum).kind), "singular_value");
}

}  // namespace
}  // namespace opmeans
