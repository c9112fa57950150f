#include "opmeans/random.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace opmeans {
namespace {

TEST(RandomSpdTest, OneByOneIsInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SymMatrix a = random_spd(RandomSpec{1, seed, 100.0, 2.0});
    EXPECT_GE(a(0, 0), 2.0 / 100.0 * (1 - 1e-15));
    EXPECT_LE(a(0, 0), 2.0 * (1 + 1e-15));
  }
}

TEST(RandomSpdTest, SameSeedIsBitwiseIdentical) {
  const RandomSpec spec{6, 1234, 1e3, 1.0};
  EXPECT_EQ(random_spd(spec), random_spd(spec));
  RandomSpec other = spec;
  other.seed = 1235;
  EXPECT_FALSE(random_spd(spec) == random_spd(other));
}

TEST(RandomSpdTest, ConditionNumberIsCapped) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RandomSpec spec{2 + static_cast<int>(seed % 7), seed, 1e3, 1.0};
    const Eigen::VectorXd ev = testing::oracle_eigenvalues_desc(random_spd(spec).matrix());
    EXPECT_GT(ev(ev.size() - 1), 0.0);
    EXPECT_LE(ev(0) / ev(ev.size() - 1), spec.cond_max * (1 + 1e-8));
    EXPECT_LE(ev(0), spec.scale * (1 + 1e-12));
  }
}

TEST(RandomSpdTest, ValidatesSpec) {
  EXPECT_THROW(random_spd(RandomSpec{0, 1, 10.0, 1.0}), ParameterError);
  EXPECT_THROW(random_spd(RandomSpec{2, 1, 0.5, 1.0}), ParameterError);
  EXPECT_THROW(random_spd(RandomSpec{2, 1, 10.0, -1.0}), ParameterError);
}

TEST(RandomPairTest, OrderedPairIsOrdered) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto [a, b] = random_spd_pair_ordered(RandomSpec{2 + static_cast<int>(seed % 7), seed, 1e3, 1.0});
    const Eigen::VectorXd gap = testing::oracle_eigenvalues_desc(b.matrix() - a.matrix());
    EXPECT_GE(gap(gap.size() - 1), 0.0) << "seed " << seed;
  }
  const auto [a1, b1] = random_spd_pair_ordered(RandomSpec{1, 3, 10.0, 1.0});
  EXPECT_GE(b1(0, 0), a1(0, 0));
  const auto p1 = random_spd_pair_ordered(RandomSpec{4, 3, 10.0, 1.0});
  const auto p2 = random_spd_pair_ordered(RandomSpec{4, 3, 10.0, 1.0});
  EXPECT_EQ(p1.first, p2.first);
  EXPECT_EQ(p1.second, p2.second);
}

TEST(RandomPairTest, CommutingPairCommutes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto [a, b] = random_spd_pair_commuting(RandomSpec{5, seed, 1e3, 1.0});
    const GeneralMatrix comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    EXPECT_LT(comm.norm(), 1e-13);
  }
}

TEST(RandomOrthogonalTest, IsOrthogonal) {
  Rng rng(8);
  for (int n = 1; n <= 8; ++n) {
    const GeneralMatrix q = random_orthogonal(n, rng);
    EXPECT_TRUE(testing::MatrixNear(q.transpose() * q, GeneralMatrix::Identity(n, n), 1e-14));
  }
  EXPECT_NEAR(random_unit_vector(7, rng).norm(), 1.0, 1e-15);
}

TEST(DeriveSeedTest, SeparatesStreams) {
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}

}  // namespace
}  // namespace opmeans
