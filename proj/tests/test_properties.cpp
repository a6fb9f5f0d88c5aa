#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

std::string first_failure(const props::Outcome& o) { return o.failures.empty() ? "" : o.failures.front(); }

}  // namespace

TEST(Properties, PermutationSymmetry) {
  std::mt19937_64 rng(kSeed);
  const auto o = props::permutation_symmetry(rng, 200);
  EXPECT_EQ(o.cases, 200u);
  EXPECT_TRUE(o.ok()) << o.failures.size() << " failures, first: " << first_failure(o);
}

TEST(Properties, CommonScaling) {
  std::mt19937_64 rng(kSeed + 1);
  const auto o = props::common_scaling(rng, 200);
  EXPECT_TRUE(o.ok()) << o.failures.size() << " failures, first: " << first_failure(o);
}

TEST(Properties, MultipleOfALinearity) {
  std::mt19937_64 rng(kSeed + 2);
  const auto o = props::multiple_linearity(rng, 200);
  EXPECT_TRUE(o.ok()) << o.failures.size() << " failures, first: " << first_failure(o);
}

TEST(Properties, ReducedWeightsIdentityWhenWeightsPrimeToN) {
  std::mt19937_64 rng(kSeed + 3);
  const auto o = props::reduce_identity(rng, 200, true);
  EXPECT_TRUE(o.ok()) << o.failures.size() << " failures, first: " << first_failure(o);
}

// (2,3,4;12) has g2 = 2, g = 1. With n even the map i -> g i / g1 no longer
// preserves gcd with n, and the two sums differ.
TEST(Properties, ReducedWeightsIdentityBreaksWhenGcdRatioMeetsN) {
  const auto w = props::derive_gcd_structure(2, 3, 4, 12);
  const auto red = props::reduce_to_coprime(w);
  mpq_class scale(mpz_class(w.g * w.g * w.g), mpz_class(w.g1 * w.g2 * w.g3));
  scale.canonicalize();
  EXPECT_NE(oracle::triple_sum(2, 3, 4, 12, 14), scale * oracle::triple_sum(red.a1, red.a2, red.a3, red.A, 14));
  EXPECT_EQ(oracle::triple_sum(2, 3, 4, 12, 7), scale * oracle::triple_sum(red.a1, red.a2, red.a3, red.A, 7));
}

TEST(Properties, BernoulliDualPath) {
  std::mt19937_64 rng(kSeed + 4);
  const auto o = props::bernoulli_dual_path(rng, 200);
  EXPECT_TRUE(o.ok()) << o.failures.size() << " failures, first: " << first_failure(o);
}

TEST(Properties, VonStaudtClausenThrough30) {
  const auto o = props::von_staudt_clausen();
  EXPECT_EQ(o.cases, 15u);
  EXPECT_TRUE(o.ok()) << first_failure(o);
}
