#include <gtest/gtest.h>

#include "orbichow/isomorphism.hpp"

using namespace orbichow;

namespace {

Exponent q(std::int64_t a, std::int64_t b = 1) { return Exponent(a, b); }

}  // namespace

TEST(RemainderIdentity, Examples) {
  const WeightVector p({2, 3, 5});
  EXPECT_TRUE(remainder_identity(p, 7, 0, 1, 1));
  EXPECT_TRUE(remainder_identity(p, 7, 2, 0, 0));
  EXPECT_THROW(remainder_identity(p, 7, 3, 0, 1), std::invalid_argument);
  EXPECT_THROW(remainder_identity(p, 0, 0, 0, 1), std::invalid_argument);
}

TEST(RemainderIdentity, Sweep) {
  for (const auto& p : {WeightVector({2, 3, 5}), WeightVector({1, 2, 4}), WeightVector({3, 4, 5, 7})})
    for (std::int64_t a = 1; a <= 10; ++a)
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
          for (std::int64_t k = 0; k <= 20; ++k) EXPECT_TRUE(remainder_identity(p, a, i, j, k));
}

TEST(RescalePair, Validation) {
  const RescalePair pair(WeightVector({1, 2}), 3);
  EXPECT_EQ(pair.scaled_p(), WeightVector({3, 2}));
  EXPECT_EQ(pair.scaled_w(WeightVector::ones(2)), WeightVector({1, 3}, WeightKind::multiplicities));
  EXPECT_THROW(RescalePair(WeightVector({1, 2}), 2), std::invalid_argument);
  EXPECT_THROW(RescalePair(WeightVector({1, 2}), 0), std::invalid_argument);
  EXPECT_THROW(RescalePair(WeightVector({1}), 3), std::invalid_argument);
}

TEST(HStar, Examples) {
  const RescalePair pair(WeightVector({1, 2}), 3);
  EXPECT_EQ(h_star(q(0), pair), q(0));
  EXPECT_EQ(h_star(q(1, 2), pair), q(1, 6));
  for (const auto& g : t_generators(pair.p()).generators) EXPECT_NO_THROW(h_star(g, pair));
}

TEST(PhiStarScale, Examples) {
  const RescalePair pair(WeightVector({1, 2}), 3);
  EXPECT_EQ(phi_star_scale(zero_rep(2), pair), zero_rep(2));
  const AlphaRep b{RationalVector{q(1, 2), 0}};
  EXPECT_EQ(phi_star_scale(b, pair), b);
  EXPECT_EQ(s_generators(pair.scaled_p()).fractional[1][0], b);
  EXPECT_EQ(phi_star_scale(AlphaRep{RationalVector{0, 3}}, pair), (AlphaRep{RationalVector{0, 1}}));
  for (const auto& g : s_generators(pair.p()).distinct())
    EXPECT_EQ(phi_star_scale_inverse(phi_star_scale(g, pair), pair), g);
}

TEST(ChowInvariance, HandVerifiedInstance) {
  const auto r = chow_invariance(WeightVector::ones(2), WeightVector({1, 2}), 3);
  EXPECT_TRUE(r.pass) << (r.failures.empty() ? "" : r.failures.front());
  const std::vector<std::pair<Exponent, std::size_t>> expected{{0, 1}, {q(1, 3), 1}, {q(1, 2), 1}, {q(2, 3), 1}, {1, 1}};
  EXPECT_EQ(r.degree_dims_left, expected);
  EXPECT_EQ(r.degree_dims_right, expected);
}

TEST(ChowInvariance, Instances) {
  EXPECT_TRUE(chow_invariance(WeightVector::ones(2), WeightVector({1, 1}), 2).pass);
  EXPECT_TRUE(chow_invariance(WeightVector::ones(2), WeightVector({2, 3}), 5).pass);
  EXPECT_TRUE(chow_invariance(WeightVector({1, 2, 1}, WeightKind::multiplicities), WeightVector({2, 3, 5}), 7).pass);
  EXPECT_TRUE(chow_invariance(WeightVector::ones(3), WeightVector({1, 2, 3}), 1).pass);
}
