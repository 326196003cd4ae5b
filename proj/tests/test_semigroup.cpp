#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbichow/semigroup.hpp"

using namespace orbichow;

namespace {

Exponent q(std::int64_t a, std::int64_t b = 1) { return Exponent(a, b); }
AlphaRep rep(std::initializer_list<Exponent> v) { return AlphaRep{RationalVector(v)}; }

}  // namespace

TEST(SGenerators, P235) {
  const WeightVector p({2, 3, 5});
  const auto s = s_generators(p);
  ASSERT_EQ(s.unit_vectors.size(), 3u);
  ASSERT_EQ(s.fractional[0].size(), 1u);
  ASSERT_EQ(s.fractional[1].size(), 2u);
  ASSERT_EQ(s.fractional[2].size(), 4u);
  EXPECT_EQ(s.fractional[0][0], rep({0, q(1, 2), q(1, 2)}));
  EXPECT_EQ(s.fractional[1][0], rep({q(2, 3), 0, q(2, 3)}));
  EXPECT_EQ(s.fractional[1][1], rep({q(1, 3), 0, q(1, 3)}));
  EXPECT_EQ(s.fractional[2][0], rep({q(2, 5), q(3, 5), 0}));
  EXPECT_EQ(s.fractional[2][1], rep({q(4, 5), q(1, 5), 0}));
  EXPECT_EQ(s.fractional[2][2], rep({q(1, 5), q(4, 5), 0}));
  EXPECT_EQ(s.fractional[2][3], rep({q(3, 5), q(2, 5), 0}));

  // u1, v1 and w1..w4 survive pruning; (2/3, 0, 2/3) = 2 v1 does not.
  const auto irr = irreducible_fractional(s);
  ASSERT_EQ(irr.size(), 6u);
  EXPECT_EQ(irr[0], rep({0, q(1, 2), q(1, 2)}));
  EXPECT_EQ(irr[1], rep({q(1, 3), 0, q(1, 3)}));
  EXPECT_EQ(irr[2], rep({q(2, 5), q(3, 5), 0}));
}

TEST(SGenerators, AreClassRepresentatives) {
  const std::vector<std::vector<long>> cases{{1, 2}, {2, 3}, {2, 3, 5}, {3, 4, 6}, {1, 2, 4}};
  for (const auto& pl : cases) {
    const WeightVector p{IntVector(pl.begin(), pl.end())};
    for (const auto& g : s_generators(p).distinct())
      EXPECT_TRUE(oracle::is_class_rep(oracle::Vec(g.entries.begin(), g.entries.end()), pl)) << str(g.entries);
  }
}

TEST(SGenerators, DecomposeEveryRepresentativeInBox) {
  const WeightVector p({2, 3, 5});
  const auto gens = s_generators(p).distinct();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        const auto r = alpha(IntVector{a, b, c}, p);
        const auto d = s_decompose(r.entries, gens);
        ASSERT_TRUE(d.has_value()) << str(r.entries);
        RationalVector sum(3, Exponent(0));
        for (std::size_t g = 0; g < gens.size(); ++g)
          for (std::size_t i = 0; i < 3; ++i) sum[i] += (*d)[g] * gens[g][i];
        EXPECT_EQ(sum, r.entries);
      }
  EXPECT_FALSE(in_s(RationalVector{q(1, 7), 0, 0}, p));
}

TEST(TGenerators, Examples) {
  const auto t = t_generators(WeightVector({2, 3, 5}));
  EXPECT_EQ(t.generators, (std::vector<Exponent>{q(1, 6), q(1, 10), q(1, 15)}));
  EXPECT_EQ(t.ell, q(1, 30));
  EXPECT_EQ(t_generators(WeightVector({1, 1, 1, 1})).generators, std::vector<Exponent>{q(1)});
  EXPECT_EQ(t_generators(WeightVector({1, 2, 4})).generators, (std::vector<Exponent>{q(1, 2), q(1, 4)}));
  EXPECT_EQ(pruned_t_generators(t_generators(WeightVector({1, 2, 4}))), std::vector<Exponent>{q(1, 4)});
  EXPECT_THROW(t_generators(WeightVector({1})), std::invalid_argument);
}

TEST(TMembership, Examples) {
  const WeightVector p({2, 3, 5});
  EXPECT_TRUE(t_membership(q(0), p, 10));
  EXPECT_FALSE(t_membership(q(1, 30), p, 10));
  EXPECT_TRUE(t_membership(q(4, 15), p, 10));
  EXPECT_EQ(t_min_count(q(4, 15), t_generators(p)), 2);
  EXPECT_FALSE(t_membership(q(4, 15), p, 1));
  EXPECT_FALSE(t_membership(q(-1, 6), p, 10));
}

TEST(TMembership, MatchesExhaustiveOracle) {
  const std::vector<std::vector<long>> cases{{2, 3, 5}, {2, 3}, {1, 2, 4}, {3, 4, 6}};
  for (const auto& pl : cases) {
    const WeightVector p{IntVector(pl.begin(), pl.end())};
    const long L = oracle::lcm_all(pl);
    for (long k = 0; k <= 2 * L; ++k)
      for (int bound : {1, 2, 3, 5})
        EXPECT_EQ(t_membership(q(k, L), p, bound), oracle::t_member(oracle::Q(k, L), pl, bound))
            << p.str() << " " << k << "/" << L << " bound " << bound;
  }
}

TEST(VerifySemigroup, Examples) {
  EXPECT_TRUE(verify_semigroup_generators(WeightVector({1, 1}), 3).pass);
  EXPECT_TRUE(verify_semigroup_generators(WeightVector({2, 3, 5}), 4).pass);
  const auto r = verify_semigroup_generators(WeightVector({2, 3}), 5);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.representatives_checked, 0);
  EXPECT_GT(r.sums_checked, 0);
  // Every gamma value is a multiple of 1/6 for p = (2, 3).
  const auto gens = s_generators(WeightVector({2, 3})).distinct();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const auto g = gamma(add(a.entries, b.entries), WeightVector({2, 3}));
      EXPECT_TRUE(is_integer(g * 6));
    }
  EXPECT_THROW(verify_semigroup_generators(WeightVector({2, 3}), 0), std::invalid_argument);
}
