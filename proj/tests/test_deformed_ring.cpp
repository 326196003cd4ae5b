#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbichow/deformed_ring.hpp"

using namespace orbichow;

namespace {

Exponent q(std::int64_t a, std::int64_t b = 1) { return Exponent(a, b); }
AlphaRep rep(std::initializer_list<Exponent> v) { return AlphaRep{RationalVector(v)}; }

std::map<oracle::Q, std::size_t> as_map(const std::vector<std::pair<Exponent, std::size_t>>& d) {
  std::map<oracle::Q, std::size_t> out;
  for (const auto& [k, v] : d) out[k] = v;
  return out;
}

}  // namespace

TEST(DeformedProduct, Examples) {
  const auto st = make_stack(IntVector{1, 2}, IntVector{1, 1});
  const auto x = DeformedElement::monomial(st, rep({1, 0}));
  const auto y = DeformedElement::monomial(st, rep({0, 1}));
  EXPECT_TRUE((x * y).is_zero());
  EXPECT_EQ(DeformedElement::one(st) * x, x);

  const auto st5 = make_stack(IntVector{2, 3, 5}, IntVector{1, 1, 1});
  const auto w1 = DeformedElement::monomial(st5, rep({q(2, 5), q(3, 5), 0}));
  const auto w2 = DeformedElement::monomial(st5, rep({q(4, 5), q(1, 5), 0}));
  EXPECT_EQ(w1 * w2, DeformedElement::monomial(st5, rep({q(6, 5), q(4, 5), 0})));
  EXPECT_EQ(deformed_monomial_product(rep({q(1, 5), q(4, 5), 0}), rep({1, 0, 0})), rep({q(6, 5), q(4, 5), 0}));
}

TEST(DeformedProduct, CommutativeAssociative) {
  const auto st = make_stack(IntVector{2, 3, 5}, IntVector{1, 2, 1});
  const auto gens = std::vector<AlphaRep>{rep({0, q(1, 2), q(1, 2)}), rep({q(1, 3), 0, q(1, 3)}),
                                          rep({q(2, 5), q(3, 5), 0}), rep({1, 0, 0}), rep({0, 0, 2})};
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        const auto A = DeformedElement::monomial(st, a), B = DeformedElement::monomial(st, b),
                   C = DeformedElement::monomial(st, c);
        EXPECT_EQ(A * B, B * A);
        EXPECT_EQ((A * B) * C, A * (B * C));
      }
}

TEST(XiDerivation, ScalesByPairing) {
  const auto st = make_stack(IntVector{2, 3, 5}, IntVector{1, 1, 1});
  const DualFunctional th{{3, -2, 0}};
  const auto m = DeformedElement::monomial(st, rep({q(2, 5), q(3, 5), 0}));
  EXPECT_EQ(xi_derivation(th, m), DeformedElement::monomial(st, rep({q(2, 5), q(3, 5), 0}), 0));
  const auto u = DeformedElement::monomial(st, rep({0, q(1, 2), q(1, 2)}));
  EXPECT_EQ(xi_derivation(th, u), DeformedElement::monomial(st, rep({0, q(1, 2), q(1, 2)}), -1));
  EXPECT_TRUE(xi_derivation(th, DeformedElement::one(st)).is_zero());
}

TEST(XiDerivation, Leibniz) {
  const auto st = make_stack(IntVector{1, 2, 3}, IntVector{2, 1, 1});
  const auto x = DeformedElement::monomial(st, rep({q(1, 2), 0, q(1, 2)})) + DeformedElement::monomial(st, rep({1, 0, 0}), 3);
  const auto y = DeformedElement::monomial(st, rep({0, 1, 0})) + DeformedElement::monomial(st, rep({q(1, 3), q(2, 3), 0}), -2);
  for (const auto& th : dual_kernel_basis(st->p))
    EXPECT_EQ(xi_derivation(th, x * y), xi_derivation(th, x) * y + x * xi_derivation(th, y));
}

TEST(JacobianGenerators, Examples) {
  const auto st11 = make_stack(IntVector{1, 1}, IntVector{1, 1});
  const auto g11 = jacobian_generators(st11);
  ASSERT_EQ(g11.size(), 1u);
  EXPECT_EQ(g11[0], DeformedElement::monomial(st11, rep({1, 0})) - DeformedElement::monomial(st11, rep({0, 1})));

  const auto st12 = make_stack(IntVector{1, 2}, IntVector{1, 1});
  const auto g12 = jacobian_generators(st12);
  ASSERT_EQ(g12.size(), 1u);
  EXPECT_EQ(g12[0], DeformedElement::monomial(st12, rep({1, 0}), 2) - DeformedElement::monomial(st12, rep({0, 1})));

  const auto st3 = make_stack(IntVector{1, 1, 1, 1}, IntVector{1, 1, 1, 1});
  EXPECT_EQ(jacobian_generators(st3).size(), 3u);
}

TEST(DegreeNu, Examples) {
  const WeightVector ones = WeightVector::ones(3);
  EXPECT_EQ(degree_nu(rep({0, 0, 0}), ones), q(0));
  const WeightVector w({2, 3, 1}, WeightKind::multiplicities);
  for (std::size_t i = 0; i < 3; ++i) {
    RationalVector e(3, Exponent(0));
    e[i] = w[i];
    EXPECT_EQ(degree_nu(e, w), q(1));
  }
  EXPECT_EQ(degree_nu(rep({q(2, 5), q(3, 5), 0}), ones), q(1));
}

TEST(Monomials, OfDegree) {
  const WeightVector p({1, 2});
  const auto w = WeightVector::ones(2);
  EXPECT_EQ(monomials_of_degree(p, w, q(0)), std::vector<AlphaRep>{rep({0, 0})});
  EXPECT_EQ(monomials_of_degree(p, w, q(1)), (std::vector<AlphaRep>{rep({0, 1}), rep({1, 0})}));
  EXPECT_EQ(monomials_of_degree(p, w, q(1, 2)), std::vector<AlphaRep>{rep({q(1, 2), 0})});
  for (const auto& [d, list] : monomials_up_to(WeightVector({2, 3, 5}), WeightVector::ones(3), q(3)))
    for (const auto& m : list) {
      EXPECT_EQ(degree_nu(m, WeightVector::ones(3)), d);
      EXPECT_TRUE(in_alpha_image(m, WeightVector({2, 3, 5})));
    }
}

TEST(OrbifoldChow, ProjectiveSpaceIsTruncatedPolynomialRing) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto st = make_stack(WeightVector::ones(n + 1, WeightKind::weights), WeightVector::ones(n + 1));
    const auto q6 = orbifold_chow(st);
    ASSERT_EQ(q6.total_dim(), n + 1);
    for (const auto& [d, k] : q6.dims()) EXPECT_EQ(k, 1u);
    RationalVector e0(n + 1, Exponent(0));
    e0[0] = 1;
    const auto x = q6.reduce(AlphaRep{e0});
    BasisVector power = q6.reduce(zero_rep(n + 1));
    for (std::size_t k = 0; k <= n + 1; ++k) {
      RationalVector ke(n + 1, Exponent(0));
      ke[0] = static_cast<std::int64_t>(k);
      EXPECT_EQ(power, q6.reduce(AlphaRep{ke})) << "n = " << n << " k = " << k;
      EXPECT_EQ(power.empty(), k == n + 1);
      power = q6.multiply(power, x);
    }
  }
}

TEST(OrbifoldChow, HandComputedExamples) {
  using V = std::vector<std::pair<Exponent, std::size_t>>;
  EXPECT_EQ(orbifold_chow(make_stack(IntVector{1, 1, 1}, IntVector{1, 1, 1})).dims(), (V{{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(orbifold_chow(make_stack(IntVector{1, 2}, IntVector{1, 1})).dims(), (V{{0, 1}, {q(1, 2), 1}, {1, 1}}));
  EXPECT_EQ(orbifold_chow(make_stack(IntVector{1, 1}, IntVector{2, 1})).dims(), (V{{0, 1}, {q(1, 2), 1}, {1, 1}}));
  const auto q235 = orbifold_chow(make_stack(IntVector{2, 3, 5}, IntVector{1, 1, 1}));
  EXPECT_EQ(q235.total_dim(), 10u);
  EXPECT_EQ(q235.dims(), (V{{0, 1}, {q(2, 3), 1}, {1, 6}, {q(4, 3), 1}, {2, 1}}));
  EXPECT_TRUE(q235.is_associative());
}

TEST(OrbifoldChow, DimsMatchBruteForceOracle) {
  const std::vector<std::pair<std::vector<long>, std::vector<long>>> cases{
      {{1, 1}, {1, 1}},       {{1, 2}, {1, 1}},       {{1, 1}, {2, 3}},    {{2, 3}, {1, 1}},
      {{2, 3}, {2, 1}},       {{1, 1, 1}, {1, 1, 1}}, {{1, 2, 4}, {1, 1, 1}}, {{2, 3, 5}, {1, 1, 1}},
      {{1, 2, 3}, {2, 1, 1}}, {{3, 4, 6}, {1, 1, 1}}, {{1, 1, 2}, {1, 2, 1}}};
  for (const auto& [pl, wl] : cases) {
    const auto st = make_stack(IntVector(pl.begin(), pl.end()), IntVector(wl.begin(), wl.end()));
    const auto quotient = orbifold_chow(st);
    EXPECT_EQ(as_map(quotient.dims()), oracle::chow_dims(pl, wl, quotient.verified_through))
        << st->p.str() << " " << st->w.str();
  }
}

TEST(OrbifoldChow, IndependentOfDualBasis) {
  const auto st = make_stack(IntVector{2, 3, 5}, IntVector{1, 1, 1});
  const auto a = orbifold_chow(st);
  const auto b = orbifold_chow(st, std::nullopt, std::vector<DualFunctional>{DualFunctional{{3, -2, 0}}, DualFunctional{{1, 1, -1}}});
  EXPECT_EQ(a.dims(), b.dims());
  EXPECT_TRUE(a == b);
  EXPECT_THROW(orbifold_chow(st, std::nullopt, std::vector<DualFunctional>{DualFunctional{{6, -4, 0}}, DualFunctional{{1, 1, -1}}}),
               std::invalid_argument);
}

TEST(OrbifoldChow, DegreeCap) {
  const auto st = make_stack(IntVector{1, 1, 1}, IntVector{1, 1, 1});
  EXPECT_THROW(orbifold_chow(st, q(1)), std::invalid_argument);
  EXPECT_EQ(orbifold_chow(st, q(5)).total_dim(), 3u);
  EXPECT_EQ(orbifold_chow(st, q(5)).verified_through, q(5));
  EXPECT_EQ(orbifold_chow(st, q(2)).verified_through, q(3));
}
