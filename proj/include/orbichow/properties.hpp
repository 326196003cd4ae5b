#ifndef ORBICHOW_PROPERTIES_HPP
#define ORBICHOW_PROPERTIES_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orbichow/deformed_ring.hpp"
#include "orbichow/fibration.hpp"

namespace orbichow {

struct PropertyReport {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> examples;

  bool pass() const { return failures == 0 && cases > 0; }
};

/// Seeded generator of random inputs with entries bounded by `max_entry`.
class RandomInputs {
 public:
  explicit RandomInputs(std::uint64_t seed, std::int64_t max_entry = 8) : rng_(seed), max_(max_entry) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

  WeightVector weights() {
    const auto len = static_cast<std::size_t>(uniform(2, 4));
    for (;;) {
      IntVector e(len);
      for (auto& x : e) x = uniform(1, max_);
      if (gcd_of(e) == 1) return WeightVector(std::move(e));
    }
  }
  WeightVector multiplicities(std::size_t len) {
    IntVector e(len);
    for (auto& x : e) x = uniform(1, max_);
    return WeightVector(std::move(e), WeightKind::multiplicities);
  }
  IntVector lattice_point(std::size_t len) {
    IntVector a(len);
    for (auto& x : a) x = uniform(-max_, max_);
    return a;
  }
  AlphaRep rep(const WeightVector& p) { return alpha(lattice_point(p.size()), p); }

  DualFunctional functional(const WeightVector& p) {
    IntVector t(p.size(), 0);
    for (const auto& b : dual_kernel_basis(p)) {
      const auto c = uniform(-3, 3);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += c * b.entries[i];
    }
    return DualFunctional{t};
  }

  DeformedElement element(const StackPtr& stack) {
    DeformedElement x(stack);
    const auto terms = uniform(1, 3);
    for (std::int64_t k = 0; k < terms; ++k) {
      auto c = uniform(-5, 5);
      x.add(rep(stack->p), Coeff(c == 0 ? 1 : c));
    }
    return x;
  }

 private:
  std::mt19937_64 rng_;
  std::int64_t max_;
};

namespace detail {

inline PropertyReport run_property(const std::string& name, std::int64_t cases, std::uint64_t seed,
                                   const std::function<std::optional<std::string>(RandomInputs&)>& check) {
  PropertyReport r{name, 0, 0, {}};
  RandomInputs in(seed);
  for (std::int64_t c = 0; c < cases; ++c) {
    ++r.cases;
    if (auto bad = check(in)) {
      ++r.failures;
      if (r.examples.size() < 10) r.examples.push_back(*bad);
    }
  }
  return r;
}

inline Exponent abs_w(std::span<const Exponent> b, const WeightVector& w) {
  Exponent s(0);
  for (std::size_t i = 0; i < b.size(); ++i) s += b[i] / w[i];
  return s;
}

}  // namespace detail

/// Randomized algebraic identities of the deformed group ring and of the
/// fibration's coordinate ring.
inline std::vector<PropertyReport> run_property_suites(std::uint64_t seed = 20240611, std::int64_t cases = 500) {
  std::vector<PropertyReport> out;

  out.push_back(detail::run_property("leibniz", cases, seed, [](RandomInputs& in) -> std::optional<std::string> {
    const auto p = in.weights();
    const auto st = make_stack(p, in.multiplicities(p.size()));
    const auto x = in.element(st), y = in.element(st);
    const auto th = in.functional(p);
    auto rhs = xi_derivation(th, x) * y;
    rhs += x * xi_derivation(th, y);
    if (xi_derivation(th, x * y) == rhs) return std::nullopt;
    return "p = " + p.str();
  }));

  out.push_back(detail::run_property("alpha_idempotence", cases, seed + 1, [](RandomInputs& in) -> std::optional<std::string> {
    const auto p = in.weights();
    const auto a = in.lattice_point(p.size()), b = in.lattice_point(p.size());
    const auto ra = alpha(a, p), rb = alpha(b, p);
    RationalVector sum = to_rational(a);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
    const bool ok = alpha(ra.entries, p) == ra && alpha(sum, p) == alpha(add(ra.entries, rb.entries), p) &&
                    gamma(ra, p) == 0 && in_alpha_image(ra, p);
    if (ok) return std::nullopt;
    return "p = " + p.str() + ", a = " + str(to_rational(a));
  }));

  out.push_back(detail::run_property("vanishing_iff_cone", cases, seed + 2, [](RandomInputs& in) -> std::optional<std::string> {
    const auto p = in.weights();
    const auto st = make_stack(p, WeightVector::ones(p.size()));
    const auto b1 = in.rep(p), b2 = in.rep(p);
    const bool vanishes = (DeformedElement::monomial(st, b1) * DeformedElement::monomial(st, b2)).is_zero();
    const auto sum = add(b1.entries, b2.entries);
    const bool additive = alpha(sum, p).entries == sum;
    if (vanishes == !same_cone(b1, b2) && additive == same_cone(b1, b2)) return std::nullopt;
    return "p = " + p.str() + ", b1 = " + str(b1.entries) + ", b2 = " + str(b2.entries);
  }));

  out.push_back(detail::run_property("nu_degree", cases, seed + 3, [](RandomInputs& in) -> std::optional<std::string> {
    const auto p = in.weights();
    const auto w = in.multiplicities(p.size());
    const auto m1 = to_rational(in.lattice_point(p.size())), m2 = to_rational(in.lattice_point(p.size()));
    const auto a1 = alpha(m1, p), a2 = alpha(m2, p);
    const auto a12 = alpha(add(m1, m2), p);
    // nu(m + m') = |alpha(m)| + |alpha(m')| - gamma(alpha(m) + alpha(m')) |p|
    const Exponent predicted = detail::abs_w(a1.entries, w) + detail::abs_w(a2.entries, w) -
                               gamma(add(a1.entries, a2.entries), p) * detail::abs_w(to_rational(p.entries()), w);
    bool ok = degree_nu(a12, w) == predicted && degree_nu(a1, w) == detail::abs_w(a1.entries, w);
    const bool cone = same_cone(a1, a2);
    ok = ok && degree_nu(a12, w) <= degree_nu(a1, w) + degree_nu(a2, w);
    ok = ok && (degree_nu(a12, w) == degree_nu(a1, w) + degree_nu(a2, w)) == cone;
    if (ok) return std::nullopt;
    return "p = " + p.str() + ", w = " + w.str() + ", m = " + str(m1) + ", m' = " + str(m2);
  }));

  out.push_back(detail::run_property("phi_star", cases, seed + 4, [](RandomInputs& in) -> std::optional<std::string> {
    const auto p = in.weights();
    const FibrationMaps maps{p};
    const auto t = t_generators(p);
    auto random_gamma = [&] {
      Exponent g(0);
      const auto k = in.uniform(0, 3);
      for (std::int64_t i = 0; i < k; ++i) g += t.generators[static_cast<std::size_t>(in.uniform(0, static_cast<std::int64_t>(t.generators.size()) - 1))];
      return g;
    };
    const FiberedMonomial m1{random_gamma(), in.rep(p)}, m2{random_gamma(), in.rep(p)};
    const auto prod = multiply_monomials(m1, m2, p);
    bool ok = maps.phi(prod) == add(maps.phi(m1), maps.phi(m2));
    ok = ok && maps.recover(maps.phi(m1)) == m1 && maps.recover(maps.phi(m2)) == m2;
    ok = ok && ((maps.phi(m1) == maps.phi(m2)) == (m1 == m2));
    ok = ok && maps.square_commutes(m1.t_exp) && maps.square_commutes(m2.t_exp);
    if (ok) return std::nullopt;
    return "p = " + p.str() + ", b = " + str(m1.z_exp.entries) + ", b' = " + str(m2.z_exp.entries);
  }));

  out.push_back(detail::run_property("normalize", cases, seed + 5, [](RandomInputs& in) -> std::optional<std::string> {
    const auto p = in.weights();
    const auto st = make_stack(p, in.multiplicities(p.size()));
    const auto b1 = in.rep(p), b2 = in.rep(p);
    const auto raw = add(b1.entries, b2.entries);
    const auto nf = normalize_monomial(0, raw, p);
    bool ok = normalize_monomial(nf.t_exp, nf.z_exp.entries, p) == nf;
    // Equivalent raw monomials: shifting by a multiple of p only moves the t-exponent.
    RationalVector shifted = raw;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += p[i];
    const auto nf2 = normalize_monomial(0, shifted, p);
    ok = ok && nf2.z_exp == nf.z_exp && nf2.t_exp == nf.t_exp + 1;
    // The derivation commutes with normalization, and the zero fibre is Q[N]^Sigma.
    const auto th = in.functional(p);
    ok = ok && theta_value(th, raw) == theta_value(th, nf.z_exp.entries);
    const auto x = FiberedElement::monomial(p, FiberedMonomial{Exponent(0), b1});
    const auto y = FiberedElement::monomial(p, FiberedMonomial{Exponent(0), b2});
    ok = ok && restrict_zero_fiber(multiply_fibered(x, y), st) ==
                   DeformedElement::monomial(st, b1) * DeformedElement::monomial(st, b2);
    if (ok) return std::nullopt;
    return "p = " + p.str() + ", raw = " + str(raw);
  }));
  return out;
}

}  // namespace orbichow

#endif  // ORBICHOW_PROPERTIES_HPP
