#ifndef ORBICHOW_FIBRATION_HPP
#define ORBICHOW_FIBRATION_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "orbichow/deformed_ring.hpp"
#include "orbichow/semigroup.hpp"

namespace orbichow {

/// t^gamma z^b in the coordinate ring Q[T + S]/I, kept in I-normal form
/// (gamma(b) = 0).
struct FiberedMonomial {
  Exponent t_exp;
  AlphaRep z_exp;

  friend bool operator==(const FiberedMonomial& a, const FiberedMonomial& b) {
    return a.t_exp == b.t_exp && a.z_exp == b.z_exp;
  }
  friend bool operator<(const FiberedMonomial& a, const FiberedMonomial& b) {
    if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
    return a.z_exp < b.z_exp;
  }
};

/// Rewrites t^gamma0 z^b with the relation z^b = t^{gamma(b)} z^{alpha(b)}.
inline FiberedMonomial normalize_monomial(const Exponent& gamma0, std::span<const Exponent> b_raw,
                                          const WeightVector& p) {
  require_length(b_raw.size(), p);
  if (gamma0 < 0) throw std::invalid_argument("t-exponent must be nonnegative");
  for (const auto& x : b_raw)
    if (x < 0) throw std::invalid_argument("z-exponent must be nonnegative");
  AlphaRep rep = alpha(b_raw, p);
  if (!in_alpha_image(rep, p)) throw std::invalid_argument("z-exponent " + str(b_raw) + " is not in S");
  return FiberedMonomial{gamma0 + gamma(b_raw, p), std::move(rep)};
}

namespace detail {

// Sums of valid normal forms are valid; skips the image check.
inline FiberedMonomial normalize_sum(const Exponent& gamma0, const AlphaRep& a, const AlphaRep& b,
                                     const WeightVector& p) {
  RationalVector v = add(a.entries, b.entries);
  const Exponent g = gamma(v, p);
  if (g != 0)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= g * p[i];
  return FiberedMonomial{gamma0 + g, AlphaRep{std::move(v)}};
}

}  // namespace detail

class FiberedElement {
 public:
  explicit FiberedElement(WeightVector p) : p_(std::move(p)) {}

  static FiberedElement monomial(const WeightVector& p, FiberedMonomial m, Coeff c = 1) {
    FiberedElement e(p);
    e.add(m, c);
    return e;
  }

  const WeightVector& p() const { return p_; }
  const std::map<FiberedMonomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FiberedMonomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  FiberedElement& operator+=(const FiberedElement& o) {
    if (!(o.p_ == p_)) throw std::invalid_argument("elements over different weights");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  friend FiberedElement operator+(FiberedElement a, const FiberedElement& b) { return a += b; }
  friend bool operator==(const FiberedElement& a, const FiberedElement& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  WeightVector p_;
  std::map<FiberedMonomial, Coeff> terms_;
};

inline FiberedMonomial multiply_monomials(const FiberedMonomial& a, const FiberedMonomial& b, const WeightVector& p) {
  return detail::normalize_sum(a.t_exp + b.t_exp, a.z_exp, b.z_exp, p);
}

inline FiberedElement multiply_fibered(const FiberedElement& x, const FiberedElement& y) {
  if (!(x.p() == y.p())) throw std::invalid_argument("elements over different weights");
  FiberedElement out(x.p());
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) out.add(multiply_monomials(m1, m2, x.p()), c1 * c2);
  return out;
}

/// Quotient by (t^gamma : gamma > 0): keeps the t-free terms as monomials of
/// the deformed group ring.
inline DeformedElement restrict_zero_fiber(const FiberedElement& x, const StackPtr& stack) {
  if (!(x.p() == stack->p)) throw std::invalid_argument("element and stack have different weights");
  DeformedElement out(stack);
  for (const auto& [m, c] : x.terms())
    if (m.t_exp == 0) out.add(m.z_exp, c);
  return out;
}

/// f_w = z_0^{w_0} + ... + z_n^{w_n}.
inline FiberedElement build_f(const RootStack& stack) {
  FiberedElement f(stack.p);
  const auto m = stack.p.size();
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m, Exponent(0));
    e[i] = stack.w[i];
    f.add(FiberedMonomial{Exponent(0), AlphaRep{std::move(e)}}, 1);
  }
  return f;
}

/// Monoid maps of the square relating the fibration Y(p) -> C(p) to the torus
/// x^p = t over the t-line:
///   phi*(gamma, b) = b + gamma p,  pi*(gamma) = (gamma, 0),
///   rho*(lambda) = lambda p,       psi*(gamma) = gamma.
/// phi* sends the relation z^b = t^{gamma(b)} z^{alpha(b)} to an identity.
struct FibrationMaps {
  WeightVector p;

  RationalVector phi(const FiberedMonomial& m) const {
    RationalVector v = m.z_exp.entries;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += m.t_exp * p[i];
    return v;
  }
  FiberedMonomial pi(const Exponent& g) const { return FiberedMonomial{g, zero_rep(p.size())}; }
  RationalVector rho(const Exponent& lambda) const {
    RationalVector v(p.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = lambda * p[i];
    return v;
  }
  Exponent psi(const Exponent& g) const { return g; }

  /// Left inverse of phi on normal forms: gamma is min_i v_i / p_i.
  FiberedMonomial recover(std::span<const Exponent> v) const {
    const Exponent g = gamma(v, p);
    return FiberedMonomial{g, alpha(v, p)};
  }

  bool square_commutes(const Exponent& g) const { return phi(pi(g)) == rho(psi(g)); }
};

inline RationalVector phi_star(const FiberedMonomial& m, const WeightVector& p) { return FibrationMaps{p}.phi(m); }

/// t^gamma z^b -> theta(b) t^gamma z^b; stable on the ideal I because theta(p) = 0.
inline FiberedElement xi_fibered(const DualFunctional& theta, const FiberedElement& x) {
  if (theta.entries.size() != x.p().size() || theta.pairing(x.p()) != 0)
    throw std::invalid_argument("functional does not annihilate p");
  FiberedElement out(x.p());
  for (const auto& [m, c] : x.terms()) out.add(m, c * theta_value(theta, m.z_exp.entries));
  return out;
}

/// The t-free normal forms of degree <= bound, generated as sums of the
/// semigroup generators of S. Elements with every coordinate positive are
/// divisible by t and vanish on the zero fibre; no such element is a summand
/// of a t-free one, so the search never needs them.
inline GradedMonomials zero_fiber_monomials(const RootStack& stack, const Exponent& bound) {
  const auto& p = stack.p;
  const auto gens = s_generators(p).distinct();
  std::set<AlphaRep> seen{zero_rep(p.size())};
  std::deque<AlphaRep> queue{zero_rep(p.size())};
  while (!queue.empty()) {
    const AlphaRep cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const auto m = detail::normalize_sum(0, cur, g, p);
      if (m.t_exp != 0 || degree_nu(m.z_exp, stack.w) > bound) continue;
      if (seen.insert(m.z_exp).second) queue.push_back(m.z_exp);
    }
  }
  GradedMonomials out;
  for (const auto& rep : seen) out[degree_nu(rep, stack.w)].push_back(rep);
  return out;
}

/// Jacobian algebra of f_w along the zero fibre, computed entirely inside the
/// coordinate ring of the fibration: fibred products restricted to t = 0 and
/// generators xi_theta(f_w).
inline GradedQuotient zero_fiber_quotient(const StackPtr& stack, std::optional<Exponent> degree_cap = std::nullopt) {
  const auto& p = stack->p;
  const Exponent bound =
      verification_bound(p, degree_cap.value_or(Exponent(static_cast<std::int64_t>(p.dim()) + 1)));
  const FiberedElement f = build_f(*stack);
  std::vector<Terms> gens;
  for (const auto& theta : dual_kernel_basis(p)) gens.push_back(restrict_zero_fiber(xi_fibered(theta, f), stack).terms());
  auto product = [&](const AlphaRep& a, const AlphaRep& b) -> std::optional<AlphaRep> {
    auto m = multiply_monomials(FiberedMonomial{0, a}, FiberedMonomial{0, b}, p);
    if (m.t_exp != 0) return std::nullopt;
    return m.z_exp;
  };
  return assemble_quotient(p, stack->w, bound, zero_fiber_monomials(*stack, bound), gens, product);
}

/// Zero-fibre Jacobian algebra, asserted identical to the orbifold Chow ring
/// computed from the deformed group ring.
inline GradedQuotient jacobian_algebra_zero_fiber(const StackPtr& stack,
                                                  std::optional<Exponent> degree_cap = std::nullopt) {
  GradedQuotient fibre = zero_fiber_quotient(stack, degree_cap);
  if (!(fibre == orbifold_chow(stack, degree_cap)))
    throw InternalError("zero-fibre Jacobian algebra differs from the orbifold Chow ring for p = " + stack->p.str() +
                        ", w = " + stack->w.str());
  return fibre;
}

}  // namespace orbichow

#endif  // ORBICHOW_FIBRATION_HPP
