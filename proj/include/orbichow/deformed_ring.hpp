#ifndef ORBICHOW_DEFORMED_RING_HPP
#define ORBICHOW_DEFORMED_RING_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbichow/lattice.hpp"
#include "orbichow/linalg.hpp"

namespace orbichow {

/// Combinatorial data of the root stack X(w, p): weights p of the coarse
/// weighted projective space and multiplicities w of the toric divisors.
struct RootStack {
  WeightVector p;
  WeightVector w;

  RootStack(WeightVector p_, WeightVector w_) : p(std::move(p_)), w(std::move(w_)) {
    if (p.size() != w.size()) throw std::invalid_argument("p and w must have the same length");
  }
  std::size_t dim() const { return p.dim(); }
  friend bool operator==(const RootStack& a, const RootStack& b) { return a.p == b.p && a.w == b.w; }
};

using StackPtr = std::shared_ptr<const RootStack>;

inline StackPtr make_stack(const IntVector& p, const IntVector& w) {
  return std::make_shared<const RootStack>(WeightVector(p, WeightKind::weights),
                                           WeightVector(w, WeightKind::multiplicities));
}

inline StackPtr make_stack(const WeightVector& p, const WeightVector& w) { return std::make_shared<const RootStack>(p, w); }

using Terms = std::map<AlphaRep, Coeff>;

inline void add_term(Terms& terms, const AlphaRep& key, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, 0);
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

/// Element of the deformed group ring Q[N]^Sigma: a finite combination of
/// monomials y^c indexed by canonical class representatives.
class DeformedElement {
 public:
  explicit DeformedElement(StackPtr stack) : stack_(std::move(stack)) {}

  static DeformedElement monomial(StackPtr stack, AlphaRep c, Coeff coeff = 1) {
    DeformedElement e(std::move(stack));
    e.add(std::move(c), coeff);
    return e;
  }
  static DeformedElement one(StackPtr stack) {
    const auto n = stack->p.size();
    return monomial(std::move(stack), zero_rep(n));
  }

  const Terms& terms() const { return terms_; }
  const StackPtr& stack() const { return stack_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const AlphaRep& c, const Coeff& coeff) { add_term(terms_, c, coeff); }

  DeformedElement& operator+=(const DeformedElement& o) {
    check_compatible(o);
    for (const auto& [c, v] : o.terms_) add(c, v);
    return *this;
  }
  DeformedElement& operator-=(const DeformedElement& o) {
    check_compatible(o);
    for (const auto& [c, v] : o.terms_) add(c, -v);
    return *this;
  }
  DeformedElement& operator*=(const Coeff& s) {
    if (s == 0) terms_.clear();
    for (auto& [c, v] : terms_) v *= s;
    return *this;
  }

  friend DeformedElement operator+(DeformedElement a, const DeformedElement& b) { return a += b; }
  friend DeformedElement operator-(DeformedElement a, const DeformedElement& b) { return a -= b; }
  friend DeformedElement operator*(const Coeff& s, DeformedElement a) { return a *= s; }
  friend bool operator==(const DeformedElement& a, const DeformedElement& b) {
    return *a.stack_ == *b.stack_ && a.terms_ == b.terms_;
  }

  void check_compatible(const DeformedElement& o) const {
    if (stack_ != o.stack_ && !(*stack_ == *o.stack_))
      throw std::invalid_argument("elements belong to different root stacks");
  }

 private:
  StackPtr stack_;
  Terms terms_;
};

/// y^{c1} y^{c2} = y^{c1+c2} when c1, c2 share a cone, otherwise 0. For
/// canonical representatives sharing a zero coordinate the sum is already
/// canonical.
inline std::optional<AlphaRep> deformed_monomial_product(const AlphaRep& c1, const AlphaRep& c2) {
  if (!same_cone(c1, c2)) return std::nullopt;
  return AlphaRep{add(c1.entries, c2.entries)};
}

inline DeformedElement multiply(const DeformedElement& x, const DeformedElement& y) {
  x.check_compatible(y);
  DeformedElement out(x.stack());
  for (const auto& [c1, v1] : x.terms())
    for (const auto& [c2, v2] : y.terms())
      if (auto c = deformed_monomial_product(c1, c2)) out.add(*c, v1 * v2);
  return out;
}

inline DeformedElement operator*(const DeformedElement& x, const DeformedElement& y) { return multiply(x, y); }

/// Evaluates an integral functional on a class; theta(p) = 0 makes the value
/// independent of the lift, so it is read off the canonical representative.
inline Coeff theta_value(const DualFunctional& theta, std::span<const Exponent> c) {
  const Exponent v = theta(c);
  if (!is_integer(v)) throw InternalError("functional is not integral on a lattice class");
  return to_coeff(v);
}

/// xi_theta(y^c) = theta(c) y^c.
inline DeformedElement xi_derivation(const DualFunctional& theta, const DeformedElement& x) {
  if (theta.entries.size() != x.stack()->p.size() || theta.pairing(x.stack()->p) != 0)
    throw std::invalid_argument("functional does not annihilate p");
  DeformedElement out(x.stack());
  for (const auto& [c, v] : x.terms()) out.add(c, v * theta_value(theta, c.entries));
  return out;
}

/// sum_i y^{w_i e_i}, the image of the standard basis under beta.
inline DeformedElement beta_sum(const StackPtr& stack) {
  DeformedElement f(stack);
  const auto m = stack->p.size();
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m, Exponent(0));
    e[i] = stack->w[i];
    f.add(AlphaRep{std::move(e)}, 1);
  }
  return f;
}

inline std::vector<DeformedElement> jacobian_generators(const StackPtr& stack,
                                                        const std::vector<DualFunctional>& dual_basis) {
  const auto f = beta_sum(stack);
  std::vector<DeformedElement> out;
  for (const auto& theta : dual_basis) out.push_back(xi_derivation(theta, f));
  return out;
}

inline std::vector<DeformedElement> jacobian_generators(const StackPtr& stack) {
  return jacobian_generators(stack, dual_kernel_basis(stack->p));
}

/// Newton-filtration degree sum_i c_i / w_i of a canonical representative.
inline Exponent degree_nu(std::span<const Exponent> c, const WeightVector& w) {
  require_length(c.size(), w);
  Exponent d(0);
  for (std::size_t i = 0; i < c.size(); ++i) d += c[i] / w[i];
  return d;
}

inline Exponent degree_nu(const AlphaRep& c, const WeightVector& w) { return degree_nu(std::span(c.entries), w); }

using GradedMonomials = std::map<Exponent, std::vector<AlphaRep>>;

/// All canonical representatives of degree at most `bound`, grouped by degree
/// and sorted. A representative with b_j = 0 is r + m where r is the residue
/// vector (k p_i mod p_j)/p_j and m is a nonnegative integer vector with m_j = 0.
inline GradedMonomials monomials_up_to(const WeightVector& p, const WeightVector& w, const Exponent& bound) {
  require_length(w.size(), p);
  const std::size_t m = p.size();
  std::set<AlphaRep> found;
  for (std::size_t j = 0; j < m; ++j)
    for (std::int64_t k = 0; k < p[j]; ++k) {
      RationalVector b(m);
      for (std::size_t i = 0; i < m; ++i) b[i] = Exponent(mod_floor(k * p[i], p[j]), p[j]);
      const Exponent base = degree_nu(b, w);
      if (base > bound) continue;
      std::function<void(std::size_t, Exponent)> fill = [&](std::size_t i, Exponent deg) {
        if (i == m) {
          found.insert(AlphaRep{b});
          return;
        }
        if (i == j) return fill(i + 1, deg);
        const Exponent start = b[i];
        for (;;) {
          fill(i + 1, deg);
          b[i] += 1;
          deg += Exponent(1, w[i]);
          if (deg > bound) break;
        }
        b[i] = start;
      };
      fill(0, base);
    }
  GradedMonomials out;
  for (const auto& rep : found) out[degree_nu(rep, w)].push_back(rep);
  return out;
}

inline std::vector<AlphaRep> monomials_of_degree(const WeightVector& p, const WeightVector& w, const Exponent& d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  auto all = monomials_up_to(p, w, d);
  auto it = all.find(d);
  return it == all.end() ? std::vector<AlphaRep>{} : it->second;
}

using BasisVector = std::map<std::size_t, Coeff>;

struct QuotientSlice {
  Exponent degree;
  /// Surviving monomials of this degree; global basis indices start at offset.
  std::vector<AlphaRep> basis;
  std::size_t offset = 0;
  /// Every eliminated monomial of this degree written in the global basis.
  std::map<AlphaRep, BasisVector> reductions;

  friend bool operator==(const QuotientSlice&, const QuotientSlice&) = default;
};

/// Graded quotient of the deformed group ring by the ideal generated by
/// degree-one Jacobian elements, computed slice by slice up to
/// verified_through.
struct GradedQuotient {
  WeightVector p;
  WeightVector w;
  Exponent verified_through;
  std::vector<QuotientSlice> slices;
  /// Structure constants e_i e_j for i <= j; absent pairs multiply to zero.
  std::map<std::pair<std::size_t, std::size_t>, BasisVector> products;

  std::size_t total_dim() const {
    std::size_t d = 0;
    for (const auto& s : slices) d += s.basis.size();
    return d;
  }
  /// (degree, dimension) for every degree with a nonzero graded piece.
  std::vector<std::pair<Exponent, std::size_t>> dims() const {
    std::vector<std::pair<Exponent, std::size_t>> out;
    for (const auto& s : slices)
      if (!s.basis.empty()) out.emplace_back(s.degree, s.basis.size());
    return out;
  }
  std::vector<Exponent> degrees() const {
    std::vector<Exponent> out;
    for (const auto& [d, n] : dims()) out.push_back(d);
    return out;
  }
  const QuotientSlice& slice_of(std::size_t index) const {
    for (const auto& s : slices)
      if (index >= s.offset && index < s.offset + s.basis.size()) return s;
    throw std::out_of_range("basis index out of range");
  }
  const AlphaRep& basis_element(std::size_t index) const {
    const auto& s = slice_of(index);
    return s.basis[index - s.offset];
  }
  Exponent degree_of(std::size_t index) const { return slice_of(index).degree; }

  /// Class of a monomial in the quotient.
  BasisVector reduce(const AlphaRep& m) const {
    const Exponent d = degree_nu(m, w);
    if (d > verified_through) return {};
    // Slices are sorted by degree and each basis is sorted.
    auto s = std::lower_bound(slices.begin(), slices.end(), d,
                              [](const QuotientSlice& x, const Exponent& v) { return x.degree < v; });
    if (s == slices.end() || s->degree != d) throw InternalError("no slice for degree " + to_string(d));
    auto b = std::lower_bound(s->basis.begin(), s->basis.end(), m);
    if (b != s->basis.end() && *b == m) return {{s->offset + static_cast<std::size_t>(b - s->basis.begin()), Coeff(1)}};
    auto r = s->reductions.find(m);
    if (r == s->reductions.end()) throw InternalError("monomial missing from its degree slice");
    return r->second;
  }

  BasisVector product(std::size_t i, std::size_t j) const {
    auto it = products.find({std::min(i, j), std::max(i, j)});
    return it == products.end() ? BasisVector{} : it->second;
  }

  BasisVector multiply(const BasisVector& x, const BasisVector& y) const {
    BasisVector out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y)
        for (const auto& [k, c] : product(i, j)) {
          auto [it, inserted] = out.try_emplace(k, 0);
          it->second += a * b * c;
          if (it->second == 0) out.erase(it);
        }
    return out;
  }

  bool is_associative() const {
    const auto n = total_dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const BasisVector ei{{i, 1}}, ej{{j, 1}}, ek{{k, 1}};
          if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek))) return false;
        }
    return true;
  }

  friend bool operator==(const GradedQuotient&, const GradedQuotient&) = default;
};

/// Builds the graded quotient from its ingredients. Shared by the deformed
/// group ring and by the zero fibre of the mirror fibration, which supply
/// their own monomials, generators and monomial product.
///
/// A monomial of degree > n always has some coordinate b_j >= w_j, so it is
/// y^{w_j e_j} times a monomial of degree one less. Once every slice in
/// (n, n+1] vanishes, every degree above n vanishes, and products landing
/// beyond verified_through are zero.
template <class Product>
GradedQuotient assemble_quotient(const WeightVector& p, const WeightVector& w, const Exponent& bound,
                                 const GradedMonomials& monomials, const std::vector<Terms>& generators,
                                 Product&& product) {
  GradedQuotient q{p, w, bound, {}, {}};
  std::map<Exponent, std::size_t> slice_index;
  std::size_t offset = 0;
  for (const auto& [deg, monos] : monomials) {
    if (deg > bound) break;
    std::map<AlphaRep, std::size_t> column;
    for (std::size_t c = 0; c < monos.size(); ++c) column.emplace(monos[c], c);

    RowEchelon echelon;
    auto prev = monomials.find(deg - 1);
    if (prev != monomials.end()) {
      for (const auto& m : prev->second)
        for (const auto& g : generators) {
          SparseRow row;
          for (const auto& [c, v] : g) {
            auto prod = product(m, c);
            if (!prod) continue;
            auto col = column.find(*prod);
            if (col == column.end()) throw InternalError("product left the enumerated monomials");
            auto [it, inserted] = row.try_emplace(col->second, 0);
            it->second += v;
            if (it->second == 0) row.erase(it);
          }
          echelon.insert(std::move(row));
        }
    }
    echelon.reduce();

    QuotientSlice slice{deg, {}, offset, {}};
    std::map<std::size_t, std::size_t> free_pos;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!echelon.is_pivot(c)) {
        free_pos.emplace(c, slice.basis.size());
        slice.basis.push_back(monos[c]);
      }
    for (const auto& [pivot, row] : echelon.rows()) {
      BasisVector expr;
      for (const auto& [c, v] : row)
        if (c != pivot) expr.emplace(offset + free_pos.at(c), -v);
      slice.reductions.emplace(monos[pivot], std::move(expr));
    }
    if (deg > Exponent(static_cast<std::int64_t>(p.dim())) && !slice.basis.empty())
      throw InternalError("quotient does not vanish in degree " + to_string(deg));
    offset += slice.basis.size();
    slice_index.emplace(deg, q.slices.size());
    q.slices.push_back(std::move(slice));
  }

  const std::size_t total = offset;
  std::vector<const AlphaRep*> element;
  for (const auto& s : q.slices)
    for (const auto& b : s.basis) element.push_back(&b);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i; j < total; ++j) {
      auto prod = product(*element[i], *element[j]);
      if (!prod) continue;
      BasisVector v = q.reduce(*prod);
      if (!v.empty()) q.products.emplace(std::make_pair(i, j), std::move(v));
    }
  return q;
}

/// Degree through which slices are computed: the requested cap, and never
/// less than one full unit above the dimension so vanishing is certified.
inline Exponent verification_bound(const WeightVector& p, const Exponent& degree_cap) {
  const Exponent n(static_cast<std::int64_t>(p.dim()));
  if (degree_cap < n) throw std::invalid_argument("degree cap must be at least the dimension");
  return std::max(degree_cap, n + 1);
}

inline GradedQuotient orbifold_chow(const StackPtr& stack, std::optional<Exponent> degree_cap = std::nullopt,
                                    std::optional<std::vector<DualFunctional>> dual_basis = std::nullopt) {
  const auto& p = stack->p;
  const auto& w = stack->w;
  const Exponent bound =
      verification_bound(p, degree_cap.value_or(Exponent(static_cast<std::int64_t>(p.dim()) + 1)));
  const auto basis = dual_basis ? *dual_basis : dual_kernel_basis(p);
  if (!is_kernel_lattice_basis(basis, p)) throw std::invalid_argument("not a basis of the dual lattice");
  std::vector<Terms> gens;
  for (const auto& g : jacobian_generators(stack, basis)) gens.push_back(g.terms());
  return assemble_quotient(p, w, bound, monomials_up_to(p, w, bound), gens, deformed_monomial_product);
}

}  // namespace orbichow

#endif  // ORBICHOW_DEFORMED_RING_HPP
