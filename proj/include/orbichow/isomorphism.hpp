#ifndef ORBICHOW_ISOMORPHISM_HPP
#define ORBICHOW_ISOMORPHISM_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbichow/deformed_ring.hpp"
#include "orbichow/presentation.hpp"
#include "orbichow/semigroup.hpp"

namespace orbichow {

/// Rescaling of the first n weights by a, with gcd(a, p_n) = 1:
///   p' = (a p_0, ..., a p_{n-1}, p_n),  w'' = (w_0, ..., w_{n-1}, a w_n).
/// X(w, p') and X(w'', p) are isomorphic.
class RescalePair {
 public:
  RescalePair(WeightVector p, std::int64_t a) : p_(std::move(p)), a_(a), scaled_(make_scaled(p_, a)) {}

  const WeightVector& p() const { return p_; }
  std::int64_t a() const { return a_; }
  const WeightVector& scaled_p() const { return scaled_; }

  WeightVector scaled_w(const WeightVector& w) const {
    require_length(w.size(), p_);
    IntVector e = w.entries();
    e.back() *= a_;
    return WeightVector(std::move(e), WeightKind::multiplicities);
  }

 private:
  static WeightVector make_scaled(const WeightVector& p, std::int64_t a) {
    if (p.dim() == 0) throw std::invalid_argument("rescaling needs at least two weights");
    if (a < 1) throw std::invalid_argument("rescale factor must be positive");
    if (std::gcd(a, p[p.dim()]) != 1) throw std::invalid_argument("rescale factor must be coprime to the last weight");
    IntVector e = p.entries();
    for (std::size_t i = 0; i + 1 < e.size(); ++i) e[i] *= a;
    return WeightVector(std::move(e));
  }

  WeightVector p_;
  std::int64_t a_;
  WeightVector scaled_;
};

/// (1/p_i) rem(k p_j, p_i) == (1/(a p_i)) rem(k a p_j, a p_i).
inline bool remainder_identity(const WeightVector& p, std::int64_t a, std::size_t i, std::size_t j, std::int64_t k) {
  if (i >= p.size() || j >= p.size()) throw std::invalid_argument("index out of range");
  if (k < 0 || a < 1) throw std::invalid_argument("k must be nonnegative and a positive");
  const Exponent left(mod_floor(k * p[j], p[i]), p[i]);
  const Exponent right(mod_floor(k * a * p[j], a * p[i]), a * p[i]);
  return left == right;
}

/// gamma -> gamma / a, asserted to land in T(p').
inline Exponent h_star(const Exponent& g, const RescalePair& pair) {
  const Exponent image = g / pair.a();
  if (!in_t(image, t_generators(pair.scaled_p())))
    throw InternalError(to_string(image) + " is not in T" + pair.scaled_p().str());
  return image;
}

/// (b_0, ..., b_{n-1}, b_n) -> (b_0, ..., b_{n-1}, b_n / a), asserted to be a
/// class representative for p'.
inline AlphaRep phi_star_scale(const AlphaRep& b, const RescalePair& pair) {
  require_length(b.size(), pair.p());
  RationalVector v = b.entries;
  v.back() /= pair.a();
  if (!in_alpha_image(v, pair.scaled_p()))
    throw InternalError(str(v) + " is not a representative for p' = " + pair.scaled_p().str());
  return AlphaRep{std::move(v)};
}

inline AlphaRep phi_star_scale_inverse(const AlphaRep& b, const RescalePair& pair) {
  RationalVector v = b.entries;
  v.back() *= pair.a();
  return AlphaRep{std::move(v)};
}

struct InvarianceReport {
  WeightVector p;
  WeightVector w;
  std::int64_t a;
  std::vector<std::pair<Exponent, std::size_t>> degree_dims_left;
  std::vector<std::pair<Exponent, std::size_t>> degree_dims_right;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

/// Compares X(w, p') (left) with X(w'', p) (right):
///  - graded dimensions of both orbifold Chow rings;
///  - every S(p') generator has a preimage in S(p) (decomposition witness);
///  - relations of the bounded embedding of p map to relations for p' under
///    z_n -> z_n^{1/a}, t -> t^{1/a};
///  - the monomial map is a graded ring isomorphism on the computed quotients
///    (invertible, and compatible with every structure constant).
inline InvarianceReport chow_invariance(const WeightVector& w, const WeightVector& p, std::int64_t a,
                                        std::optional<Exponent> degree_cap = std::nullopt,
                                        std::int64_t relation_bound = 3) {
  const RescalePair pair(p, a);
  InvarianceReport report{p, w, a, {}, {}, true, {}, {}};
  const auto left = orbifold_chow(make_stack(pair.scaled_p(), w), degree_cap);
  const auto right = orbifold_chow(make_stack(p, pair.scaled_w(w)), degree_cap);
  report.degree_dims_left = left.dims();
  report.degree_dims_right = right.dims();
  if (left.dims() != right.dims()) report.fail("graded dimensions differ");

  // Surjectivity of phi* on generators of S(p').
  const auto source_gens = s_generators(p).distinct();
  for (const auto& g : s_generators(pair.scaled_p()).distinct()) {
    const auto pre = phi_star_scale_inverse(g, pair);
    const auto c = s_decompose(pre.entries, source_gens);
    if (!c) {
      report.fail("no preimage in S(p) for " + str(g.entries));
      continue;
    }
    std::string wit = str(g.entries) + " = phi*(";
    bool first = true;
    for (std::size_t k = 0; k < c->size(); ++k)
      if ((*c)[k] != 0) {
        wit += (first ? "" : " + ") + std::to_string((*c)[k]) + "*" + str(source_gens[k].entries);
        first = false;
      }
    report.witnesses.push_back(wit + (first ? "0)" : ")"));
  }

  // Relation transport on the bounded embedding.
  const auto emb = affine_embedding(p, relation_bound);
  std::vector<NamedGenerator> mapped;
  for (const auto& g : emb.generators) {
    NamedGenerator m = g;
    m.value.t_exp = h_star(g.value.t_exp, pair);
    m.value.z_exp = phi_star_scale(g.value.z_exp, pair);
    mapped.push_back(std::move(m));
  }
  std::size_t transported = 0;
  for (const auto& rel : emb.relations) {
    if (normal_form(rel.lhs, mapped, pair.scaled_p()) != normal_form(*rel.rhs, mapped, pair.scaled_p()))
      report.fail("relation " + monomial_string(rel.lhs, emb.generators) + " = " +
                  monomial_string(*rel.rhs, emb.generators) + " is not carried to a relation");
    else
      ++transported;
  }
  report.witnesses.push_back(std::to_string(transported) + " relations transported");

  // Ring isomorphism on the quotients: right basis -> left classes.
  if (left.total_dim() == right.total_dim()) {
    const std::size_t dim = right.total_dim();
    std::vector<BasisVector> image(dim);
    RowEchelon echelon;
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& b = right.basis_element(i);
      if (degree_nu(phi_star_scale(b, pair), w) != right.degree_of(i)) report.fail("degree not preserved");
      image[i] = left.reduce(phi_star_scale(b, pair));
      echelon.insert(SparseRow(image[i].begin(), image[i].end()));
    }
    if (echelon.rank() != dim) report.fail("monomial map is not invertible on the quotients");
    auto apply = [&](const BasisVector& x) {
      BasisVector out;
      for (const auto& [i, c] : x)
        for (const auto& [k, v] : image[i]) {
          auto [it, inserted] = out.try_emplace(k, 0);
          it->second += c * v;
          if (it->second == 0) out.erase(it);
        }
      return out;
    };
    std::size_t checked = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        ++checked;
        if (apply(right.product(i, j)) != left.multiply(image[i], image[j]))
          report.fail("structure constant mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    report.witnesses.push_back(std::to_string(checked) + " structure constants compared");
  }
  return report;
}

}  // namespace orbichow

#endif  // ORBICHOW_ISOMORPHISM_HPP
