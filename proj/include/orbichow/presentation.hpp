#ifndef ORBICHOW_PRESENTATION_HPP
#define ORBICHOW_PRESENTATION_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbichow/deformed_ring.hpp"
#include "orbichow/fibration.hpp"
#include "orbichow/linalg.hpp"
#include "orbichow/semigroup.hpp"

namespace orbichow {

enum class GeneratorKind { unit, fractional, t_line };

struct NamedGenerator {
  std::string name;
  FiberedMonomial value;
  GeneratorKind kind;

  friend bool operator==(const NamedGenerator&, const NamedGenerator&) = default;
};

/// Exponent vector over a list of named generators.
struct FormalMonomial {
  std::vector<std::int64_t> exps;

  std::int64_t degree() const { return std::accumulate(exps.begin(), exps.end(), std::int64_t{0}); }
  friend bool operator==(const FormalMonomial&, const FormalMonomial&) = default;
  friend auto operator<=>(const FormalMonomial&, const FormalMonomial&) = default;
};

inline FormalMonomial operator*(const FormalMonomial& a, const FormalMonomial& b) {
  if (a.exps.size() != b.exps.size()) throw std::invalid_argument("monomials over different generator lists");
  FormalMonomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  return m;
}

/// lhs = rhs; a missing rhs means lhs = 0.
struct Relation {
  FormalMonomial lhs;
  std::optional<FormalMonomial> rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct LinearRelation {
  std::vector<std::pair<Coeff, FormalMonomial>> terms;

  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;
};

struct AffinePresentation {
  WeightVector p;
  std::optional<WeightVector> w;
  std::vector<NamedGenerator> generators;
  std::vector<Relation> relations;
  std::vector<LinearRelation> extra_relations;
  std::size_t ambient_dim = 0;
  std::int64_t degree_bound = 0;

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return i;
    throw std::invalid_argument("unknown generator '" + name + "'");
  }

  friend bool operator==(const AffinePresentation&, const AffinePresentation&) = default;
};

inline std::string monomial_string(const FormalMonomial& m, const std::vector<NamedGenerator>& gens) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i].name;
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

/// Parses "w1^2*z1" (or "1") over the given generator names.
inline FormalMonomial parse_monomial(const std::string& text, const std::vector<NamedGenerator>& gens) {
  FormalMonomial m{std::vector<std::int64_t>(gens.size(), 0)};
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1") return m;
  if (s.empty()) throw std::invalid_argument("empty monomial");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto end = std::min(s.find('*', pos), s.size());
    const std::string factor = s.substr(pos, end - pos);
    const auto caret = factor.find('^');
    const std::string name = factor.substr(0, caret);
    std::int64_t e = 1;
    if (caret != std::string::npos) {
      const auto ex = parse_exponent(factor.substr(caret + 1));
      if (!is_integer(ex) || ex < 1) throw std::invalid_argument("bad exponent in '" + factor + "'");
      e = ex.numerator();
    }
    auto it = std::find_if(gens.begin(), gens.end(), [&](const NamedGenerator& g) { return g.name == name; });
    if (it == gens.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    m.exps[static_cast<std::size_t>(it - gens.begin())] += e;
    pos = end + 1;
  }
  return m;
}

/// Evaluates a formal monomial in Q[T + S]/I.
inline FiberedMonomial normal_form(const FormalMonomial& m, const std::vector<NamedGenerator>& gens,
                                   const WeightVector& p) {
  if (m.exps.size() != gens.size()) throw std::invalid_argument("monomial length does not match generators");
  Exponent t(0);
  RationalVector b(p.size(), Exponent(0));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (m.exps[g] == 0) continue;
    t += gens[g].value.t_exp * m.exps[g];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += gens[g].value.z_exp[i] * m.exps[g];
  }
  return normalize_monomial(t, b, p);
}

/// Both sides have the same normal form; lhs = 0 holds when lhs is divisible by
/// a positive power of t, so it dies on the zero fibre.
inline bool verify_relation(const Relation& rel, const AffinePresentation& pres) {
  const auto left = normal_form(rel.lhs, pres.generators, pres.p);
  if (!rel.rhs) return left.t_exp > 0;
  return left == normal_form(*rel.rhs, pres.generators, pres.p);
}

inline bool verify_relation(const std::string& lhs, const std::string& rhs, const AffinePresentation& pres) {
  Relation rel{parse_monomial(lhs, pres.generators), std::nullopt};
  if (rhs != "0") rel.rhs = parse_monomial(rhs, pres.generators);
  return verify_relation(rel, pres);
}

/// Connected components of the monomials of degree <= bound under the moves
/// m*lhs <-> m*rhs that never leave the degree bound.
class BoundedRewriting {
 public:
  BoundedRewriting(std::size_t generator_count, std::int64_t bound) : gens_(generator_count), bound_(bound) {
    FormalMonomial m{std::vector<std::int64_t>(gens_, 0)};
    enumerate(m, 0, 0);
  }

  const std::vector<FormalMonomial>& monomials() const { return monos_; }
  std::optional<std::size_t> id(const FormalMonomial& m) const {
    auto it = ids_.find(m);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  void add(const FormalMonomial& lhs, const FormalMonomial& rhs) {
    const auto top = std::max(lhs.degree(), rhs.degree());
    for (const auto& m : monos_) {
      if (m.degree() + top > bound_) continue;
      unite(*id(m * lhs), *id(m * rhs));
    }
  }

  bool connected(const FormalMonomial& a, const FormalMonomial& b) {
    auto ia = id(a), ib = id(b);
    if (!ia || !ib) return a == b;
    return find(*ia) == find(*ib);
  }

 private:
  void enumerate(FormalMonomial& m, std::size_t from, std::int64_t deg) {
    ids_.emplace(m, monos_.size());
    monos_.push_back(m);
    parent_.push_back(parent_.size());
    if (deg == bound_) return;
    for (std::size_t g = from; g < gens_; ++g) {
      ++m.exps[g];
      enumerate(m, g, deg + 1);
      --m.exps[g];
    }
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::size_t gens_;
  std::int64_t bound_;
  std::vector<FormalMonomial> monos_;
  std::map<FormalMonomial, std::size_t> ids_;
  std::vector<std::size_t> parent_;
};

/// rel follows from `relations` by rewriting inside degree <= bound.
inline bool implied_by(const Relation& rel, const std::vector<Relation>& relations, std::size_t generator_count,
                       std::int64_t bound) {
  if (!rel.rhs) throw std::invalid_argument("only binomial relations can be rewritten");
  BoundedRewriting rw(generator_count, bound);
  for (const auto& r : relations)
    if (r.rhs) rw.add(r.lhs, *r.rhs);
  return rw.connected(rel.lhs, *rel.rhs);
}

namespace detail {

inline FormalMonomial power(std::size_t count, std::size_t g, std::int64_t e) {
  FormalMonomial m{std::vector<std::int64_t>(count, 0)};
  m.exps[g] = e;
  return m;
}

inline std::int64_t common_denominator(const AlphaRep& b) {
  std::int64_t d = 1;
  for (const auto& x : b.entries) d = std::lcm(d, x.denominator());
  return d;
}

inline std::string fractional_name(std::size_t group, std::size_t index, std::int64_t denominator) {
  static const std::string letters = "uvwabcdefghkmnqr";
  if (group < letters.size()) return std::string(1, letters[group]) + std::to_string(index);
  return "x" + std::to_string(denominator) + "_" + std::to_string(index);
}

}  // namespace detail

/// z0..zn, then the irreducible fractional generators of S (one letter per
/// denominator, numbered in residue order), then the t-line generators
/// s or s1..sk by increasing denominator.
inline std::vector<NamedGenerator> named_generators(const WeightVector& p) {
  if (p.dim() == 0) throw std::invalid_argument("presentations need at least two weights");
  const auto m = p.size();
  std::vector<NamedGenerator> out;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m, Exponent(0));
    e[i] = 1;
    out.push_back({"z" + std::to_string(i), FiberedMonomial{Exponent(0), AlphaRep{e}}, GeneratorKind::unit});
  }
  const auto frac = irreducible_fractional(s_generators(p));
  std::map<std::int64_t, std::vector<AlphaRep>> by_den;
  for (const auto& g : frac) by_den[detail::common_denominator(g)].push_back(g);
  std::size_t group = 0;
  for (const auto& [den, list] : by_den) {
    for (std::size_t k = 0; k < list.size(); ++k)
      out.push_back({detail::fractional_name(group, k + 1, den), FiberedMonomial{Exponent(0), list[k]},
                     GeneratorKind::fractional});
    ++group;
  }
  const auto ts = pruned_t_generators(t_generators(p));
  for (std::size_t k = 0; k < ts.size(); ++k)
    out.push_back({ts.size() == 1 ? std::string("s") : "s" + std::to_string(k + 1),
                   FiberedMonomial{ts[k], zero_rep(m)}, GeneratorKind::t_line});
  return out;
}

inline bool is_chain(const WeightVector& p) {
  if (p[0] != 1) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i + 1] % p[i] != 0) return false;
  return true;
}

/// Embedding when p_0 = 1 and p_i | p_{i+1}:
///   v1^d1 = z0, v_{i+1}^d_{i+1} = v_i z_i, v_n z_n = s.
inline AffinePresentation chain_presentation(const WeightVector& p) {
  if (p.dim() == 0 || !is_chain(p)) throw std::invalid_argument("chain presentation needs p_0 = 1 and p_i | p_{i+1}");
  const std::size_t n = p.dim(), m = p.size();
  AffinePresentation pres{p, std::nullopt, {}, {}, {}, 0, 0};
  for (std::size_t i = 1; i <= n; ++i) {
    RationalVector v(m, Exponent(0));
    for (std::size_t j = 0; j < i; ++j) v[j] = Exponent(p[j], p[i]);
    pres.generators.push_back({"v" + std::to_string(i), FiberedMonomial{Exponent(0), AlphaRep{v}},
                               GeneratorKind::fractional});
  }
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m, Exponent(0));
    e[i] = 1;
    pres.generators.push_back({"z" + std::to_string(i), FiberedMonomial{Exponent(0), AlphaRep{e}},
                               GeneratorKind::unit});
  }
  pres.generators.push_back({"s", FiberedMonomial{Exponent(1, p[n]), zero_rep(m)}, GeneratorKind::t_line});
  const std::size_t count = pres.generators.size();
  auto v = [&](std::size_t i) { return i - 1; };
  auto z = [&](std::size_t i) { return n + i; };
  const std::size_t s = count - 1;
  pres.relations.push_back({detail::power(count, v(1), p[1] / p[0]), detail::power(count, z(0), 1)});
  for (std::size_t i = 1; i < n; ++i)
    pres.relations.push_back({detail::power(count, v(i + 1), p[i + 1] / p[i]),
                              detail::power(count, v(i), 1) * detail::power(count, z(i), 1)});
  pres.relations.push_back(
      {detail::power(count, v(n), 1) * detail::power(count, z(n), 1), detail::power(count, s, 1)});
  pres.ambient_dim = count;
  std::int64_t top = 1;
  for (const auto& r : pres.relations) top = std::max({top, r.lhs.degree(), r.rhs->degree()});
  pres.degree_bound = top;
  for (const auto& r : pres.relations)
    if (!verify_relation(r, pres)) throw InternalError("chain relation fails to verify");
  return pres;
}

/// Rewriting may pass through monomials this many degrees above the
/// enumeration bound when deciding whether a relation is already implied.
inline constexpr std::int64_t rewriting_slack = 2;

/// Binomial relations among the named generators, complete up to total degree
/// `degree_bound`: products are bucketed by normal form and each bucket is
/// connected to its first member, skipping links that the relations found so
/// far already imply by bounded rewriting.
inline AffinePresentation affine_embedding(const WeightVector& p, std::int64_t degree_bound = 4) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  AffinePresentation pres{p, std::nullopt, named_generators(p), {}, {}, 0, degree_bound};
  const std::size_t count = pres.generators.size();
  BoundedRewriting rw(count, degree_bound + rewriting_slack);
  const auto& monos = rw.monomials();

  std::map<FiberedMonomial, std::vector<std::size_t>> buckets;
  for (std::size_t i = 1; i < monos.size(); ++i)
    if (monos[i].degree() <= degree_bound) buckets[normal_form(monos[i], pres.generators, p)].push_back(i);
  for (auto& [nf, ids] : buckets)
    std::stable_sort(ids.begin(), ids.end(),
                     [&](std::size_t a, std::size_t b) { return monos[a].degree() < monos[b].degree(); });

  for (std::int64_t d = 2; d <= degree_bound; ++d)
    for (const auto& [nf, ids] : buckets) {
      const auto& anchor = monos[ids.front()];
      for (auto id : ids) {
        const auto& x = monos[id];
        if (x.degree() != d || id == ids.front() || rw.connected(x, anchor)) continue;
        pres.relations.push_back({x, anchor});
        rw.add(x, anchor);
      }
    }
  pres.ambient_dim = count;
  return pres;
}

/// The Chow ring presentation: the embedding with the t-line generators set
/// to zero plus the degree-one relations
///   (w_i/p_i) z_i^{w_i} - (w_{i+1}/p_{i+1}) z_{i+1}^{w_{i+1}}.
inline AffinePresentation chow_presentation(const StackPtr& stack, std::int64_t degree_bound = 4) {
  const auto& p = stack->p;
  const auto& w = stack->w;
  const auto emb = affine_embedding(p, degree_bound);
  AffinePresentation pres{p, w, {}, {}, {}, 0, degree_bound};
  std::vector<std::size_t> keep;
  for (std::size_t g = 0; g < emb.generators.size(); ++g)
    if (emb.generators[g].kind != GeneratorKind::t_line) {
      keep.push_back(g);
      pres.generators.push_back(emb.generators[g]);
    }
  auto has_t = [&](const FormalMonomial& m) {
    for (std::size_t g = 0; g < m.exps.size(); ++g)
      if (m.exps[g] != 0 && emb.generators[g].kind == GeneratorKind::t_line) return true;
    return false;
  };
  auto restrict = [&](const FormalMonomial& m) {
    FormalMonomial r{std::vector<std::int64_t>(keep.size())};
    for (std::size_t k = 0; k < keep.size(); ++k) r.exps[k] = m.exps[keep[k]];
    return r;
  };
  std::vector<FormalMonomial> killed;
  for (const auto& rel : emb.relations) {
    const bool left = has_t(rel.lhs), right = has_t(*rel.rhs);
    if (left && right) continue;
    if (!left && !right)
      pres.relations.push_back({restrict(rel.lhs), restrict(*rel.rhs)});
    else
      killed.push_back(restrict(left ? *rel.rhs : rel.lhs));
  }
  // Keep only the minimal generators of the monomial ideal, in order.
  auto divides = [](const FormalMonomial& a, const FormalMonomial& b) {
    for (std::size_t g = 0; g < a.exps.size(); ++g)
      if (a.exps[g] > b.exps[g]) return false;
    return true;
  };
  for (std::size_t i = 0; i < killed.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < killed.size() && !redundant; ++j)
      redundant = j != i && divides(killed[j], killed[i]) && (killed[j] != killed[i] || j < i);
    if (!redundant) pres.relations.push_back({killed[i], std::nullopt});
  }

  const std::size_t count = pres.generators.size();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    LinearRelation lr;
    lr.terms.emplace_back(Coeff(w[i], p[i]), detail::power(count, i, w[i]));
    lr.terms.emplace_back(-Coeff(w[i + 1], p[i + 1]), detail::power(count, i + 1, w[i + 1]));
    for (auto& [c, m] : lr.terms) c.canonicalize();
    pres.extra_relations.push_back(std::move(lr));
  }

  // Both lists are bases of the same space of degree-one relations among the
  // monomials y^{w_i e_i}.
  std::vector<SparseRow> ours, jac;
  for (const auto& lr : pres.extra_relations) {
    SparseRow row;
    for (const auto& [c, m] : lr.terms)
      for (std::size_t i = 0; i < p.size(); ++i)
        if (m.exps[i] != 0) row[i] += c;
    ours.push_back(row);
  }
  for (const auto& g : jacobian_generators(stack)) {
    SparseRow row;
    for (const auto& [mono, c] : g.terms())
      for (std::size_t i = 0; i < p.size(); ++i)
        if (mono[i] != 0) row[i] += c;
    jac.push_back(row);
  }
  std::vector<SparseRow> both = ours;
  both.insert(both.end(), jac.begin(), jac.end());
  if (rank_of(ours) != p.dim() || rank_of(jac) != p.dim() || rank_of(both) != p.dim())
    throw InternalError("degree-one relations do not span the Jacobian relations");

  pres.ambient_dim = count;
  for (const auto& r : pres.relations)
    if (!verify_relation(r, pres)) throw InternalError("emitted relation " + monomial_string(r.lhs, pres.generators) +
                                                       " fails to verify");
  return pres;
}

/// Rewrites the relations of `from` over the generator list of `to`, matching
/// generators by their defining monomials. Generators of `from` that are not
/// generators of `to` must be expressible as products of them; the product of
/// lowest degree within the degree bound of `to` is used.
inline std::optional<std::vector<Relation>> transport_relations(const AffinePresentation& from,
                                                                const AffinePresentation& to) {
  const std::size_t count = to.generators.size();
  std::vector<FormalMonomial> image;
  for (const auto& g : from.generators) {
    std::optional<FormalMonomial> hit;
    BoundedRewriting rw(count, std::max<std::int64_t>(to.degree_bound, 1));
    for (const auto& m : rw.monomials())
      if (m.degree() > 0 && (!hit || m.degree() < hit->degree()) && normal_form(m, to.generators, to.p) == g.value)
        hit = m;
    if (!hit) return std::nullopt;
    image.push_back(*hit);
  }
  auto map = [&](const FormalMonomial& m) {
    FormalMonomial r{std::vector<std::int64_t>(count, 0)};
    for (std::size_t g = 0; g < m.exps.size(); ++g)
      for (std::int64_t e = 0; e < m.exps[g]; ++e) r = r * image[g];
    return r;
  };
  std::vector<Relation> out;
  for (const auto& rel : from.relations)
    out.push_back({map(rel.lhs), rel.rhs ? std::optional(map(*rel.rhs)) : std::nullopt});
  return out;
}

/// Each relation set implies the other by rewriting inside `bound`.
/// Callers usually pass the enumeration bound plus rewriting_slack.
inline bool equivalent_presentations(const AffinePresentation& a, const AffinePresentation& b, std::int64_t bound) {
  const auto a_in_b = transport_relations(a, b);
  const auto b_in_a = transport_relations(b, a);
  if (!a_in_b || !b_in_a) return false;
  for (const auto& r : *a_in_b)
    if (!implied_by(r, b.relations, b.generators.size(), bound)) return false;
  for (const auto& r : *b_in_a)
    if (!implied_by(r, a.relations, a.generators.size(), bound)) return false;
  return true;
}

}  // namespace orbichow

#endif  // ORBICHOW_PRESENTATION_HPP
