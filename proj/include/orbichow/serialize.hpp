#ifndef ORBICHOW_SERIALIZE_HPP
#define ORBICHOW_SERIALIZE_HPP

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbichow/deformed_ring.hpp"
#include "orbichow/fibration.hpp"
#include "orbichow/isomorphism.hpp"
#include "orbichow/presentation.hpp"
#include "orbichow/semigroup.hpp"

namespace orbichow {

using Json = nlohmann::ordered_json;

enum class Format { json, singular, macaulay2, latex };

inline Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "singular") return Format::singular;
  if (name == "macaulay2") return Format::macaulay2;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unsupported format '" + name + "'");
}

namespace detail {

inline Json rational_list(std::span<const Exponent> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline RationalVector parse_rational_list(const Json& j) {
  RationalVector v;
  for (const auto& x : j) v.push_back(parse_exponent(x.get<std::string>()));
  return v;
}

inline Json basis_vector(const BasisVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json::array({k, to_string(c)}));
  return out;
}

inline BasisVector parse_basis_vector(const Json& j) {
  BasisVector v;
  for (const auto& e : j) v.emplace(e.at(0).get<std::size_t>(), parse_coeff(e.at(1).get<std::string>()));
  return v;
}

inline Json dims(const std::vector<std::pair<Exponent, std::size_t>>& d) {
  Json out = Json::array();
  for (const auto& [deg, n] : d) out.push_back(Json::array({to_string(deg), n}));
  return out;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline void expect_kind(const Json& j, const std::string& kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
    throw std::invalid_argument("expected a document of kind '" + kind + "'");
}

}  // namespace detail

// ---- quotient -------------------------------------------------------------

inline Json to_json(const GradedQuotient& q) {
  Json j;
  j["kind"] = "orbifold_chow";
  j["p"] = q.p.entries();
  j["w"] = q.w.entries();
  j["verified_through"] = to_string(q.verified_through);
  j["total_dim"] = q.total_dim();
  j["dims"] = detail::dims(q.dims());
  Json slices = Json::array();
  for (const auto& s : q.slices) {
    Json js;
    js["degree"] = to_string(s.degree);
    js["offset"] = s.offset;
    js["basis"] = Json::array();
    for (const auto& b : s.basis) js["basis"].push_back(detail::rational_list(b.entries));
    js["reductions"] = Json::array();
    for (const auto& [m, v] : s.reductions)
      js["reductions"].push_back(Json::array({detail::rational_list(m.entries), detail::basis_vector(v)}));
    slices.push_back(std::move(js));
  }
  j["slices"] = std::move(slices);
  Json products = Json::array();
  for (const auto& [ij, v] : q.products) products.push_back(Json::array({ij.first, ij.second, detail::basis_vector(v)}));
  j["structure_constants"] = std::move(products);
  return j;
}

inline GradedQuotient quotient_from_json(const Json& j) {
  detail::expect_kind(j, "orbifold_chow");
  GradedQuotient q{WeightVector(detail::field(j, "p").get<IntVector>()),
                   WeightVector(detail::field(j, "w").get<IntVector>(), WeightKind::multiplicities),
                   parse_exponent(detail::field(j, "verified_through").get<std::string>()),
                   {},
                   {}};
  for (const auto& js : detail::field(j, "slices")) {
    QuotientSlice s{parse_exponent(js.at("degree").get<std::string>()), {}, js.at("offset").get<std::size_t>(), {}};
    for (const auto& b : js.at("basis")) s.basis.push_back(AlphaRep{detail::parse_rational_list(b)});
    for (const auto& r : js.at("reductions"))
      s.reductions.emplace(AlphaRep{detail::parse_rational_list(r.at(0))}, detail::parse_basis_vector(r.at(1)));
    q.slices.push_back(std::move(s));
  }
  for (const auto& e : detail::field(j, "structure_constants"))
    q.products.emplace(std::make_pair(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()),
                       detail::parse_basis_vector(e.at(2)));
  if (q.total_dim() != detail::field(j, "total_dim").get<std::size_t>())
    throw std::invalid_argument("total_dim does not match the slices");
  return q;
}

// ---- presentation ---------------------------------------------------------

inline std::string generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::unit: return "unit";
    case GeneratorKind::fractional: return "fractional";
    case GeneratorKind::t_line: return "t";
  }
  throw InternalError("bad generator kind");
}

inline GeneratorKind parse_generator_kind(const std::string& s) {
  if (s == "unit") return GeneratorKind::unit;
  if (s == "fractional") return GeneratorKind::fractional;
  if (s == "t") return GeneratorKind::t_line;
  throw std::invalid_argument("unknown generator kind '" + s + "'");
}

inline Json to_json(const AffinePresentation& pres) {
  Json j;
  j["kind"] = "presentation";
  j["p"] = pres.p.entries();
  j["w"] = pres.w ? Json(pres.w->entries()) : Json(nullptr);
  j["degree_bound"] = pres.degree_bound;
  j["ambient_dim"] = pres.ambient_dim;
  j["generators"] = Json::array();
  for (const auto& g : pres.generators)
    j["generators"].push_back({{"name", g.name},
                               {"kind", generator_kind_name(g.kind)},
                               {"t_exp", to_string(g.value.t_exp)},
                               {"z_exp", detail::rational_list(g.value.z_exp.entries)}});
  j["relations"] = Json::array();
  for (const auto& r : pres.relations)
    j["relations"].push_back(Json::array(
        {monomial_string(r.lhs, pres.generators), r.rhs ? monomial_string(*r.rhs, pres.generators) : "0"}));
  j["extra_relations"] = Json::array();
  for (const auto& lr : pres.extra_relations) {
    Json terms = Json::array();
    for (const auto& [c, m] : lr.terms) terms.push_back(Json::array({to_string(c), monomial_string(m, pres.generators)}));
    j["extra_relations"].push_back(std::move(terms));
  }
  return j;
}

inline AffinePresentation presentation_from_json(const Json& j) {
  detail::expect_kind(j, "presentation");
  AffinePresentation pres{WeightVector(detail::field(j, "p").get<IntVector>()), std::nullopt, {}, {}, {}, 0, 0};
  if (!detail::field(j, "w").is_null())
    pres.w = WeightVector(j.at("w").get<IntVector>(), WeightKind::multiplicities);
  pres.degree_bound = detail::field(j, "degree_bound").get<std::int64_t>();
  pres.ambient_dim = detail::field(j, "ambient_dim").get<std::size_t>();
  for (const auto& g : detail::field(j, "generators")) {
    const auto z = detail::parse_rational_list(g.at("z_exp"));
    pres.generators.push_back({g.at("name").get<std::string>(),
                               FiberedMonomial{parse_exponent(g.at("t_exp").get<std::string>()), make_alpha_rep(z, pres.p)},
                               parse_generator_kind(g.at("kind").get<std::string>())});
  }
  for (const auto& r : detail::field(j, "relations")) {
    Relation rel{parse_monomial(r.at(0).get<std::string>(), pres.generators), std::nullopt};
    const auto rhs = r.at(1).get<std::string>();
    if (rhs != "0") rel.rhs = parse_monomial(rhs, pres.generators);
    pres.relations.push_back(std::move(rel));
  }
  for (const auto& lr : detail::field(j, "extra_relations")) {
    LinearRelation out;
    for (const auto& t : lr)
      out.terms.emplace_back(parse_coeff(t.at(0).get<std::string>()),
                             parse_monomial(t.at(1).get<std::string>(), pres.generators));
    pres.extra_relations.push_back(std::move(out));
  }
  return pres;
}

// ---- fibred elements, semigroups, reports ---------------------------------

inline Json to_json(const FiberedElement& x) {
  Json j;
  j["kind"] = "fibered_element";
  j["p"] = x.p().entries();
  j["terms"] = Json::array();
  for (const auto& [m, c] : x.terms())
    j["terms"].push_back(
        {{"coeff", to_string(c)}, {"t_exp", to_string(m.t_exp)}, {"z_exp", detail::rational_list(m.z_exp.entries)}});
  return j;
}

inline FiberedElement fibered_from_json(const Json& j) {
  detail::expect_kind(j, "fibered_element");
  FiberedElement x{WeightVector(detail::field(j, "p").get<IntVector>())};
  for (const auto& t : detail::field(j, "terms"))
    x.add(normalize_monomial(parse_exponent(t.at("t_exp").get<std::string>()),
                             detail::parse_rational_list(t.at("z_exp")), x.p()),
          parse_coeff(t.at("coeff").get<std::string>()));
  return x;
}

inline Json semigroup_json(const WeightVector& p) {
  const auto s = s_generators(p);
  Json j;
  j["kind"] = "semigroup";
  j["p"] = p.entries();
  j["unit_vectors"] = Json::array();
  for (const auto& e : s.unit_vectors) j["unit_vectors"].push_back(detail::rational_list(e.entries));
  j["fractional"] = Json::array();
  for (const auto& list : s.fractional) {
    Json l = Json::array();
    for (const auto& g : list) l.push_back(detail::rational_list(g.entries));
    j["fractional"].push_back(std::move(l));
  }
  j["irreducible_fractional"] = Json::array();
  for (const auto& g : irreducible_fractional(s)) j["irreducible_fractional"].push_back(detail::rational_list(g.entries));
  if (p.dim() > 0) {
    const auto t = t_generators(p);
    j["t_generators"] = detail::rational_list(t.generators);
    j["t_generators_pruned"] = detail::rational_list(pruned_t_generators(t));
    j["ell"] = to_string(t.ell);
  }
  return j;
}

inline Json to_json(const SemigroupReport& r) {
  return Json{{"check", "semigroup generators"},
              {"p", r.p.entries()},
              {"box", r.box},
              {"pass", r.pass},
              {"representatives_checked", r.representatives_checked},
              {"sums_checked", r.sums_checked},
              {"counterexamples", r.counterexamples}};
}

inline Json to_json(const InvarianceReport& r) {
  return Json{{"p", r.p.entries()},
              {"w", r.w.entries()},
              {"a", r.a},
              {"degree_dims_left", detail::dims(r.degree_dims_left)},
              {"degree_dims_right", detail::dims(r.degree_dims_right)},
              {"pass", r.pass},
              {"witnesses", r.witnesses},
              {"failures", r.failures}};
}

// ---- computer algebra exports ---------------------------------------------

namespace detail {

/// Integer multiple of a linear relation with coprime integer coefficients.
inline std::vector<std::pair<mpz_class, FormalMonomial>> cleared(const LinearRelation& lr) {
  mpz_class den = 1, num = 0;
  for (const auto& [c, m] : lr.terms) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  if (num == 0) num = 1;
  std::vector<std::pair<mpz_class, FormalMonomial>> out;
  for (const auto& [c, m] : lr.terms) {
    mpq_class scaled = c * mpq_class(den) / mpq_class(num);
    scaled.canonicalize();
    out.emplace_back(scaled.get_num(), m);
  }
  return out;
}

inline std::string polynomial(const std::vector<std::pair<mpz_class, FormalMonomial>>& terms,
                              const std::vector<NamedGenerator>& gens) {
  std::string out;
  for (const auto& [c, m] : terms) {
    if (c == 0) continue;
    mpz_class a = abs(c);
    out += c < 0 ? "-" : (out.empty() ? "" : "+");
    const auto mono = monomial_string(m, gens);
    if (a != 1) out += a.get_str() + (mono == "1" ? "" : "*" + mono);
    else out += mono;
  }
  return out.empty() ? "0" : out;
}

inline std::vector<std::string> ideal_generators(const AffinePresentation& pres) {
  std::vector<std::string> out;
  for (const auto& r : pres.relations) {
    std::vector<std::pair<mpz_class, FormalMonomial>> terms{{1, r.lhs}};
    if (r.rhs) terms.emplace_back(-1, *r.rhs);
    out.push_back(polynomial(terms, pres.generators));
  }
  for (const auto& lr : pres.extra_relations) out.push_back(polynomial(cleared(lr), pres.generators));
  return out;
}

inline std::string variable_list(const AffinePresentation& pres) {
  std::string out;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) out += (g ? "," : "") + pres.generators[g].name;
  return out;
}

/// "w1" -> "w_{1}", "x10_2" -> "x_{10,2}".
inline std::string latex_name(const std::string& name) {
  const auto digit = name.find_first_of("0123456789");
  if (digit == std::string::npos) return name;
  std::string sub = name.substr(digit);
  for (auto& c : sub)
    if (c == '_') c = ',';
  return name.substr(0, digit) + "_{" + sub + "}";
}

inline std::string latex_monomial(const FormalMonomial& m, const std::vector<NamedGenerator>& gens) {
  std::string out;
  for (std::size_t g = 0; g < m.exps.size(); ++g) {
    if (m.exps[g] == 0) continue;
    if (!out.empty()) out += " ";
    out += latex_name(gens[g].name);
    if (m.exps[g] > 1) out += "^{" + std::to_string(m.exps[g]) + "}";
  }
  return out.empty() ? "1" : out;
}

inline std::string latex_rational(const Coeff& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

}  // namespace detail

inline std::string render_singular(const AffinePresentation& pres) {
  std::ostringstream out;
  out << "ring R = 0, (" << detail::variable_list(pres) << "), dp;\n";
  const auto gens = detail::ideal_generators(pres);
  if (gens.empty()) {
    out << "ideal I = 0;\n";
  } else {
    out << "ideal I =\n";
    for (std::size_t i = 0; i < gens.size(); ++i) out << "  " << gens[i] << (i + 1 < gens.size() ? ",\n" : ";\n");
  }
  out << "quit;\n";
  return out.str();
}

inline std::string render_macaulay2(const AffinePresentation& pres) {
  std::ostringstream out;
  out << "R = QQ[" << detail::variable_list(pres) << "];\n";
  const auto gens = detail::ideal_generators(pres);
  if (gens.empty()) {
    out << "I = ideal(0_R);\n";
  } else {
    out << "I = ideal(\n";
    for (std::size_t i = 0; i < gens.size(); ++i) out << "  " << gens[i] << (i + 1 < gens.size() ? ",\n" : "\n");
    out << ");\n";
  }
  return out.str();
}

inline std::string render_latex(const AffinePresentation& pres) {
  std::ostringstream out;
  out << "\\begin{align*}\n";
  std::vector<std::string> lines;
  for (const auto& r : pres.relations)
    lines.push_back(detail::latex_monomial(r.lhs, pres.generators) + " &= " +
                    (r.rhs ? detail::latex_monomial(*r.rhs, pres.generators) : std::string("0")));
  for (const auto& lr : pres.extra_relations) {
    std::string line;
    for (const auto& [c, m] : lr.terms) {
      const Coeff a = abs(c);
      line += c < 0 ? " - " : (line.empty() ? "" : " + ");
      line += (a == 1 ? std::string() : detail::latex_rational(a) + " ") + detail::latex_monomial(m, pres.generators);
    }
    lines.push_back(line + " &= 0");
  }
  if (lines.empty()) lines.push_back("0 &= 0");
  for (std::size_t i = 0; i < lines.size(); ++i) out << "  " << lines[i] << (i + 1 < lines.size() ? " \\\\\n" : "\n");
  out << "\\end{align*}\n";
  return out.str();
}

/// Graded dimensions and basis monomials as a LaTeX table.
inline std::string render_latex(const GradedQuotient& q) {
  std::ostringstream out;
  out << "\\begin{tabular}{ccl}\n  degree & dim & basis \\\\\n  \\hline\n";
  for (const auto& s : q.slices) {
    if (s.basis.empty()) continue;
    std::string basis;
    for (const auto& b : s.basis) {
      std::string mono;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        mono += (mono.empty() ? "" : " ") + std::string("y_{") + std::to_string(i) + "}";
        if (b[i] != 1) mono += "^{" + detail::latex_rational(to_coeff(b[i])) + "}";
      }
      basis += (basis.empty() ? "$" : ", $") + (mono.empty() ? std::string("1") : mono) + "$";
    }
    out << "  $" << detail::latex_rational(to_coeff(s.degree)) << "$ & " << s.basis.size() << " & " << basis
        << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

inline std::string render(const AffinePresentation& pres, Format f) {
  switch (f) {
    case Format::json: return to_json(pres).dump(2) + "\n";
    case Format::singular: return render_singular(pres);
    case Format::macaulay2: return render_macaulay2(pres);
    case Format::latex: return render_latex(pres);
  }
  throw std::invalid_argument("unsupported format");
}

}  // namespace orbichow

#endif  // ORBICHOW_SERIALIZE_HPP
