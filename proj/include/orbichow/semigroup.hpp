#ifndef ORBICHOW_SEMIGROUP_HPP
#define ORBICHOW_SEMIGROUP_HPP

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbichow/lattice.hpp"

namespace orbichow {

/// Generators of the semigroup S spanned by the canonical representatives:
/// the unit vectors e_i together with, for each i, the vectors
/// (1/p_i)(kp_0 mod p_i, ..., kp_n mod p_i) for k = 1..p_i-1.
struct SGeneratorSet {
  std::vector<AlphaRep> unit_vectors;
  /// fractional[i][k-1] is the generator for residue k.
  std::vector<std::vector<AlphaRep>> fractional;

  /// Units first, then fractional generators in (i, k) order, without repeats.
  std::vector<AlphaRep> distinct() const {
    std::vector<AlphaRep> out;
    std::set<AlphaRep> seen;
    auto push = [&](const AlphaRep& g) {
      if (seen.insert(g).second) out.push_back(g);
    };
    for (const auto& e : unit_vectors) push(e);
    for (const auto& list : fractional)
      for (const auto& g : list) push(g);
    return out;
  }
};

/// Generators 1/lcm(p_i, p_j) of the semigroup T of gamma-values, sorted by
/// increasing denominator, plus the finest step ell = 1/lcm(p).
struct TGeneratorSet {
  std::vector<Exponent> generators;
  Exponent ell;
};

inline AlphaRep fractional_generator(const WeightVector& p, std::size_t i, std::int64_t k) {
  RationalVector v(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) v[j] = Exponent(mod_floor(k * p[j], p[i]), p[i]);
  return AlphaRep{std::move(v)};
}

inline SGeneratorSet s_generators(const WeightVector& p) {
  SGeneratorSet s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    RationalVector e(p.size(), Exponent(0));
    e[i] = 1;
    s.unit_vectors.push_back(AlphaRep{std::move(e)});
  }
  s.fractional.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::int64_t k = 1; k < p[i]; ++k) s.fractional[i].push_back(fractional_generator(p, i, k));
  return s;
}

inline TGeneratorSet t_generators(const WeightVector& p) {
  if (p.dim() == 0) throw std::invalid_argument("the gamma semigroup needs at least two weights");
  std::set<std::int64_t> lcms;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) lcms.insert(std::lcm(p[i], p[j]));
  TGeneratorSet t;
  for (auto l : lcms) t.generators.emplace_back(1, l);
  t.ell = Exponent(1, p.lcm());
  return t;
}

/// Smallest number of T-generators summing to q, if q lies in T at all.
inline std::optional<std::int64_t> t_min_count(const Exponent& q, const TGeneratorSet& t) {
  if (q < 0) return std::nullopt;
  if (q == 0) return 0;
  const Exponent units = q / t.ell;
  if (!is_integer(units)) return std::nullopt;
  const auto target = units.numerator();
  std::vector<std::int64_t> steps;
  for (const auto& g : t.generators) steps.push_back((g / t.ell).numerator());
  constexpr std::int64_t unreachable = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(static_cast<std::size_t>(target) + 1, unreachable);
  best[0] = 0;
  for (std::int64_t v = 1; v <= target; ++v)
    for (auto s : steps)
      if (s <= v && best[v - s] != unreachable) best[v] = std::min(best[v], best[v - s] + 1);
  if (best[target] == unreachable) return std::nullopt;
  return best[target];
}

/// q is a sum of at most `bound` generators of T.
inline bool t_membership(const Exponent& q, const WeightVector& p, std::int64_t bound) {
  if (q == 0) return true;
  auto c = t_min_count(q, t_generators(p));
  return c && *c <= bound;
}

/// Exact membership in T (the bound is implied by q / smallest generator).
inline bool in_t(const Exponent& q, const TGeneratorSet& t) { return t_min_count(q, t).has_value(); }

/// Nonnegative integer multiplicities c with sum_g c_g * g == target, if any.
/// Every generator is nonzero and nonnegative, so the search is finite. Later
/// generators are tried first: callers list units first, and units can absorb
/// any integral remainder.
inline std::optional<std::vector<std::int64_t>> s_decompose(const RationalVector& target,
                                                            const std::vector<AlphaRep>& gens,
                                                            std::optional<std::size_t> exclude = std::nullopt) {
  for (const auto& x : target)
    if (x < 0) return std::nullopt;
  if (gens.empty()) {
    if (std::all_of(target.begin(), target.end(), [](const Exponent& x) { return x == 0; }))
      return std::vector<std::int64_t>{};
    return std::nullopt;
  }
  std::vector<std::int64_t> counts(gens.size(), 0);
  std::set<std::pair<RationalVector, std::size_t>> dead;
  std::function<bool(RationalVector&, std::size_t)> search = [&](RationalVector& rest, std::size_t upto) -> bool {
    if (std::all_of(rest.begin(), rest.end(), [](const Exponent& x) { return x == 0; })) return true;
    if (dead.count({rest, upto})) return false;
    for (std::size_t g = upto + 1; g-- > 0;) {
      if (exclude && *exclude == g) continue;
      bool fits = true;
      for (std::size_t i = 0; i < rest.size() && fits; ++i) fits = gens[g][i] <= rest[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= gens[g][i];
      ++counts[g];
      if (search(rest, g)) return true;
      --counts[g];
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += gens[g][i];
    }
    dead.insert({rest, upto});
    return false;
  };
  RationalVector rest = target;
  if (search(rest, gens.size() - 1)) return counts;
  return std::nullopt;
}

inline bool in_s(const RationalVector& b, const WeightVector& p) {
  return s_decompose(b, s_generators(p).distinct()).has_value();
}

/// Fractional generators that are not sums of other generators, in (i, k)
/// order. Units are always kept by callers, so they are not returned here.
inline std::vector<AlphaRep> irreducible_fractional(const SGeneratorSet& s) {
  const auto all = s.distinct();
  std::vector<AlphaRep> out;
  for (std::size_t g = s.unit_vectors.size(); g < all.size(); ++g)
    if (!s_decompose(all[g].entries, all, g)) out.push_back(all[g]);
  return out;
}

/// Drops t-generators that are integer multiples of a finer generator.
inline std::vector<Exponent> pruned_t_generators(const TGeneratorSet& t) {
  std::vector<Exponent> out;
  for (const auto& g : t.generators) {
    bool multiple = false;
    for (const auto& h : t.generators)
      if (h < g && is_integer(g / h)) multiple = true;
    if (!multiple) out.push_back(g);
  }
  return out;
}

struct SemigroupReport {
  WeightVector p;
  std::int64_t box;
  bool pass = true;
  std::vector<std::string> counterexamples;
  std::int64_t representatives_checked = 0;
  std::int64_t sums_checked = 0;

  void fail(std::string what) {
    pass = false;
    if (counterexamples.size() < 50) counterexamples.push_back(std::move(what));
  }
};

/// Exhaustive check, inside a box, of the generator descriptions of S and T:
///  - every alpha(a), |a_i| <= box, decomposes as a fractional generator plus
///    units, following the Euclidean-division witness;
///  - every fractional generator is itself alpha of an explicit integer vector;
///  - gamma of every sum of at most `box` generators lies in T;
///  - every 1/lcm(p_i, p_j) is gamma of an explicitly constructed element.
inline SemigroupReport verify_semigroup_generators(const WeightVector& p, std::int64_t box) {
  if (box < 1) throw std::invalid_argument("box must be at least 1");
  SemigroupReport report{p, box, true, {}, 0, 0};
  const auto s = s_generators(p);
  const auto t = t_generators(p);
  const std::size_t m = p.size();

  IntVector a(m, -box);
  for (;;) {
    const AlphaRep rep = alpha(a, p);
    std::size_t j = 0;
    while (j < m && rep[j] != 0) ++j;
    if (j == m) {
      report.fail("alpha" + str(to_rational(a)) + " has no zero coordinate");
    } else {
      const std::int64_t k = mod_floor(-a[j], p[j]);
      RationalVector units = rep.entries;
      if (k != 0)
        for (std::size_t i = 0; i < m; ++i) units[i] -= s.fractional[j][k - 1][i];
      const bool ok = std::all_of(units.begin(), units.end(), [](const Exponent& x) { return x >= 0 && is_integer(x); });
      if (!ok) report.fail("no generator witness for alpha" + str(to_rational(a)) + " = " + str(rep.entries));
    }
    ++report.representatives_checked;
    std::size_t pos = 0;
    while (pos < m && a[pos] == box) a[pos++] = -box;
    if (pos == m) break;
    ++a[pos];
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::int64_t k = 1; k < p[i]; ++k) {
      IntVector pre(m);
      for (std::size_t r = 0; r < m; ++r) pre[r] = -((k * p[r]) / p[i]);
      if (alpha(pre, p) != s.fractional[i][k - 1])
        report.fail("fractional generator " + str(s.fractional[i][k - 1].entries) + " is not alpha" +
                    str(to_rational(pre)));
    }

  const auto gens = s.distinct();
  RationalVector sum(m, Exponent(0));
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t from, std::int64_t left) {
    if (!in_t(gamma(sum, p), t)) report.fail("gamma" + str(sum) + " = " + to_string(gamma(sum, p)) + " not in T");
    ++report.sums_checked;
    if (left == 0) return;
    for (std::size_t g = from; g < gens.size(); ++g) {
      for (std::size_t i = 0; i < m; ++i) sum[i] += gens[g][i];
      walk(g, left - 1);
      for (std::size_t i = 0; i < m; ++i) sum[i] -= gens[g][i];
    }
  };
  walk(0, box);

  // 1/lcm(p_i, p_j) = gamma(b) with b = (fractional generator for a residue k
  // with k p_j = gcd(p_i, p_j) mod p_i) + large units away from coordinate j.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::int64_t g = std::gcd(p[i], p[j]);
      std::int64_t k = 1;
      while (mod_floor(k * p[j], p[i]) != g % p[i]) ++k;
      RationalVector b(m, Exponent(0));
      if (k % p[i] != 0) b = fractional_generator(p, i, k).entries;
      if (g % p[i] == 0) b[j] += 1;
      std::int64_t big = 1;
      for (auto x : p.entries()) big = std::max(big, x);
      for (std::size_t r = 0; r < m; ++r)
        if (r != j) b[r] += big;
      const Exponent target(1, std::lcm(p[i], p[j]));
      if (gamma(b, p) != target || !in_s(b, p))
        report.fail("construction for 1/lcm(p_" + std::to_string(i) + ",p_" + std::to_string(j) + ") gave " +
                    to_string(gamma(b, p)));
    }
  return report;
}

}  // namespace orbichow

#endif  // ORBICHOW_SEMIGROUP_HPP
