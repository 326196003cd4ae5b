#ifndef ORBICHOW_LATTICE_HPP
#define ORBICHOW_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbichow/rational.hpp"

namespace orbichow {

enum class WeightKind { weights, multiplicities };

/// Positive integer weights p of the weighted projective space, or the root
/// multiplicities w of its toric divisors.
class WeightVector {
 public:
  explicit WeightVector(IntVector entries, WeightKind kind = WeightKind::weights)
      : entries_(std::move(entries)), kind_(kind) {
    if (entries_.empty()) throw std::invalid_argument("weight vector must be nonempty");
    for (auto e : entries_)
      if (e < 1) throw std::invalid_argument("weights must be positive integers");
    if (kind_ == WeightKind::weights && gcd_of(entries_) != 1)
      throw std::invalid_argument("weights must have gcd 1");
    well_formed_ = compute_well_formed();
  }

  static WeightVector ones(std::size_t length, WeightKind kind = WeightKind::multiplicities) {
    return WeightVector(IntVector(length, 1), kind);
  }

  const IntVector& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Complex dimension n of the stack (length minus one).
  std::size_t dim() const { return entries_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  WeightKind kind() const { return kind_; }
  bool well_formed() const { return well_formed_; }
  std::int64_t lcm() const { return lcm_of(entries_); }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.kind_ == b.kind_ && a.entries_ == b.entries_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
    return s + ")";
  }

 private:
  bool compute_well_formed() const {
    if (entries_.size() == 1) return entries_[0] == 1;
    for (std::size_t skip = 0; skip < entries_.size(); ++skip) {
      std::int64_t g = 0;
      for (std::size_t i = 0; i < entries_.size(); ++i)
        if (i != skip) g = std::gcd(g, entries_[i]);
      if (g != 1) return false;
    }
    return true;
  }

  IntVector entries_;
  WeightKind kind_;
  bool well_formed_ = false;
};

/// Canonical representative of a class of N = Z^{n+1}/<p>: the unique point of
/// the line a + Qp lying on the boundary of the nonnegative orthant.
struct AlphaRep {
  RationalVector entries;

  std::size_t size() const { return entries.size(); }
  const Exponent& operator[](std::size_t i) const { return entries[i]; }
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Exponent& e) { return e == 0; });
  }

  friend bool operator==(const AlphaRep& a, const AlphaRep& b) { return a.entries == b.entries; }
  friend bool operator!=(const AlphaRep& a, const AlphaRep& b) { return !(a == b); }
  friend bool operator<(const AlphaRep& a, const AlphaRep& b) {
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end());
  }
};

inline AlphaRep zero_rep(std::size_t length) { return AlphaRep{RationalVector(length, Exponent(0))}; }

inline RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(x);
  return r;
}

inline RationalVector add(std::span<const Exponent> a, std::span<const Exponent> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  RationalVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline std::string str(std::span<const Exponent> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

/// Lift of an element of N^vee to Z^{n+1}; annihilates p.
struct DualFunctional {
  IntVector entries;

  Exponent operator()(std::span<const Exponent> v) const {
    if (v.size() != entries.size()) throw std::invalid_argument("functional length mismatch");
    Exponent s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * entries[i];
    return s;
  }
  std::int64_t pairing(const WeightVector& p) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) s += entries[i] * p[i];
    return s;
  }
  friend bool operator==(const DualFunctional&, const DualFunctional&) = default;
};

inline void require_length(std::size_t got, const WeightVector& p) {
  if (got != p.size())
    throw std::invalid_argument("expected a vector of length " + std::to_string(p.size()) + ", got " +
                                std::to_string(got));
}

/// min_i a_i / p_i.
inline Exponent gamma(std::span<const Exponent> a, const WeightVector& p) {
  require_length(a.size(), p);
  Exponent best = a[0] / p[0];
  for (std::size_t i = 1; i < a.size(); ++i) best = std::min(best, a[i] / p[i]);
  return best;
}

inline Exponent gamma(const AlphaRep& a, const WeightVector& p) { return gamma(std::span(a.entries), p); }

inline AlphaRep alpha(std::span<const Exponent> a, const WeightVector& p) {
  const Exponent g = gamma(a, p);
  AlphaRep r{RationalVector(a.begin(), a.end())};
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= g * p[i];
  return r;
}

inline AlphaRep alpha(const IntVector& a, const WeightVector& p) { return alpha(to_rational(a), p); }

/// Two classes lie in a common cone of the fan exactly when their canonical
/// representatives share a zero coordinate.
inline bool same_cone(const AlphaRep& b1, const AlphaRep& b2) {
  if (b1.size() != b2.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < b1.size(); ++i)
    if (b1[i] == 0 && b2[i] == 0) return true;
  return false;
}

/// A rational shift lambda with b + lambda*p integral, if one exists.
/// Any solution is congruent mod 1 to k/p_j for a coordinate j and 0 <= k < p_j.
inline std::optional<Exponent> lift_parameter(std::span<const Exponent> b, const WeightVector& p) {
  require_length(b.size(), p);
  // b_j + lambda p_j in Z pins lambda to (Z - b_j)/p_j; use the coordinate with the smallest p_j.
  std::size_t j = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] < p[j]) j = i;
  const Exponent base = -b[j] / p[j];
  for (std::int64_t k = 0; k < p[j]; ++k) {
    const Exponent lambda = base + Exponent(k, p[j]);
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i) ok = is_integer(b[i] + lambda * p[i]);
    if (ok) return lambda;
  }
  return std::nullopt;
}

inline bool in_alpha_image(std::span<const Exponent> b, const WeightVector& p) {
  require_length(b.size(), p);
  for (const auto& x : b)
    if (x < 0) return false;
  if (gamma(b, p) != 0) return false;
  return lift_parameter(b, p).has_value();
}

inline bool in_alpha_image(const AlphaRep& b, const WeightVector& p) { return in_alpha_image(std::span(b.entries), p); }

/// Validated construction; throws std::invalid_argument when b is not the
/// canonical representative of a class of N.
inline AlphaRep make_alpha_rep(RationalVector b, const WeightVector& p) {
  if (!in_alpha_image(b, p)) throw std::invalid_argument("not a canonical class representative: " + str(b));
  const auto l = p.lcm();
  for (const auto& x : b)
    if (l % x.denominator() != 0) throw InternalError("representative denominator exceeds lcm(p)");
  return AlphaRep{std::move(b)};
}

/// Basis of the integer kernel {theta : theta . p = 0}, computed by integer
/// column operations that reduce the row p to a single +-1 entry.
inline std::vector<DualFunctional> dual_kernel_basis(const WeightVector& p) {
  const std::size_t m = p.size();
  IntVector row = p.entries();
  std::vector<IntVector> cols(m, IntVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) cols[i][i] = 1;

  auto nonzero_count = [&] {
    return std::count_if(row.begin(), row.end(), [](std::int64_t x) { return x != 0; });
  };
  while (nonzero_count() > 1) {
    std::size_t piv = m;
    for (std::size_t i = 0; i < m; ++i)
      if (row[i] != 0 && (piv == m || std::abs(row[i]) < std::abs(row[piv]))) piv = i;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == piv || row[j] == 0) continue;
      const std::int64_t q = row[j] / row[piv];
      row[j] -= q * row[piv];
      for (std::size_t r = 0; r < m; ++r) cols[j][r] -= q * cols[piv][r];
    }
  }
  std::vector<DualFunctional> basis;
  for (std::size_t j = 0; j < m; ++j) {
    if (row[j] != 0) continue;
    IntVector v = cols[j];
    auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (first != v.end() && *first < 0)
      for (auto& x : v) x = -x;
    basis.push_back(DualFunctional{std::move(v)});
  }
  if (basis.size() != p.dim()) throw InternalError("kernel basis has wrong rank");
  return basis;
}

namespace detail {

inline mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

/// True when the given functionals annihilate p and form a Z-basis of the full
/// kernel lattice: n vectors whose maximal minors are coprime (all invariant
/// factors equal to 1).
inline bool is_kernel_lattice_basis(const std::vector<DualFunctional>& basis, const WeightVector& p) {
  if (basis.size() != p.dim()) return false;
  for (const auto& t : basis) {
    if (t.entries.size() != p.size() || t.pairing(p) != 0) return false;
  }
  if (basis.empty()) return true;
  mpz_class g = 0;
  for (std::size_t drop = 0; drop < p.size(); ++drop) {
    std::vector<std::vector<mpz_class>> minor;
    for (const auto& t : basis) {
      std::vector<mpz_class> r;
      for (std::size_t c = 0; c < p.size(); ++c)
        if (c != drop) r.emplace_back(static_cast<long>(t.entries[c]));
      minor.push_back(std::move(r));
    }
    mpz_class d = detail::bareiss_determinant(std::move(minor));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g == 1;
}

}  // namespace orbichow

#endif  // ORBICHOW_LATTICE_HPP
