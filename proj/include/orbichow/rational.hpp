#ifndef ORBICHOW_RATIONAL_HPP
#define ORBICHOW_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

// Boost 1.74 defines rational == integer as a template that C++20 rewrites
// back into itself, recursing forever. Exact non-template overloads win.
namespace boost {
#define ORBICHOW_RATIONAL_EQ(T)                                                                            \
  inline bool operator==(const rational<std::int64_t>& a, T b) { return a == rational<std::int64_t>(b); } \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
ORBICHOW_RATIONAL_EQ(int)
ORBICHOW_RATIONAL_EQ(long)
ORBICHOW_RATIONAL_EQ(long long)
#undef ORBICHOW_RATIONAL_EQ
}  // namespace boost

namespace orbichow {

/// Exact rational used for exponents and degrees. Denominators stay bounded by
/// lcm(p) * lcm(w), so 64-bit components are plenty.
using Exponent = boost::rational<std::int64_t>;

/// Arbitrary precision rational used for ring coefficients.
using Coeff = mpq_class;

using RationalVector = std::vector<Exponent>;
using IntVector = std::vector<std::int64_t>;

/// Thrown when an internal consistency check fails (two code paths disagree,
/// a computed invariant is violated). Distinct from bad user input, which is
/// reported with std::invalid_argument.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Exponent& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::string to_string(const Coeff& q) {
  Coeff c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Exponent parse_exponent(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("empty rational component in '" + std::string(text) + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(s), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (used != s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Exponent(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Exponent(parse_int(text.substr(0, slash)), den);
}

inline Coeff parse_coeff(std::string_view text) {
  Coeff c;
  if (c.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (c.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  c.canonicalize();
  return c;
}

inline Coeff to_coeff(const Exponent& q) {
  Coeff c(mpz_class(static_cast<long>(q.numerator())), mpz_class(static_cast<long>(q.denominator())));
  c.canonicalize();
  return c;
}

/// Nonnegative remainder of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_integer(const Exponent& q) { return q.denominator() == 1; }

inline std::int64_t lcm_of(const IntVector& v) {
  std::int64_t l = 1;
  for (auto x : v) l = std::lcm(l, x);
  return l;
}

inline std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace orbichow

#endif  // ORBICHOW_RATIONAL_HPP
