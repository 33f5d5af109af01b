#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace siegel {

using Rational = mpq_class;
using Integer = mpz_class;

// base^exp as an exact integer
inline Integer int_pow(std::uint64_t base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

inline Rational ratio(long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  return Rational(x);
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "n" and "n/d" in base 10.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace siegel
