#pragma once

#include "siegel/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace siegel {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

// Exact value q * p^(-1/2) when the parity is odd, plain q when even.
// The ambient prime p is contextual: only multiplication and the float
// projection depend on it, and they take it as an argument. Zero compares
// equal regardless of parity.
struct GradedRational {
  Rational q;
  Parity parity = Parity::even;

  GradedRational() = default;
  GradedRational(Rational qq, Parity par) : q(std::move(qq)), parity(par) {}

  static GradedRational zero() { return {}; }
  static GradedRational one() { return {Rational(1), Parity::even}; }

  bool is_zero() const { return q == 0; }
  GradedRational operator-() const { return {-q, parity}; }

  double to_double(std::uint64_t p) const {
    double v = q.get_d();
    return parity == Parity::odd ? v / std::sqrt(static_cast<double>(p)) : v;
  }
};

inline bool operator==(const GradedRational& a, const GradedRational& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.parity == b.parity && a.q == b.q;
}
inline bool operator!=(const GradedRational& a, const GradedRational& b) { return !(a == b); }

// Sums leave the representable set unless the parities agree; zero is neutral.
inline GradedRational gadd(const GradedRational& a, const GradedRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.parity != b.parity) throw std::domain_error("graded addition across parities");
  return {a.q + b.q, a.parity};
}

inline GradedRational gsub(const GradedRational& a, const GradedRational& b) { return gadd(a, -b); }

// p^(-1/2) * p^(-1/2) = 1/p
inline GradedRational gmul(const GradedRational& a, const GradedRational& b, std::uint64_t p) {
  Rational q = a.q * b.q;
  if (a.parity == Parity::odd && b.parity == Parity::odd) {
    q /= static_cast<unsigned long>(p);
    return {std::move(q), Parity::even};
  }
  Parity par = (a.parity == b.parity) ? Parity::even : Parity::odd;
  return {std::move(q), par};
}

// odd-parity values carry the sign of q since p^(-1/2) > 0
inline int sign(const GradedRational& a) { return sgn(a.q); }

}  // namespace siegel
