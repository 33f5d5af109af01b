#pragma once

#include "siegel/graded.hpp"
#include "siegel/primes.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace siegel {

// Unit-circle parameter pair {e^{±iθ1}, e^{±iθ2}}, angles in [0, π].
// u = 2cosθ1 and v = 2cosθ2 are the real symmetric coordinates.
struct SatakePair {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double u() const { return two_cos(theta1); }
  double v() const { return two_cos(theta2); }

 private:
  static double two_cos(double theta);  // snaps a right angle to an exact 0
};

// The local seed (λ(p), λ(p²)) that determines every λ(p^n).
// λ(p²) always lives in the even-graded component; λ(p) may sit in either
// component (odd for eigenvalues normalized from raw integer data, even for
// plain-rational and Satake-derived seeds).
struct HeckeSeed {
  std::uint64_t p = 2;
  GradedRational lam_p;
  GradedRational lam_p2;
  std::optional<SatakePair> angles;  // present when the seed came from angles
};

HeckeSeed make_seed(std::uint64_t p, GradedRational lam_p, GradedRational lam_p2);
HeckeSeed make_seed(std::uint64_t p, const Rational& lam_p, const Rational& lam_p2);

// λ(p) = u + v, λ(p²) = (u+v)² − (2+uv) − 1/p, both exact in the rationals
// generated by the (dyadic) angle coordinates.
HeckeSeed satake_to_seed(const SatakePair& sp, std::uint64_t p);

// |λ(p)| ≤ 4 and λ(p)² − λ(p²) − 1/p ∈ [−2, 6], the unit-circle constraints.
bool satake_consistent(const HeckeSeed& seed, double tol = 1e-9);

// c = λ(p)² − λ(p²) − 1/p; even parity for every admissible seed
GradedRational recurrence_coefficient(const HeckeSeed& seed);

// Local spin denominator [1, −λ(p), c, −λ(p), 1], constant term first.
std::array<GradedRational, 5> spin_poly(const HeckeSeed& seed);
std::array<double, 5> spin_poly_real(const HeckeSeed& seed);

// λ(p^0..p^n) via the four-term recurrence
//   λ(p^n) = λ(p)λ(p^{n−1}) − c·λ(p^{n−2}) + λ(p)λ(p^{n−3}) − λ(p^{n−4}),
// out-of-range terms zero.
std::vector<GradedRational> lambda_powers(const HeckeSeed& seed, int n_max);
GradedRational lambda_prime_power(const HeckeSeed& seed, int n);

// float lane
struct RealSeed {
  double lam_p = 0.0;
  double lam_p2 = 0.0;
  double inv_p = 0.5;
};
RealSeed real_view(const HeckeSeed& seed);
std::vector<double> lambda_powers(const RealSeed& seed, int n_max);

// Raw integer eigenvalue μ(p^n) of a weight-k eigenform.
struct RawEigenRecord {
  std::uint64_t p = 2;
  int n = 1;
  Integer mu;
  int k = 4;
};

// λ(p^n) = μ(p^n) · p^{−n(2k−3)/2}; the half-integral exponent makes the
// parity of the result n mod 2.
GradedRational normalize(const RawEigenRecord& rec);

// Inverse of normalize; the result must come out integral.
Integer denormalize(const GradedRational& value, std::uint64_t p, int n, int k);

}  // namespace siegel
