#include "siegel/hecke.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace siegel {

double SatakePair::two_cos(double theta) {
  double c = 2.0 * std::cos(theta);
  // cos(pi/2) evaluates to ~6e-17 in binary64; a seed meant to vanish there
  // must vanish exactly or the whole exact lane drags the dust along.
  if (std::fabs(c) < 1e-14) c = 0.0;
  return c;
}

HeckeSeed make_seed(std::uint64_t p, GradedRational lam_p, GradedRational lam_p2) {
  if (!is_prime(p)) throw std::invalid_argument("make_seed: p = " + std::to_string(p) + " is not prime");
  if (!lam_p2.is_zero() && lam_p2.parity != Parity::even)
    throw std::invalid_argument("make_seed: lambda(p^2) must have even parity");
  return HeckeSeed{p, std::move(lam_p), std::move(lam_p2), std::nullopt};
}

HeckeSeed make_seed(std::uint64_t p, const Rational& lam_p, const Rational& lam_p2) {
  return make_seed(p, GradedRational{lam_p, Parity::even}, GradedRational{lam_p2, Parity::even});
}

HeckeSeed satake_to_seed(const SatakePair& sp, std::uint64_t p) {
  if (!(sp.theta1 >= 0.0 && sp.theta1 <= M_PI && sp.theta2 >= 0.0 && sp.theta2 <= M_PI))
    throw std::invalid_argument("satake_to_seed: angles must lie in [0, pi]");
  if (!is_prime(p)) throw std::invalid_argument("satake_to_seed: p is not prime");
  Rational u = rational_from_double(sp.u());
  Rational v = rational_from_double(sp.v());
  Rational lam1 = u + v;
  Rational lam2 = lam1 * lam1 - (2 + u * v) - ratio(1, static_cast<unsigned long>(p));
  HeckeSeed seed{p, {lam1, Parity::even}, {lam2, Parity::even}, sp};
  return seed;
}

bool satake_consistent(const HeckeSeed& seed, double tol) {
  double a = seed.lam_p.to_double(seed.p);
  double b = seed.lam_p2.to_double(seed.p);
  double c = a * a - b - 1.0 / static_cast<double>(seed.p);
  return std::fabs(a) <= 4.0 + tol && c >= -2.0 - tol && c <= 6.0 + tol;
}

GradedRational recurrence_coefficient(const HeckeSeed& seed) {
  GradedRational a2 = gmul(seed.lam_p, seed.lam_p, seed.p);
  GradedRational inv_p{ratio(1, static_cast<unsigned long>(seed.p)), Parity::even};
  return gsub(gsub(a2, seed.lam_p2), inv_p);
}

std::array<GradedRational, 5> spin_poly(const HeckeSeed& seed) {
  GradedRational c = recurrence_coefficient(seed);
  return {GradedRational::one(), -seed.lam_p, c, -seed.lam_p, GradedRational::one()};
}

std::array<double, 5> spin_poly_real(const HeckeSeed& seed) {
  RealSeed s = real_view(seed);
  double c = s.lam_p * s.lam_p - s.lam_p2 - s.inv_p;
  return {1.0, -s.lam_p, c, -s.lam_p, 1.0};
}

std::vector<GradedRational> lambda_powers(const HeckeSeed& seed, int n_max) {
  if (n_max < 0) throw std::invalid_argument("lambda_powers: negative exponent");
  std::vector<GradedRational> lam(static_cast<std::size_t>(n_max) + 1);
  lam[0] = GradedRational::one();
  if (n_max >= 1) lam[1] = seed.lam_p;
  if (n_max >= 2) lam[2] = seed.lam_p2;
  if (n_max < 3) return lam;
  GradedRational c = recurrence_coefficient(seed);
  for (int n = 3; n <= n_max; ++n) {
    GradedRational t = gmul(seed.lam_p, lam[n - 1], seed.p);
    t = gsub(t, gmul(c, lam[n - 2], seed.p));
    t = gadd(t, gmul(seed.lam_p, lam[n - 3], seed.p));
    if (n >= 4) t = gsub(t, lam[n - 4]);
    lam[n] = std::move(t);
  }
  return lam;
}

GradedRational lambda_prime_power(const HeckeSeed& seed, int n) {
  return lambda_powers(seed, n).back();
}

RealSeed real_view(const HeckeSeed& seed) {
  return RealSeed{seed.lam_p.to_double(seed.p), seed.lam_p2.to_double(seed.p),
                  1.0 / static_cast<double>(seed.p)};
}

std::vector<double> lambda_powers(const RealSeed& seed, int n_max) {
  if (n_max < 0) throw std::invalid_argument("lambda_powers: negative exponent");
  std::vector<double> lam(static_cast<std::size_t>(n_max) + 1, 0.0);
  lam[0] = 1.0;
  if (n_max >= 1) lam[1] = seed.lam_p;
  if (n_max >= 2) lam[2] = seed.lam_p2;
  double c = seed.lam_p * seed.lam_p - seed.lam_p2 - seed.inv_p;
  for (int n = 3; n <= n_max; ++n) {
    double t = seed.lam_p * lam[n - 1] - c * lam[n - 2] + seed.lam_p * lam[n - 3];
    if (n >= 4) t -= lam[n - 4];
    lam[n] = t;
  }
  return lam;
}

GradedRational normalize(const RawEigenRecord& rec) {
  if (rec.k < 4) throw std::invalid_argument("normalize: weight k < 4");
  if (rec.n < 1) throw std::invalid_argument("normalize: exponent n < 1");
  if (!is_prime(rec.p)) throw std::invalid_argument("normalize: p is not prime");
  // μ · p^{−e/2} with e = n(2k−3); split e = 2⌊e/2⌋ + (n mod 2)
  unsigned long e = static_cast<unsigned long>(rec.n) * (2ul * rec.k - 3ul);
  Rational q = ratio(rec.mu, int_pow(rec.p, e / 2));
  return GradedRational{q, e % 2 == 0 ? Parity::even : Parity::odd};
}

Integer denormalize(const GradedRational& value, std::uint64_t p, int n, int k) {
  if (k < 4 || n < 1) throw std::invalid_argument("denormalize: malformed record shape");
  unsigned long e = static_cast<unsigned long>(n) * (2ul * k - 3ul);
  Parity expected = e % 2 == 0 ? Parity::even : Parity::odd;
  if (!value.is_zero() && value.parity != expected)
    throw std::invalid_argument("denormalize: parity inconsistent with n");
  Rational mu = value.q * Rational(int_pow(p, e / 2));
  if (!is_integral(mu)) throw std::invalid_argument("denormalize: value is not a raw eigenvalue");
  return mu.get_num();
}

}  // namespace siegel
