#include "siegel/gf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace siegel {

namespace {

// rational factorization of the spin denominator is available exactly when
// both angles sit at 0 or pi (roots ±1); everything else goes through the
// power-sum route
template <class T>
std::optional<std::vector<std::pair<T, int>>> angle_factorization(const HeckeSeed& seed) {
  if (!seed.angles) return std::nullopt;
  std::vector<T> roots;  // each angle at 0 or pi contributes a double root
  for (double u : {seed.angles->u(), seed.angles->v()}) {
    if (u == 2.0)
      roots.push_back(T(1));
    else if (u == -2.0)
      roots.push_back(T(-1));
    else
      return std::nullopt;
  }
  std::vector<std::pair<T, int>> merged;
  for (const T& r : roots) {
    bool found = false;
    for (auto& [mr, mm] : merged)
      if (mr == r) {
        mm += 2;
        found = true;
      }
    if (!found) merged.emplace_back(r, 2);
  }
  return merged;
}

std::vector<std::complex<double>> satake_roots(const SatakePair& sp) {
  return {std::polar(1.0, sp.theta1), std::polar(1.0, -sp.theta1), std::polar(1.0, sp.theta2),
          std::polar(1.0, -sp.theta2)};
}

std::optional<std::vector<std::pair<std::complex<double>, int>>> product_roots(
    const HeckeSeed& f, const HeckeSeed& g) {
  if (!f.angles || !g.angles) return std::nullopt;
  std::vector<std::pair<std::complex<double>, int>> merged;
  for (const auto& a : satake_roots(*f.angles))
    for (const auto& b : satake_roots(*g.angles)) {
      std::complex<double> ab = a * b;
      bool found = false;
      for (auto& [r, m] : merged)
        if (std::abs(r - ab) <= 1e-9) {
          ++m;
          found = true;
          break;
        }
      if (!found) merged.emplace_back(ab, 1);
    }
  return merged;
}

}  // namespace

RationalGF<Rational> local_spin_gf(const HeckeSeed& seed) {
  if (!seed.lam_p.is_zero() && seed.lam_p.parity != Parity::even)
    throw std::domain_error("local_spin_gf: odd-parity seed has no exact rational spin factor");
  Rational a = seed.lam_p.q;
  Rational c = recurrence_coefficient(seed).q;
  RationalGF<Rational> gf;
  gf.num = {Rational(1), Rational(0), -ratio(1, static_cast<unsigned long>(seed.p))};
  gf.den = {Rational(1), -a, c, -a, Rational(1)};
  gf.factored_den = angle_factorization<Rational>(seed);
  return gf;
}

RationalGF<double> local_spin_gf_real(const HeckeSeed& seed) {
  auto den = spin_poly_real(seed);
  RationalGF<double> gf;
  gf.num = {1.0, 0.0, -1.0 / static_cast<double>(seed.p)};
  gf.den.assign(den.begin(), den.end());
  gf.factored_den = angle_factorization<double>(seed);
  return gf;
}

namespace {

template <class T, class GfFn>
LocalRankinFactor<T> rankin_factor_impl(const HeckeSeed& f, const HeckeSeed& g, GfFn&& spin) {
  if (f.p != g.p) throw std::invalid_argument("local_rankin_factor: seeds at different primes");
  RationalGF<T> h = hadamard(spin(f), spin(g));
  LocalRankinFactor<T> out;
  out.gp = std::move(h.num);
  out.den = std::move(h.den);
  out.den_roots = product_roots(f, g);
  return out;
}

}  // namespace

LocalRankinFactor<Rational> local_rankin_factor(const HeckeSeed& f, const HeckeSeed& g) {
  return rankin_factor_impl<Rational>(f, g, [](const HeckeSeed& s) { return local_spin_gf(s); });
}

LocalRankinFactor<double> local_rankin_factor_real(const HeckeSeed& f, const HeckeSeed& g) {
  return rankin_factor_impl<double>(f, g, [](const HeckeSeed& s) { return local_spin_gf_real(s); });
}

Rational identity_residual(const HeckeSeed& f, const HeckeSeed& g, int depth) {
  LocalRankinFactor<Rational> fac = local_rankin_factor(f, g);
  std::vector<GradedRational> lf = lambda_powers(f, depth);
  std::vector<GradedRational> lg = lambda_powers(g, depth);
  Rational worst(0);
  for (int n = 0; n <= depth; ++n) {
    Rational acc(0);
    for (int j = 0; j < static_cast<int>(fac.den.size()) && j <= n; ++j)
      acc += gmul(lf[n - j], lg[n - j], f.p).q * fac.den[j];
    if (n < static_cast<int>(fac.gp.size())) acc -= fac.gp[n];
    if (abs(acc) > worst) worst = abs(acc);
  }
  return worst;
}

double identity_residual_real(const HeckeSeed& f, const HeckeSeed& g, int depth) {
  LocalRankinFactor<double> fac = local_rankin_factor_real(f, g);
  std::vector<double> lf = lambda_powers(real_view(f), depth);
  std::vector<double> lg = lambda_powers(real_view(g), depth);
  double worst = 0.0;
  double scale = 1.0;
  for (int n = 0; n <= depth; ++n) {
    double acc = 0.0;
    for (int j = 0; j < static_cast<int>(fac.den.size()) && j <= n; ++j) {
      double term = lf[n - j] * lg[n - j] * fac.den[j];
      scale = std::max(scale, std::fabs(term));
      acc += term;
    }
    if (n < static_cast<int>(fac.gp.size())) acc -= fac.gp[n];
    worst = std::max(worst, std::fabs(acc));
  }
  return worst / scale;
}

}  // namespace siegel
