#include "siegel/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

namespace siegel {

RankinFactors<Rational> rankin_factors(const EigenSystem& f, const EigenSystem& g,
                                       std::uint64_t n_max) {
  RankinFactors<Rational> out;
  for (std::uint64_t p : primes_up_to(n_max))
    out.emplace(p, local_rankin_factor(f.seed_at(p), g.seed_at(p)));
  return out;
}

RankinFactors<double> rankin_factors_real(const EigenSystem& f, const EigenSystem& g,
                                          std::uint64_t n_max) {
  RankinFactors<double> out;
  for (std::uint64_t p : primes_up_to(n_max))
    out.emplace(p, local_rankin_factor_real(f.seed_at(p), g.seed_at(p)));
  return out;
}

Rational max_abs_difference(const DirichletSeries<Rational>& a, const DirichletSeries<Rational>& b) {
  if (a.cutoff != b.cutoff) throw std::invalid_argument("max_abs_difference: cutoff mismatch");
  Rational worst(0);
  for (std::uint64_t n = 1; n <= a.cutoff; ++n) {
    Rational d = abs(a.coeff[n] - b.coeff[n]);
    if (d > worst) worst = d;
  }
  return worst;
}

double max_scaled_difference(const DirichletSeries<double>& a, const DirichletSeries<double>& b) {
  if (a.cutoff != b.cutoff) throw std::invalid_argument("max_scaled_difference: cutoff mismatch");
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= a.cutoff; ++n) {
    double scale = std::max({1.0, std::fabs(a.coeff[n]), std::fabs(b.coeff[n])});
    worst = std::max(worst, std::fabs(a.coeff[n] - b.coeff[n]) / scale);
  }
  return worst;
}

GBoundCheck g_bound_check(const RankinFactors<double>& factors, double sigma, double A,
                          double fitted_constant) {
  if (!(sigma > 0.5)) throw std::invalid_argument("g_bound_check: needs sigma > 1/2");
  GBoundCheck out;
  double log_value = 0.0;
  double p_max = 2.0;
  for (const auto& [p, fac] : factors) {
    double x = std::pow(static_cast<double>(p), -sigma);
    double v = poly_eval(fac.gp, x);
    log_value += std::log(std::fabs(v));
    p_max = std::max(p_max, static_cast<double>(p));
  }
  out.value = std::exp(log_value);
  out.bound = std::pow(sigma, A) * std::pow(sigma - 0.5, -A);
  out.ratio = out.value / out.bound;
  // |log Π_{p>P}| ≤ Σ_{p>P} A' p^{−2σ}(1 + o(1)), bounded by the integral
  out.tail_bound = A * std::pow(p_max, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0);
  out.violation = out.ratio > fitted_constant;
  return out;
}

}  // namespace siegel
