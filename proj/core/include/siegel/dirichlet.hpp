#pragma once

#include "siegel/gf.hpp"
#include "siegel/system.hpp"

#include <cmath>
#include <map>
#include <string>

namespace siegel {

template <class T>
struct DirichletSeries {
  std::uint64_t cutoff = 0;
  std::vector<T> coeff;  // [0..cutoff], coeff[0] unused
  std::string label;

  const T& at(std::uint64_t n) const {
    if (n == 0 || n > cutoff) throw std::out_of_range("DirichletSeries: index out of range");
    return coeff[n];
  }
};

// coeff(n) = λ_F(n) λ_G(n); multiplicative since both factors are.
template <class T>
DirichletSeries<T> coeffs_product(const EigenTable<T>& f, const EigenTable<T>& g,
                                  std::string label = "L(F,G)") {
  if (f.cutoff != g.cutoff) throw std::invalid_argument("coeffs_product: cutoff mismatch");
  DirichletSeries<T> out;
  out.cutoff = f.cutoff;
  out.label = std::move(label);
  out.coeff.resize(f.cutoff + 1, T(0));
  for (std::uint64_t n = 1; n <= f.cutoff; ++n) out.coeff[n] = f.value[n] * g.value[n];
  return out;
}

template <class T>
using RankinFactors = std::map<std::uint64_t, LocalRankinFactor<T>>;

// local factors for every prime up to the cutoff
RankinFactors<Rational> rankin_factors(const EigenSystem& f, const EigenSystem& g, std::uint64_t n_max);
RankinFactors<double> rankin_factors_real(const EigenSystem& f, const EigenSystem& g, std::uint64_t n_max);

// Coefficients of Π_p Π_{i,j} (1 − α_i β_j p^{−s})^{−1}: per prime the series
// of 1/den_p, assembled multiplicatively.
template <class T>
DirichletSeries<T> coeffs_rankin(const RankinFactors<T>& factors, std::uint64_t n_max) {
  DirichletSeries<T> out;
  out.cutoff = n_max;
  out.label = "L(FxG)";
  out.coeff = multiplicative_table<T>(n_max, [&](std::uint64_t p) {
    auto it = factors.find(p);
    if (it == factors.end())
      throw std::out_of_range("coeffs_rankin: missing local factor for prime " + std::to_string(p));
    int v_max = 0;
    for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
      ++v_max;
      if (pk > n_max / p) break;
    }
    RationalGF<T> inv{{T(1)}, it->second.den, std::nullopt};
    return series_coeffs(inv, v_max);
  });
  return out;
}

// Multiplicative coefficients of g(s) = Π_p g_p(p^{−s}); a polynomial local
// factor, so g(p^j) = 0 beyond its degree.
template <class T>
DirichletSeries<T> coeffs_g(const RankinFactors<T>& factors, std::uint64_t n_max) {
  DirichletSeries<T> out;
  out.cutoff = n_max;
  out.label = "g";
  out.coeff = multiplicative_table<T>(n_max, [&](std::uint64_t p) {
    auto it = factors.find(p);
    if (it == factors.end())
      throw std::out_of_range("coeffs_g: missing local factor for prime " + std::to_string(p));
    int v_max = 0;
    for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
      ++v_max;
      if (pk > n_max / p) break;
    }
    std::vector<T> vals(static_cast<std::size_t>(v_max) + 1, T(0));
    for (int j = 0; j <= v_max; ++j)
      vals[j] = j < static_cast<int>(it->second.gp.size()) ? it->second.gp[j] : T(0);
    return vals;
  });
  return out;
}

template <class T>
DirichletSeries<T> dirichlet_convolve(const DirichletSeries<T>& a, const DirichletSeries<T>& b,
                                      std::string label = "a*b") {
  if (a.cutoff != b.cutoff) throw std::invalid_argument("dirichlet_convolve: cutoff mismatch");
  DirichletSeries<T> out;
  out.cutoff = a.cutoff;
  out.label = std::move(label);
  out.coeff.assign(a.cutoff + 1, T(0));
  for (std::uint64_t d = 1; d <= a.cutoff; ++d) {
    if (detail::scalar_zero(a.coeff[d])) continue;
    for (std::uint64_t m = 1; d * m <= a.cutoff; ++m) out.coeff[d * m] += a.coeff[d] * b.coeff[m];
  }
  return out;
}

// exact lane: worst absolute coefficient difference
Rational max_abs_difference(const DirichletSeries<Rational>& a, const DirichletSeries<Rational>& b);
// float lane: worst difference scaled by max(1, |a_n|, |b_n|)
double max_scaled_difference(const DirichletSeries<double>& a, const DirichletSeries<double>& b);

// Truncated Euler product g(σ) = Π_{p ≤ P} g_p(p^{−σ}) against the
// σ^A (σ − 1/2)^{−A} envelope; a monitoring quantity, not an assertion.
struct GBoundCheck {
  double value = 0.0;       // |Π g_p(p^{−σ})|
  double bound = 0.0;       // σ^A (σ − 1/2)^{−A}
  double ratio = 0.0;       // value / bound
  double tail_bound = 0.0;  // crude bound on the neglected log-tail
  bool violation = false;   // ratio exceeded the configured constant
};
GBoundCheck g_bound_check(const RankinFactors<double>& factors, double sigma, double A,
                          double fitted_constant);

}  // namespace siegel
