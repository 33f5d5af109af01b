#pragma once

#include "siegel/rational.hpp"
#include "siegel/system.hpp"

#include <cstdint>
#include <functional>

namespace siegel {

struct SignCensus {
  std::uint64_t x = 0;
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  std::uint64_t zero = 0;  // pos + neg + zero = x
};

SignCensus sign_census(const EigenTable<double>& f, const EigenTable<double>& g, std::uint64_t x,
                       double tol = 1e-9);

// 0/1 indicator over prime powers, eventually constant in the exponent:
// h(p^j) = nonzero(p, min(j, stable_from)) for every j ≥ 1.
struct HFunction {
  std::function<bool(std::uint64_t p, unsigned j)> nonzero = [](std::uint64_t, unsigned) {
    return true;
  };
  unsigned stable_from = 1;
};

// Π_{p ≤ P} (1 − 1/p)(1 + h(p)/p + h(p²)/p² + ...), each factor summed in
// closed form, so the truncated product is exact.
struct DensityResult {
  Rational exact{0};
  double value = 0.0;
  double tail_bound = 0.0;  // bound on |log| of the neglected p > P part
};

DensityResult mr_density(const HFunction& h, std::uint64_t p_max);

// S±(x) = Σ_{p ≤ x} (λ_F(p)λ_G(p) ± 16) λ_F(p)λ_G(p) and the termwise
// counting bounds #pos ≥ S⁺/512, #neg ≥ S⁻/512.
struct PrimeSignEstimate {
  double s_plus = 0.0;
  double s_minus = 0.0;
  double pos_lower_bound = 0.0;
  double neg_lower_bound = 0.0;
  std::uint64_t primes = 0;
  std::uint64_t pos_primes = 0;
  std::uint64_t neg_primes = 0;
};

PrimeSignEstimate prime_sign_estimator(const EigenTable<double>& f, const EigenTable<double>& g,
                                       std::uint64_t x, double tol = 1e-9);

// #{p ≤ x : |λ_G(p)| > c} against the (16/17)·x/log x threshold.
struct HypothesisResult {
  std::uint64_t count = 0;
  double threshold = 0.0;
  double fraction = 0.0;  // count / (x / log x)
  bool pass = false;
};

HypothesisResult hypothesis_check(const EigenTable<double>& g, double c, std::uint64_t x);

// Empirical zero count at primes next to the x/(log x)^{1+δ} reference
// curve; monitoring only.
struct ZeroDensityReport {
  std::uint64_t zero_count = 0;
  double reference = 0.0;
};

ZeroDensityReport zero_density_report(const EigenTable<double>& table, std::uint64_t x, double delta,
                                      double tol = 1e-9);

}  // namespace siegel
