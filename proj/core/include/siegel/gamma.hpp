#pragma once

#include <complex>
#include <vector>

namespace siegel {

// Γ_R(s) = π^{−s/2} Γ(s/2), Γ_C(s) = 2 (2π)^{−s} Γ(s)
enum class GammaKind { R, C };

struct GammaFactor {
  GammaKind kind = GammaKind::C;
  int shift = 0;
};

// Archimedean factors of the degree-16 convolution for weights k1 ≥ k2 ≥ 4:
//   k1 > k2: Γ_C shifts {k1+k2−3, k1−k2, k1−1, k1−2, k2−1, k2−2, 1},
//            Γ_R shifts {0, 1};
//   k1 = k2: Γ_C shifts {2k1−3, k1−1 ×2, k1−2 ×2, 1}, Γ_R shifts {0 ×2, 1 ×2}.
std::vector<GammaFactor> gamma_factors(int k1, int k2);

// log|Γ(z)| via a Lanczos approximation with reflection for Re(z) < 1/2.
double log_abs_gamma(std::complex<double> z);

double log_abs_gamma_r(std::complex<double> s);  // log|Γ_R(s)|
double log_abs_gamma_c(std::complex<double> s);  // log|Γ_C(s)|

struct ArchRatio {
  double value = 0.0;  // |L_∞(c+it) / L_∞(1−c−it)|
  double bound = 0.0;  // k1^{6(2c−1)} |1+it|^{8(2c−1)}
};

// Needs 1 < c < 3/2; evaluated entirely in log space.
ArchRatio archimedean_ratio(int k1, int k2, double c, double t);

struct RademacherParams {
  double a = 0.0, b = 1.0;      // strip edges, a < b
  double E = 1.0, F = 1.0;      // edge constants, positive
  double P = 1.0;               // shift, P + a > 0
  double alpha = 1.0, beta = 0.0;  // edge exponents, alpha ≥ beta
};

// Two-edge geometric interpolation (E|P+s|^α)^{(b−σ)/(b−a)} (F|P+s|^β)^{(σ−a)/(b−a)}
// at s = σ + it, for a ≤ σ ≤ b.
double rademacher_bound(const RademacherParams& params, double sigma, double t);

// The interpolation kernel at a frozen modulus M = |P+s|; log-linear in σ,
// which is the convexity content of the two-edge bound.
double rademacher_interp(const RademacherParams& params, double sigma, double modulus);

}  // namespace siegel
