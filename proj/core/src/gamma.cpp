#include "siegel/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace siegel {

std::vector<GammaFactor> gamma_factors(int k1, int k2) {
  if (k2 < 4 || k1 < k2) throw std::invalid_argument("gamma_factors: needs k1 >= k2 >= 4");
  std::vector<GammaFactor> out;
  if (k1 > k2) {
    for (int shift : {k1 + k2 - 3, k1 - k2, k1 - 1, k1 - 2, k2 - 1, k2 - 2, 1})
      out.push_back({GammaKind::C, shift});
    out.push_back({GammaKind::R, 0});
    out.push_back({GammaKind::R, 1});
  } else {
    for (int shift : {2 * k1 - 3, k1 - 1, k1 - 1, k1 - 2, k1 - 2, 1})
      out.push_back({GammaKind::C, shift});
    for (int shift : {0, 0, 1, 1}) out.push_back({GammaKind::R, shift});
  }
  return out;
}

namespace {

// Lanczos, g = 7, 9 terms
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos core, valid for Re(z) >= 0.5
std::complex<double> log_gamma_half_plane(std::complex<double> z) {
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

double log_abs_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return log_gamma_half_plane(z).real();
  // reflection on magnitudes: log|Γ(z)| = log π − log|sin πz| − log|Γ(1−z)|
  double ay = std::fabs(M_PI * z.imag());
  double log_abs_sin;
  if (ay > 30.0) {
    // |sin πz|² = sin²(πx) + sinh²(πy) = e^{2ay}/4 up to a 1e−26 correction
    log_abs_sin = ay - std::log(2.0);
  } else {
    double s = std::sin(M_PI * z.real());
    double sh = std::sinh(M_PI * z.imag());
    log_abs_sin = 0.5 * std::log(s * s + sh * sh);
  }
  return std::log(M_PI) - log_abs_sin - log_abs_gamma(1.0 - z);
}

double log_abs_gamma_r(std::complex<double> s) {
  return -0.5 * s.real() * std::log(M_PI) + log_abs_gamma(s / 2.0);
}

double log_abs_gamma_c(std::complex<double> s) {
  return std::log(2.0) - s.real() * std::log(2.0 * M_PI) + log_abs_gamma(s);
}

ArchRatio archimedean_ratio(int k1, int k2, double c, double t) {
  if (!(c > 1.0 && c < 1.5)) throw std::invalid_argument("archimedean_ratio: needs 1 < c < 3/2");
  if (k2 < 4 || k1 < k2) throw std::invalid_argument("archimedean_ratio: needs k1 >= k2 >= 4");
  std::vector<GammaFactor> factors = gamma_factors(k1, k2);
  std::complex<double> s{c, t};
  std::complex<double> s_ref = 1.0 - s;
  double log_ratio = 0.0;
  for (const GammaFactor& f : factors) {
    double shift = static_cast<double>(f.shift);
    if (f.kind == GammaKind::C)
      log_ratio += log_abs_gamma_c(s + shift) - log_abs_gamma_c(s_ref + shift);
    else
      log_ratio += log_abs_gamma_r(s + shift) - log_abs_gamma_r(s_ref + shift);
  }
  ArchRatio out;
  out.value = std::exp(log_ratio);
  out.bound = std::pow(static_cast<double>(k1), 6.0 * (2.0 * c - 1.0)) *
              std::pow(std::hypot(1.0, t), 8.0 * (2.0 * c - 1.0));
  return out;
}

namespace {

void validate(const RademacherParams& p) {
  if (!(p.a < p.b)) throw std::invalid_argument("rademacher: needs a < b");
  if (!(p.P + p.a > 0.0)) throw std::invalid_argument("rademacher: needs P + a > 0");
  if (!(p.alpha >= p.beta)) throw std::invalid_argument("rademacher: needs alpha >= beta");
  if (!(p.E > 0.0 && p.F > 0.0)) throw std::invalid_argument("rademacher: needs E, F > 0");
}

}  // namespace

double rademacher_bound(const RademacherParams& p, double sigma, double t) {
  validate(p);
  if (!(sigma >= p.a && sigma <= p.b))
    throw std::invalid_argument("rademacher_bound: sigma outside [a, b]");
  return rademacher_interp(p, sigma, std::hypot(p.P + sigma, t));
}

double rademacher_interp(const RademacherParams& p, double sigma, double modulus) {
  validate(p);
  double w = (p.b - sigma) / (p.b - p.a);  // weight of the left edge
  double log_m = std::log(modulus);
  double log_left = std::log(p.E) + p.alpha * log_m;
  double log_right = std::log(p.F) + p.beta * log_m;
  return std::exp(w * log_left + (1.0 - w) * log_right);
}

}  // namespace siegel
