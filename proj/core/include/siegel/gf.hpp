#pragma once

#include "siegel/hecke.hpp"
#include "siegel/poly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace siegel {

// P(T)/Q(T) with Q(0) != 0, optionally with Q factored over the scalar type
// as a (reciprocal root, multiplicity) list.
template <class T>
struct RationalGF {
  Poly<T> num;
  Poly<T> den;
  std::optional<std::vector<std::pair<T, int>>> factored_den;
};

namespace detail {
inline bool roots_equal(const Rational& a, const Rational& b) { return a == b; }
inline bool roots_equal(double a, double b) { return std::fabs(a - b) <= 1e-9; }
}  // namespace detail

// Power-series coefficients a_0..a_n of num/den; for n > deg(num) the a_n
// satisfy the linear recurrence given by den.
template <class T>
std::vector<T> series_coeffs(const RationalGF<T>& gf, int n_terms) {
  if (gf.den.empty() || detail::scalar_zero(gf.den[0]))
    throw std::domain_error("series_coeffs: malformed denominator, den[0] = 0");
  std::vector<T> a(static_cast<std::size_t>(n_terms) + 1, T(0));
  for (int n = 0; n <= n_terms; ++n) {
    T acc = n < static_cast<int>(gf.num.size()) ? gf.num[n] : T(0);
    for (int k = 1; k < static_cast<int>(gf.den.size()) && k <= n; ++k)
      acc -= gf.den[k] * a[n - k];
    a[n] = acc / gf.den[0];
  }
  return a;
}

template <class T>
Poly<T> expand_factored(const std::vector<std::pair<T, int>>& roots) {
  Poly<T> den{T(1)};
  for (const auto& [alpha, mult] : roots) {
    Poly<T> lin{T(1), -alpha};
    for (int i = 0; i < mult; ++i) den = poly_mul(den, lin);
  }
  return den;
}

template <class T>
bool factored_matches_den(const RationalGF<T>& gf, double tol = 1e-12) {
  if (!gf.factored_den) return false;
  Poly<T> expanded = expand_factored(*gf.factored_den);
  if (expanded.size() != gf.den.size()) return false;
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    if constexpr (std::is_same_v<T, double>) {
      double scale = std::max({1.0, std::fabs(expanded[i]), std::fabs(gf.den[i])});
      if (std::fabs(expanded[i] - gf.den[i]) > tol * scale) return false;
    } else {
      if (!(expanded[i] == gf.den[i])) return false;
    }
  }
  return true;
}

// Coefficientwise product of two rational series. The denominator comes from
// the root products (1 − α_i β_j T)^{ℓ_i m_j} when both factorizations are
// known, and from the power-sum tensor construction otherwise; colliding
// products merge their multiplicities. The numerator is recovered by
// multiplying the coefficientwise-product series by the denominator and
// truncating below its degree.
template <class T>
RationalGF<T> hadamard(const RationalGF<T>& a, const RationalGF<T>& b) {
  auto deg_num_a = poly_degree(a.num), deg_den_a = poly_degree(a.den);
  auto deg_num_b = poly_degree(b.num), deg_den_b = poly_degree(b.den);
  if (deg_num_a >= deg_den_a || deg_num_b >= deg_den_b)
    throw std::invalid_argument("hadamard: requires deg(num) < deg(den)");
  if (detail::scalar_zero(a.den[0]) || detail::scalar_zero(b.den[0]))
    throw std::domain_error("hadamard: malformed denominator");

  RationalGF<T> out;
  if (a.factored_den && b.factored_den) {
    std::vector<std::pair<T, int>> products;
    for (const auto& [alpha, la] : *a.factored_den)
      for (const auto& [beta, mb] : *b.factored_den) {
        T ab = alpha * beta;
        bool merged = false;
        for (auto& [r, m] : products)
          if (detail::roots_equal(r, ab)) {
            m += la * mb;
            merged = true;
            break;
          }
        if (!merged) products.emplace_back(ab, la * mb);
      }
    out.den = expand_factored(products);
    out.factored_den = std::move(products);
  } else {
    // normalize constant terms to 1 for the power-sum route
    Poly<T> da = a.den, db = b.den;
    if (!(da[0] == T(1)))
      for (auto& c : da) c /= a.den[0];
    if (!(db[0] == T(1)))
      for (auto& c : db) c /= b.den[0];
    if constexpr (std::is_same_v<T, double>) {
      // Newton's identities at degree 16 shed enough precision in binary64
      // to push reconstructed roots visibly off the unit circle; binary64
      // inputs are dyadic rationals, so run the construction exactly and
      // round once at the end.
      Poly<Rational> qa, qb;
      for (double c : da) qa.push_back(rational_from_double(c));
      for (double c : db) qb.push_back(rational_from_double(c));
      Poly<Rational> qden = tensor_product_poly(qa, qb);
      out.den.resize(qden.size());
      for (std::size_t i = 0; i < qden.size(); ++i) out.den[i] = qden[i].get_d();
    } else {
      out.den = tensor_product_poly(da, db);
    }
  }

  int m = poly_degree(out.den);
  std::vector<T> sa = series_coeffs(a, m > 0 ? m - 1 : 0);
  std::vector<T> sb = series_coeffs(b, m > 0 ? m - 1 : 0);
  Poly<T> r(static_cast<std::size_t>(std::max(m, 1)), T(0));
  for (int k = 0; k < m; ++k) {
    T acc(0);
    for (int j = 0; j <= k && j < static_cast<int>(sa.size()); ++j)
      if (k - j <= m) acc += sa[j] * sb[j] * out.den[k - j];
    r[k] = acc;
  }
  poly_trim(r);
  if (r.empty()) r = {T(0)};
  out.num = std::move(r);
  return out;
}

// (1 − T²/p) / spin_poly(T). The exact lane needs a plain-rational seed
// (even parity); odd-parity seeds have irrational spin coefficients and
// only project to the float lane.
RationalGF<Rational> local_spin_gf(const HeckeSeed& seed);
RationalGF<double> local_spin_gf_real(const HeckeSeed& seed);

// Local factor of the degree-16 convolution: the coefficientwise-product
// series equals g_p(T) / Π(1 − α_i β_j T) with deg g_p ≤ 15, g_p(0) = 1 and
// vanishing linear term.
template <class T>
struct LocalRankinFactor {
  Poly<T> gp;
  Poly<T> den;
  // The 16 products α_i β_j, with collisions merged; available when both
  // seeds carry Satake angles.
  std::optional<std::vector<std::pair<std::complex<double>, int>>> den_roots;
};

LocalRankinFactor<Rational> local_rankin_factor(const HeckeSeed& f, const HeckeSeed& g);
LocalRankinFactor<double> local_rankin_factor_real(const HeckeSeed& f, const HeckeSeed& g);

// max_n |coeff of T^n in (Σ λ_F λ_G T^n)·den − g_p(T)| for n ≤ depth, with
// the product series taken from the recurrence (the independent route).
Rational identity_residual(const HeckeSeed& f, const HeckeSeed& g, int depth = 40);
// float lane residual, scaled by the magnitude of the largest term involved
double identity_residual_real(const HeckeSeed& f, const HeckeSeed& g, int depth = 40);

}  // namespace siegel
