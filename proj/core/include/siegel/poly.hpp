#pragma once

#include "siegel/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace siegel {

// Dense polynomials, constant term first. Degrees stay tiny here (≤ 20 for
// the generating-function work, ≤ 30 for the f_n family), so no sparsity.
template <class T>
using Poly = std::vector<T>;

namespace detail {
inline bool scalar_zero(const Rational& x) { return x == 0; }
inline bool scalar_zero(double x) { return x == 0.0; }
}  // namespace detail

template <class T>
int poly_degree(const Poly<T>& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (!detail::scalar_zero(a[i])) return static_cast<int>(i);
  return -1;
}

template <class T>
void poly_trim(Poly<T>& a) {
  while (!a.empty() && detail::scalar_zero(a.back())) a.pop_back();
}

template <class T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
Poly<T> poly_sub(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <class T>
T poly_eval(const Poly<T>& a, const T& x) {
  T r(0);
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

// Power sums s_k = Σ r_i^k of the reciprocal roots of D(T) = Π(1 − r_i T),
// straight from the coefficients (Newton's identities). Needs D(0) = 1.
template <class T>
std::vector<T> power_sums(const Poly<T>& den, int k_max) {
  if (den.empty() || !(den[0] == T(1)))
    throw std::invalid_argument("power_sums: constant term must be 1");
  int m = static_cast<int>(den.size()) - 1;
  std::vector<T> s(static_cast<std::size_t>(k_max) + 1, T(0));
  for (int k = 1; k <= k_max; ++k) {
    T acc = k <= m ? T(-k) * den[k] : T(0);
    for (int j = 1; j < k; ++j)
      if (k - j <= m) acc -= s[j] * den[k - j];
    s[k] = acc;
  }
  return s;
}

// Rebuild Π(1 − r_i T) of degree m from s_1..s_m.
template <class T>
Poly<T> poly_from_power_sums(const std::vector<T>& s, int m) {
  Poly<T> d(static_cast<std::size_t>(m) + 1, T(0));
  d[0] = T(1);
  for (int k = 1; k <= m; ++k) {
    T acc = s[k];
    for (int j = 1; j < k; ++j) acc += d[j] * s[k - j];
    d[k] = -acc / T(k);
  }
  return d;
}

// Π over all reciprocal-root pairs (1 − a_i b_j T): the power sums of the
// product multiset are the pointwise products of the two power-sum
// sequences. Exact in rational arithmetic, no root extraction involved.
template <class T>
Poly<T> tensor_product_poly(const Poly<T>& a, const Poly<T>& b) {
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  int m = da * db;
  if (m == 0) return {T(1)};
  std::vector<T> sa = power_sums(a, m);
  std::vector<T> sb = power_sums(b, m);
  std::vector<T> s(static_cast<std::size_t>(m) + 1, T(0));
  for (int k = 1; k <= m; ++k) s[k] = sa[k] * sb[k];
  return poly_from_power_sums(s, m);
}

}  // namespace siegel
