#include "siegel/fpoly.hpp"

#include <stdexcept>

namespace siegel {

FPoly f_family(int n) {
  if (n < 0) throw std::invalid_argument("f_family: negative index");
  FPoly f0{0, {Integer(-1)}};
  if (n == 0) return f0;
  FPoly f1{1, {Integer(0), Integer(-1)}};
  if (n == 1) return f1;
  FPoly prev = std::move(f0), cur = std::move(f1);
  for (int m = 2; m <= n; ++m) {
    FPoly next{m, std::vector<Integer>(static_cast<std::size_t>(m) + 1, Integer(0))};
    for (int i = 0; i <= m - 1; ++i) next.coeffs[i + 1] = cur.coeffs[i];  // x·f_{m−1}
    for (int i = 0; i <= m - 2; ++i) next.coeffs[i] -= prev.coeffs[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational f_eval(const FPoly& f, const Rational& x) {
  Rational r(0);
  for (std::size_t i = f.coeffs.size(); i-- > 0;) r = r * x + Rational(f.coeffs[i]);
  return r;
}

Rational f_no_rational_root(int n, const Rational& x) {
  if (is_integral(x))
    throw std::invalid_argument("f_no_rational_root: integral argument is outside scope");
  Rational value = f_eval(f_family(n), x);
  if (value == 0)
    throw std::logic_error("f_no_rational_root: hit a non-integral rational root");
  return value;
}

}  // namespace siegel
