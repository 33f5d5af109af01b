#pragma once

#include "siegel/rational.hpp"

#include <vector>

namespace siegel {

// The family f_0(x) = −1, f_1(x) = −x, f_{n+1}(x) = x·f_n(x) − f_{n−1}(x).
// Integer coefficients, leading coefficient −1; the zero-seed even-exponent
// eigenvalues are λ(p^{2n+4}) = f_n(1/p).
struct FPoly {
  int n = 0;
  std::vector<Integer> coeffs;  // constant first, degree n
};

FPoly f_family(int n);

Rational f_eval(const FPoly& f, const Rational& x);

// Evaluates f_n at a non-integral rational. Monic-up-to-sign integer
// polynomials have no such roots, so the result is nonzero; integral
// arguments are outside that statement and get rejected.
Rational f_no_rational_root(int n, const Rational& x);

}  // namespace siegel
