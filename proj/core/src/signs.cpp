#include "siegel/signs.hpp"

#include "siegel/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace siegel {

SignCensus sign_census(const EigenTable<double>& f, const EigenTable<double>& g, std::uint64_t x,
                       double tol) {
  if (x > f.cutoff || x > g.cutoff) throw std::invalid_argument("sign_census: cutoff too small");
  SignCensus out;
  out.x = x;
  for (std::uint64_t n = 1; n <= x; ++n) {
    double v = f.value[n] * g.value[n];
    if (std::fabs(v) <= tol)
      ++out.zero;
    else if (v > 0)
      ++out.pos;
    else
      ++out.neg;
  }
  return out;
}

DensityResult mr_density(const HFunction& h, std::uint64_t p_max) {
  if (h.stable_from < 1) throw std::invalid_argument("mr_density: stable_from must be >= 1");
  DensityResult out;
  out.exact = Rational(1);
  for (std::uint64_t p : primes_up_to(p_max)) {
    unsigned long pl = static_cast<unsigned long>(p);
    // Σ_{j ≥ 1} h(p^j) p^{−j}, split at the stabilization exponent J:
    // the head is a finite sum, the tail a geometric series.
    unsigned J = h.stable_from;
    Rational sum(0);
    Integer pj(1);
    for (unsigned j = 1; j < J; ++j) {
      pj *= pl;
      if (h.nonzero(p, j)) sum += ratio(Integer(1), pj);
    }
    pj *= pl;  // p^J
    if (h.nonzero(p, J)) sum += ratio(Integer(1), pj) * ratio(Integer(pl), Integer(pl - 1));
    Rational factor = ratio(Integer(pl - 1), Integer(pl)) * (1 + sum);
    out.exact *= factor;
  }
  out.value = out.exact.get_d();
  // each omitted factor is 1 + O(1/p²); the log-tail is below Σ_{p>P} 2/p²
  out.tail_bound = p_max > 0 ? 2.0 / static_cast<double>(p_max) : 2.0;
  return out;
}

PrimeSignEstimate prime_sign_estimator(const EigenTable<double>& f, const EigenTable<double>& g,
                                       std::uint64_t x, double tol) {
  if (x > f.cutoff || x > g.cutoff)
    throw std::invalid_argument("prime_sign_estimator: cutoff too small");
  PrimeSignEstimate out;
  for (std::uint64_t p : primes_up_to(x)) {
    double y = f.value[p] * g.value[p];
    out.s_plus += (y + 16.0) * y;
    out.s_minus += (y - 16.0) * y;
    ++out.primes;
    if (y > tol)
      ++out.pos_primes;
    else if (y < -tol)
      ++out.neg_primes;
  }
  out.pos_lower_bound = out.s_plus / 512.0;
  out.neg_lower_bound = out.s_minus / 512.0;
  return out;
}

HypothesisResult hypothesis_check(const EigenTable<double>& g, double c, std::uint64_t x) {
  if (!(c > 0.0 && c < 4.0)) throw std::invalid_argument("hypothesis_check: needs 0 < c < 4");
  if (x > g.cutoff || x < 2) throw std::invalid_argument("hypothesis_check: bad cutoff");
  HypothesisResult out;
  for (std::uint64_t p : primes_up_to(x))
    if (std::fabs(g.value[p]) > c) ++out.count;
  double ref = static_cast<double>(x) / std::log(static_cast<double>(x));
  out.threshold = 16.0 / 17.0 * ref;
  out.fraction = static_cast<double>(out.count) / ref;
  out.pass = static_cast<double>(out.count) >= out.threshold;
  return out;
}

ZeroDensityReport zero_density_report(const EigenTable<double>& table, std::uint64_t x, double delta,
                                      double tol) {
  if (!(delta > 0.0)) throw std::invalid_argument("zero_density_report: needs delta > 0");
  if (x > table.cutoff || x < 2) throw std::invalid_argument("zero_density_report: bad cutoff");
  ZeroDensityReport out;
  for (std::uint64_t p : primes_up_to(x))
    if (std::fabs(table.value[p]) <= tol) ++out.zero_count;
  out.reference =
      static_cast<double>(x) / std::pow(std::log(static_cast<double>(x)), 1.0 + delta);
  return out;
}

}  // namespace siegel
