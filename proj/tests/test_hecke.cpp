#include <doctest.h>

#include "siegel/gf.hpp"
#include "siegel/hecke.hpp"
#include "siegel/rng.hpp"

#include <cmath>

using namespace siegel;

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational binom_q(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("spin polynomial coefficients [1, -a, c, -a, 1]") {
  SUBCASE("zero seed at p = 2: c = -1/p") {
    auto sp = spin_poly(make_seed(2, Rational(0), Rational(0)));
    CHECK(sp[0] == GradedRational::one());
    CHECK(sp[1].is_zero());
    CHECK(sp[2] == GradedRational{ratio(-1, 2), Parity::even});
    CHECK(sp[3].is_zero());
    CHECK(sp[4] == GradedRational::one());
  }
  SUBCASE("seed (1, 1, p=5): c = 1 - 1 - 1/5") {
    auto sp = spin_poly(make_seed(5, Rational(1), Rational(1)));
    CHECK(sp[1] == GradedRational{Rational(-1), Parity::even});
    CHECK(sp[2] == GradedRational{ratio(-1, 5), Parity::even});
  }
  SUBCASE("fully degenerate Satake angles give (1-T)^4") {
    HeckeSeed seed = satake_to_seed(SatakePair{0.0, 0.0}, 7);
    auto sp = spin_poly(seed);
    CHECK(sp[1] == GradedRational{Rational(-4), Parity::even});
    CHECK(sp[2] == GradedRational{Rational(6), Parity::even});
    // oracle: the corrected binomial series (1 - T^2/7) / (1-T)^4 must obey
    // the recurrence this polynomial encodes
    auto lam = lambda_powers(seed, 10);
    for (int n = 0; n <= 10; ++n) {
      Rational expect = binom_q(n + 3, 3) - binom_q(n + 1, 3) / 7;
      CHECK(lam[n].q == expect);
    }
  }
  SUBCASE("palindromic by construction") {
    HeckeSeed seed = make_seed(3, ratio(1, 2), ratio(-2, 3));
    auto sp = spin_poly(seed);
    CHECK(sp[0] == sp[4]);
    CHECK(sp[1] == sp[3]);
  }
}

TEST_CASE("four-term recurrence on prime powers") {
  SUBCASE("zero seed: lambda(p^4) = -1 and lambda(p^6) = -1/p") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      HeckeSeed seed = make_seed(p, Rational(0), Rational(0));
      CHECK(lambda_prime_power(seed, 4) == GradedRational{Rational(-1), Parity::even});
      CHECK(lambda_prime_power(seed, 6) ==
            GradedRational{-ratio(1, static_cast<unsigned long>(p)), Parity::even});
    }
  }
  SUBCASE("seed (1, 1, p=3): lambda(3^3) = 7/3, lambda(3^4) = 8/3") {
    HeckeSeed seed = make_seed(3, Rational(1), Rational(1));
    CHECK(lambda_prime_power(seed, 3).q == ratio(7, 3));
    CHECK(lambda_prime_power(seed, 4).q == ratio(8, 3));
  }
  SUBCASE("n = 0, 1, 2 come straight from the seed") {
    HeckeSeed seed = make_seed(5, ratio(1, 2), ratio(3, 4));
    CHECK(lambda_prime_power(seed, 0) == GradedRational::one());
    CHECK(lambda_prime_power(seed, 1).q == ratio(1, 2));
    CHECK(lambda_prime_power(seed, 2).q == ratio(3, 4));
  }
}

TEST_CASE("parity grading along the power sequence") {
  SUBCASE("odd-parity seed: parity of lambda(p^n) is n mod 2") {
    // the normalized-eigenvalue shape: lambda(p) odd, lambda(p^2) even
    HeckeSeed seed = make_seed(2, GradedRational{Rational(1), Parity::odd},
                               GradedRational{ratio(3, 7), Parity::even});
    auto lam = lambda_powers(seed, 64);
    for (int n = 0; n <= 64; ++n) {
      if (lam[n].is_zero()) continue;
      CHECK(lam[n].parity == (n % 2 == 0 ? Parity::even : Parity::odd));
    }
  }
  SUBCASE("plain-rational seed stays even") {
    HeckeSeed seed = make_seed(3, ratio(-2, 5), ratio(1, 3));
    auto lam = lambda_powers(seed, 32);
    for (const auto& v : lam)
      if (!v.is_zero()) CHECK(v.parity == Parity::even);
  }
}

TEST_CASE("satake_to_seed") {
  SUBCASE("theta1 = theta2 = 0 at p = 5") {
    HeckeSeed seed = satake_to_seed(SatakePair{0.0, 0.0}, 5);
    CHECK(seed.lam_p.q == Rational(4));
    CHECK(seed.lam_p2.q == ratio(49, 5));  // 10 - 1/5
  }
  SUBCASE("theta1 = pi, theta2 = 0: u = -2, v = 2") {
    for (std::uint64_t p : {2ull, 11ull}) {
      HeckeSeed seed = satake_to_seed(SatakePair{M_PI, 0.0}, p);
      CHECK(seed.lam_p.is_zero());
      CHECK(seed.lam_p2.q == Rational(2) - ratio(1, static_cast<unsigned long>(p)));
    }
  }
  SUBCASE("right angles at p = 2: lambda(p^2) = -2 - 1/2") {
    HeckeSeed seed = satake_to_seed(SatakePair{M_PI / 2.0, M_PI / 2.0}, 2);
    CHECK(seed.lam_p.is_zero());
    CHECK(seed.lam_p2.q == ratio(-5, 2));
  }
  SUBCASE("angles outside [0, pi] are rejected") {
    CHECK_THROWS_AS(satake_to_seed(SatakePair{-0.1, 0.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(satake_to_seed(SatakePair{0.0, 3.5}, 2), std::invalid_argument);
  }
  SUBCASE("sampled seeds satisfy the unit-circle constraints") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      HeckeSeed seed = satake_to_seed(SatakePair{rng.uniform(0, M_PI), rng.uniform(0, M_PI)}, 5);
      CHECK(satake_consistent(seed));
    }
  }
}

TEST_CASE("satake bound: |lambda(p^n)| <= C(n+3,3) + C(n+1,3)/p") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t p = trial % 2 == 0 ? 2 : 97;
    HeckeSeed seed = satake_to_seed(SatakePair{rng.uniform(0, M_PI), rng.uniform(0, M_PI)}, p);
    auto lam = lambda_powers(real_view(seed), 64);
    for (int n = 0; n <= 64; ++n) {
      double bound = binom(n + 3, 3) + binom(n + 1, 3) / static_cast<double>(p);
      CHECK(std::fabs(lam[n]) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("recurrence matches generating-function coefficients") {
  SUBCASE("float lane, random Satake seeds") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      std::uint64_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 5 : 97);
      HeckeSeed seed = satake_to_seed(SatakePair{rng.uniform(0, M_PI), rng.uniform(0, M_PI)}, p);
      auto lam = lambda_powers(real_view(seed), 64);
      auto series = series_coeffs(local_spin_gf_real(seed), 64);
      for (int n = 0; n <= 64; ++n) {
        double scale = std::max(1.0, std::fabs(lam[n]));
        CHECK(std::fabs(lam[n] - series[n]) <= 1e-10 * scale);
      }
    }
  }
  SUBCASE("exact lane, rational free-mode seeds") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      long a_num = static_cast<long>(rng.below(9)) - 4;
      long b_num = static_cast<long>(rng.below(9)) - 4;
      unsigned long den = 1 + rng.below(4);
      HeckeSeed seed = make_seed(3, ratio(a_num, den), ratio(b_num, den));
      auto lam = lambda_powers(seed, 64);
      auto series = series_coeffs(local_spin_gf(seed), 64);
      for (int n = 0; n <= 64; ++n) CHECK(lam[n].q == series[n]);
    }
  }
}

TEST_CASE("normalize raw eigenvalues") {
  SUBCASE("(p=2, n=2, mu=1024, k=10) -> 1/128 even") {
    GradedRational v = normalize({2, 2, Integer(1024), 10});
    CHECK(v == GradedRational{ratio(1, 128), Parity::even});
  }
  SUBCASE("(p=2, n=1, mu=256, k=10) -> (1, odd)") {
    GradedRational v = normalize({2, 1, Integer(256), 10});
    CHECK(v == GradedRational{Rational(1), Parity::odd});
  }
  SUBCASE("zero input stays zero") {
    CHECK(normalize({3, 1, Integer(0), 20}).is_zero());
  }
  SUBCASE("malformed records rejected") {
    CHECK_THROWS_AS(normalize({2, 1, Integer(1), 3}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({2, 0, Integer(1), 10}), std::invalid_argument);
  }
}

TEST_CASE("normalize / denormalize round trip") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t p = trial % 2 == 0 ? 2 : 13;
    int n = 1 + static_cast<int>(rng.below(4));
    int k = 4 + static_cast<int>(rng.below(20));
    Integer mu = Integer(static_cast<long>(rng.below(1000000)) - 500000);
    RawEigenRecord rec{p, n, mu, k};
    CHECK(denormalize(normalize(rec), p, n, k) == mu);
  }
}
