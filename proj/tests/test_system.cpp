#include <doctest.h>

#include "siegel/rng.hpp"
#include "siegel/system.hpp"

#include <numeric>
#include <sstream>

using namespace siegel;

namespace {

EigenSystem zero_system(std::uint64_t p_max) {
  EigenSystem sys;
  for (std::uint64_t p : primes_up_to(p_max)) sys.insert(make_seed(p, Rational(0), Rational(0)));
  return sys;
}

}  // namespace

TEST_CASE("multiplicative extension basics") {
  EigenSystem sys;
  sys.insert(make_seed(2, Rational(1), Rational(2)));
  sys.insert(make_seed(3, ratio(1, 2), Rational(0)));
  sys.insert(make_seed(5, Rational(-1), Rational(1)));
  sys.insert(make_seed(7, Rational(0), Rational(3)));

  EigenTable<Rational> table = extend_multiplicative_exact(sys, 10);
  CHECK(table.at(1) == Rational(1));
  CHECK(table.at(6) == table.at(2) * table.at(3));
  CHECK(table.at(6) == ratio(1, 2));
  CHECK(table.at(10) == Rational(-1));

  EigenTable<double> ftable = extend_multiplicative(sys, 10);
  for (std::uint64_t n = 1; n <= 10; ++n)
    CHECK(ftable.at(n) == doctest::Approx(table.at(n).get_d()).epsilon(1e-12));
}

TEST_CASE("zero seeds: lambda(p^4 q^4) = 1") {
  EigenSystem sys = zero_system(1300);
  EigenTable<Rational> table = extend_multiplicative_exact(sys, 1300);
  CHECK(table.at(16) == Rational(-1));           // 2^4
  CHECK(table.at(1296) == Rational(1));          // 2^4 * 3^4
  CHECK(table.at(64) == ratio(-1, 2));           // 2^6
}

TEST_CASE("missing prime is reported by name") {
  EigenSystem sys;
  sys.insert(make_seed(2, Rational(0), Rational(0)));
  sys.insert(make_seed(3, Rational(0), Rational(0)));
  CHECK_THROWS_WITH_AS(extend_multiplicative(sys, 30), doctest::Contains("prime 5"),
                       std::out_of_range);
}

TEST_CASE("exact tables refuse odd-parity seeds") {
  EigenSystem sys;
  sys.insert(make_seed(2, GradedRational{Rational(1), Parity::odd},
                       GradedRational{Rational(0), Parity::even}));
  CHECK_THROWS_AS(extend_multiplicative_exact(sys, 2), std::domain_error);
  // the float lane projects it fine
  EigenTable<double> t = extend_multiplicative(sys, 2);
  CHECK(t.at(2) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("multiplicativity on coprime pairs") {
  EigenSystem sys;
  Rng rng(17);
  for (std::uint64_t p : primes_up_to(200)) {
    long a = static_cast<long>(rng.below(7)) - 3;
    long b = static_cast<long>(rng.below(7)) - 3;
    sys.insert(make_seed(p, ratio(a, 2), ratio(b, 2)));
  }
  EigenTable<Rational> table = extend_multiplicative_exact(sys, 200);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t m = 1 + rng.below(200);
    std::uint64_t n = 1 + rng.below(200 / m > 0 ? 200 / m : 1);
    if (n == 0 || m * n > 200) continue;
    if (std::gcd(m, n) != 1) continue;
    CHECK(table.at(m * n) == table.at(m) * table.at(n));
  }
}

TEST_CASE("csv ingestion") {
  SUBCASE("valid three-row file parses three records") {
    std::istringstream in("p,n,mu,k\n2,1,256,10\n2,2,1024,10\n2,3,-12288,10\n");
    auto records = parse_raw_csv(in);
    CHECK(records.size() == 3);
    std::istringstream again("p,n,mu,k\n2,1,256,10\n2,2,1024,10\n2,3,-12288,10\n");
    EigenSystem sys = ingest_csv(again);
    CHECK(sys.seeds.size() == 1);
    CHECK(sys.provenance == Provenance::ingested);
    CHECK(sys.seed_at(2).lam_p == GradedRational{Rational(1), Parity::odd});
  }
  SUBCASE("duplicate (p, n) rejected with the row number") {
    std::istringstream in("p,n,mu,k\n2,1,256,10\n2,1,300,10\n");
    CHECK_THROWS_WITH_AS(parse_raw_csv(in), doctest::Contains("row 3"), std::invalid_argument);
  }
  SUBCASE("mu = 0 rows are meaningful and accepted") {
    std::istringstream in("p,n,mu,k\n3,1,0,20\n3,2,0,20\n");
    EigenSystem sys = ingest_csv(in);
    CHECK(sys.seed_at(3).lam_p.is_zero());
    CHECK(sys.seed_at(3).lam_p2.is_zero());
  }
  SUBCASE("bad header rejected") {
    std::istringstream in("p,n,k,mu\n2,1,256,10\n");
    CHECK_THROWS_AS(parse_raw_csv(in), std::invalid_argument);
  }
  SUBCASE("incomplete seed pair rejected") {
    std::istringstream in("p,n,mu,k\n2,1,256,10\n");
    CHECK_THROWS_WITH_AS(ingest_csv(in), doctest::Contains("n=1 and n=2"), std::invalid_argument);
  }
  SUBCASE("wrong field count named by row") {
    std::istringstream in("p,n,mu,k\n2,1,256,10\n3,1,0\n");
    CHECK_THROWS_WITH_AS(parse_raw_csv(in), doctest::Contains("row 3"), std::invalid_argument);
  }
  SUBCASE("garbage integers named by row") {
    std::istringstream in("p,n,mu,k\n2,one,256,10\n");
    CHECK_THROWS_WITH_AS(parse_raw_csv(in), doctest::Contains("row 2"), std::invalid_argument);
  }
  SUBCASE("composite p rejected") {
    std::istringstream in("p,n,mu,k\n4,1,256,10\n");
    CHECK_THROWS_WITH_AS(parse_raw_csv(in), doctest::Contains("not prime"), std::invalid_argument);
  }
}
