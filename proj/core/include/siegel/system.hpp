#pragma once

#include "siegel/hecke.hpp"
#include "siegel/primes.hpp"

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace siegel {

enum class Provenance { ingested, satake_sampled, manual };
const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// Per-prime seed collection; one eigenvalue system per form.
struct EigenSystem {
  std::map<std::uint64_t, HeckeSeed> seeds;
  Provenance provenance = Provenance::manual;

  bool has(std::uint64_t p) const { return seeds.count(p) != 0; }
  const HeckeSeed& seed_at(std::uint64_t p) const;
  void insert(HeckeSeed seed);
};

// λ(n) for n ≤ cutoff, built multiplicatively from per-prime data.
template <class T>
struct EigenTable {
  std::uint64_t cutoff = 0;
  std::vector<T> value;  // [0..cutoff], value[0] unused

  const T& at(std::uint64_t n) const {
    if (n == 0 || n > cutoff) throw std::out_of_range("EigenTable: index out of range");
    return value[n];
  }
};

// Generic multiplicative assembly: value(n) = Π value(p^{v_p(n)}) with the
// prime-power values supplied by the callback. Throws naming the first
// prime ≤ N the callback cannot serve.
template <class T, class PrimePowerFn>
std::vector<T> multiplicative_table(std::uint64_t n_max, PrimePowerFn&& prime_power) {
  std::vector<std::uint32_t> spf = smallest_prime_factor(n_max);
  std::vector<T> val(n_max + 1, T(0));
  if (n_max >= 1) val[1] = T(1);
  // cache of prime -> [value(p^0), value(p^1), ...]
  std::unordered_map<std::uint64_t, std::vector<T>> powers;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    std::uint64_t p = spf[n];
    std::uint64_t m = n;
    unsigned v = 0;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
    auto it = powers.find(p);
    if (it == powers.end()) it = powers.emplace(p, prime_power(p)).first;
    if (v >= it->second.size()) throw std::logic_error("multiplicative_table: power cache too short");
    val[n] = val[m] * it->second[v];
  }
  return val;
}

// Float-lane table. Needs a seed for every prime ≤ N.
EigenTable<double> extend_multiplicative(const EigenSystem& sys, std::uint64_t n_max);

// Exact lane; only defined when every seed is plain-rational (even parity),
// since odd-parity values at distinct primes multiply out of the rationals.
EigenTable<Rational> extend_multiplicative_exact(const EigenSystem& sys, std::uint64_t n_max);

// --- ingestion -------------------------------------------------------------

// CSV schema: header "p,n,mu,k", one record per row, integers in decimal.
// Duplicate (p, n) pairs are rejected with the offending row number.
std::vector<RawEigenRecord> parse_raw_csv(std::istream& in);

// Builds a system from raw records; every prime needs its n = 1 and n = 2
// rows with a consistent weight.
EigenSystem system_from_records(const std::vector<RawEigenRecord>& records);

EigenSystem ingest_csv(std::istream& in);
EigenSystem ingest_csv_file(const std::string& path);

}  // namespace siegel
