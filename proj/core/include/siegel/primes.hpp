#pragma once

#include <cstdint>
#include <vector>

namespace siegel {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// spf[m] = smallest prime factor of m for 2 <= m <= n
std::vector<std::uint32_t> smallest_prime_factor(std::uint64_t n);

// deterministic Miller-Rabin for 64-bit inputs
bool is_prime(std::uint64_t n);

std::uint64_t prime_count(std::uint64_t x);

}  // namespace siegel
