#pragma once

#include "siegel/system.hpp"

#include <cstdint>
#include <vector>

namespace siegel {

// S(x) = Σ_{n ≤ x} λ_F(n)λ_G(n) at each checkpoint, the least-squares slope
// of log|S| against log x, and the through-origin linear coefficient (the
// empirical stand-in for the residue when F = G).
struct PartialSumReport {
  std::vector<std::uint64_t> checkpoints;
  std::vector<double> sums;
  double slope = 0.0;
  double linear_coeff = 0.0;
};

PartialSumReport partial_sum_experiment(const EigenTable<double>& f, const EigenTable<double>& g,
                                        const std::vector<std::uint64_t>& checkpoints);

// least-squares slope of log(max(|S|, 1)) against log(x)
double loglog_slope(const std::vector<std::uint64_t>& xs, const std::vector<double>& sums);

}  // namespace siegel
