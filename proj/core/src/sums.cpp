#include "siegel/sums.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace siegel {

double loglog_slope(const std::vector<std::uint64_t>& xs, const std::vector<double>& sums) {
  if (xs.size() != sums.size() || xs.size() < 2)
    throw std::invalid_argument("loglog_slope: need at least two checkpoints");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double lx = std::log(static_cast<double>(xs[i]));
    double ly = std::log(std::max(std::fabs(sums[i]), 1.0));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double n = static_cast<double>(xs.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

PartialSumReport partial_sum_experiment(const EigenTable<double>& f, const EigenTable<double>& g,
                                        const std::vector<std::uint64_t>& checkpoints) {
  PartialSumReport out;
  if (checkpoints.empty()) return out;
  std::vector<std::uint64_t> cps = checkpoints;
  std::sort(cps.begin(), cps.end());
  if (cps.back() > f.cutoff || f.cutoff != g.cutoff)
    throw std::invalid_argument("partial_sum_experiment: tables too short for checkpoints");
  out.checkpoints = cps;
  out.sums.reserve(cps.size());
  double running = 0.0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= cps.back(); ++n) {
    running += f.value[n] * g.value[n];
    while (next < cps.size() && cps[next] == n) {
      out.sums.push_back(running);
      ++next;
    }
  }
  if (cps.size() >= 2) out.slope = loglog_slope(cps, out.sums);
  // through-origin least squares of S against x
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    double x = static_cast<double>(cps[i]);
    sxx += x * x;
    sxy += x * out.sums[i];
  }
  out.linear_coeff = sxx > 0 ? sxy / sxx : 0.0;
  return out;
}

}  // namespace siegel
