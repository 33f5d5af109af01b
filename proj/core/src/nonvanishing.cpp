#include "siegel/nonvanishing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace siegel {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::trivial_low_index: return "TRIVIAL_LOW_INDEX";
    case CaseTag::all_zero: return "ALL_ZERO";
    case CaseTag::f_zero_g2_nonzero: return "F_ZERO_G2_NONZERO";
    case CaseTag::f_zero_g1_nonzero: return "F_ZERO_G1_NONZERO";
    case CaseTag::mixed_f2_g1: return "MIXED_F2_G1";
    case CaseTag::p2_boundary: return "P2_BOUNDARY";
  }
  return "?";
}

int case_bound(CaseTag tag) {
  switch (tag) {
    case CaseTag::trivial_low_index: return 2;
    case CaseTag::all_zero: return 4;
    case CaseTag::f_zero_g2_nonzero: return 6;
    case CaseTag::f_zero_g1_nonzero: return 10;
    case CaseTag::mixed_f2_g1: return 14;
    case CaseTag::p2_boundary: return 10;
  }
  return 14;
}

namespace {

// classification on the four zero-flags; lam_g_sq_half only matters for the
// mixed branch at p = 2
CaseTag classify_flags(std::uint64_t p, bool zf1, bool zf2, bool zg1, bool zg2,
                       bool f_sq_half, bool g_sq_half) {
  bool pre = (zf1 || zg1) && (zf2 || zg2);
  if (!pre) return CaseTag::trivial_low_index;
  if (zf1 && zg1) {
    if (zf2 && zg2) return CaseTag::all_zero;
    return CaseTag::f_zero_g2_nonzero;  // exactly one of λ(p²) survives
  }
  // exactly one λ(p) vanishes; relabel so it is the F side
  bool g_side_zero = zg1;
  bool zF2 = g_side_zero ? zg2 : zf2;
  bool zG2 = g_side_zero ? zf2 : zg2;
  bool sq_half = g_side_zero ? f_sq_half : g_sq_half;
  if (zF2) return CaseTag::f_zero_g1_nonzero;
  if (!zG2) return CaseTag::trivial_low_index;  // precondition cannot hold here
  if (p == 2 && sq_half) return CaseTag::p2_boundary;
  return CaseTag::mixed_f2_g1;
}

}  // namespace

CaseTag classify_case(const HeckeSeed& f, const HeckeSeed& g) {
  if (f.p != g.p) throw std::invalid_argument("classify_case: seeds at different primes");
  auto sq_half = [](const HeckeSeed& s) {
    return gmul(s.lam_p, s.lam_p, s.p).q == ratio(1, 2);
  };
  return classify_flags(f.p, f.lam_p.is_zero(), f.lam_p2.is_zero(), g.lam_p.is_zero(),
                        g.lam_p2.is_zero(), sq_half(f), sq_half(g));
}

CaseTag classify_case_real(const HeckeSeed& f, const HeckeSeed& g, double tol) {
  if (f.p != g.p) throw std::invalid_argument("classify_case: seeds at different primes");
  RealSeed rf = real_view(f), rg = real_view(g);
  auto z = [&](double x) { return std::fabs(x) <= tol; };
  auto sq_half = [&](double a) { return std::fabs(a * a - 0.5) <= tol; };
  return classify_flags(f.p, z(rf.lam_p), z(rf.lam_p2), z(rg.lam_p), z(rg.lam_p2),
                        sq_half(rf.lam_p), sq_half(rg.lam_p));
}

VanishingPattern vanishing_pattern_scan(const HeckeSeed& seed, int window) {
  if (window < 1 || window > 200)
    throw std::invalid_argument("vanishing_pattern_scan: window must lie in [1, 200]");
  std::vector<GradedRational> lam = lambda_powers(seed, window);
  VanishingPattern out;
  out.window = window;
  out.lam_p_zero = seed.lam_p.is_zero();
  std::vector<bool> zero(static_cast<std::size_t>(window) + 1, false);
  for (int n = 1; n <= window; ++n) {
    zero[n] = lam[n].is_zero();
    if (zero[n]) out.zero_exponents.push_back(n);
  }
  out.all_odd_vanish = true;
  for (int n = 1; n <= window; n += 2)
    if (!zero[n]) {
      out.all_odd_vanish = false;
      break;
    }
  for (int t = 0; t + 4 <= window; ++t) {
    if (zero[t + 1] && zero[t + 2] && zero[t + 3] && zero[t + 4]) {
      out.four_consecutive_at = t;
      break;
    }
  }
  if (!out.lam_p_zero) {
    for (int m = 0; 2 * (m + 3) + 1 <= window; ++m) {
      if (zero[2 * m + 1] && zero[2 * m + 3] && zero[2 * m + 5] && zero[2 * m + 7]) {
        out.odd_run_at = m;
        break;
      }
    }
    for (int m = 1; 2 * (m + 3) <= window; ++m) {
      if (zero[2 * m] && zero[2 * m + 2] && zero[2 * m + 4] && zero[2 * m + 6]) {
        out.even_run_at = m;
        break;
      }
    }
  }
  return out;
}

NonvanishWitness first_joint_nonvanishing(const HeckeSeed& f, const HeckeSeed& g, int max_n) {
  if (f.p != g.p) throw std::invalid_argument("first_joint_nonvanishing: prime mismatch");
  std::vector<GradedRational> lf = lambda_powers(f, max_n);
  std::vector<GradedRational> lg = lambda_powers(g, max_n);
  NonvanishWitness w;
  w.tag = classify_case(f, g);
  for (int n = 1; n <= max_n; ++n) {
    if (lf[n].is_zero() || lg[n].is_zero()) continue;
    w.found = true;
    w.n = n;
    w.product = gmul(lf[n], lg[n], f.p);
    w.product_value = w.product.to_double(f.p);
    return w;
  }
  return w;
}

NonvanishWitness first_joint_nonvanishing_real(const HeckeSeed& f, const HeckeSeed& g, int max_n,
                                               double tol, double escalate_tol) {
  if (f.p != g.p) throw std::invalid_argument("first_joint_nonvanishing: prime mismatch");
  std::vector<double> lf = lambda_powers(real_view(f), max_n);
  std::vector<double> lg = lambda_powers(real_view(g), max_n);
  bool near_zero = false;
  for (int n = 1; n <= max_n && !near_zero; ++n)
    near_zero = std::fabs(lf[n] * lg[n]) <= escalate_tol;
  if (near_zero) {
    // a float zero test this close is not trustworthy; the seeds are dyadic
    // rationals, so the exact lane settles it
    NonvanishWitness w = first_joint_nonvanishing(f, g, max_n);
    w.escalated = true;
    return w;
  }
  NonvanishWitness w;
  w.tag = classify_case_real(f, g, tol);
  for (int n = 1; n <= max_n; ++n) {
    double prod = lf[n] * lg[n];
    if (std::fabs(prod) > tol) {
      w.found = true;
      w.n = n;
      w.product_value = prod;
      return w;
    }
  }
  return w;
}

SweepReport sweep_nonvanishing(const SweepConfig& config) {
  SweepReport report;
  report.trials = config.trials;
  report.max_n = config.max_n;
  report.histogram.assign(static_cast<std::size_t>(config.max_n) + 1, 0);
  if (config.trials == 0) return report;
  if (config.primes.empty()) throw std::invalid_argument("sweep: no primes configured");

  unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));

  std::vector<SweepReport> shards(workers);
  for (auto& s : shards) {
    s.max_n = config.max_n;
    s.histogram.assign(static_cast<std::size_t>(config.max_n) + 1, 0);
  }

  auto run_shard = [&](unsigned shard) {
    SweepReport& local = shards[shard];
    for (std::uint64_t t = shard; t < config.trials; t += workers) {
      Rng rng = Rng::substream(config.rng_seed, t);
      std::uint64_t p = config.primes[t % config.primes.size()];
      HeckeSeed f = sample_seed(config.measure, p, rng);
      HeckeSeed g = sample_seed(config.measure, p, rng);
      NonvanishWitness w =
          first_joint_nonvanishing_real(f, g, config.max_n, config.tol, config.escalate_tol);
      if (w.escalated) ++local.escalations;
      ++local.tag_counts[w.tag];
      if (w.found) {
        ++local.histogram[w.n];
        local.max_index = std::max(local.max_index, w.n);
        auto it = local.tag_max_index.find(w.tag);
        if (it == local.tag_max_index.end())
          local.tag_max_index[w.tag] = w.n;
        else
          it->second = std::max(it->second, w.n);
      } else {
        local.anomalies.emplace_back(std::move(f), std::move(g));
      }
    }
  };

  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run_shard, i);
    for (auto& th : pool) th.join();
  }

  for (const auto& s : shards) {
    for (int n = 1; n <= config.max_n; ++n) report.histogram[n] += s.histogram[n];
    report.max_index = std::max(report.max_index, s.max_index);
    report.escalations += s.escalations;
    for (const auto& [tag, c] : s.tag_counts) report.tag_counts[tag] += c;
    for (const auto& [tag, n] : s.tag_max_index) {
      auto it = report.tag_max_index.find(tag);
      if (it == report.tag_max_index.end())
        report.tag_max_index[tag] = n;
      else
        it->second = std::max(it->second, n);
    }
    report.anomalies.insert(report.anomalies.end(), s.anomalies.begin(), s.anomalies.end());
  }
  return report;
}

}  // namespace siegel
