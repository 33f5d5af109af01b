#pragma once

#include "siegel/hecke.hpp"
#include "siegel/sampling.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace siegel {

// Branches of the joint non-vanishing case analysis for seed pairs with
// λ_F(p)λ_G(p) = 0 = λ_F(p²)λ_G(p²); pairs outside that precondition have a
// nonzero product already at n ≤ 2 and get the trivial tag. The F/G labels
// are up to swapping the pair.
enum class CaseTag {
  trivial_low_index,   // nonzero product at n = 1 or 2
  all_zero,            // λ(p) = λ(p²) = 0 on both sides
  f_zero_g2_nonzero,   // F fully zero, λ_G(p) = 0, λ_G(p²) ≠ 0
  f_zero_g1_nonzero,   // F fully zero side vs λ_G(p) ≠ 0
  mixed_f2_g1,         // λ_F(p) = 0, λ_F(p²) ≠ 0, λ_G(p) ≠ 0, λ_G(p²) = 0
  p2_boundary,         // the mixed branch at p = 2 with λ_G(2)² = 1/2
};

const char* to_string(CaseTag tag);

// First non-vanishing index guaranteed by the case analysis.
int case_bound(CaseTag tag);

CaseTag classify_case(const HeckeSeed& f, const HeckeSeed& g);
CaseTag classify_case_real(const HeckeSeed& f, const HeckeSeed& g, double tol);

// Zero-pattern facts along λ(p^n), n ≤ window (exact arithmetic):
//  - the odd-exponent values all vanish exactly when λ(p) = 0,
//  - no four consecutive exponents vanish,
//  - when λ(p) ≠ 0 there is no run of four zeros over consecutive odd
//    exponents, nor over consecutive even exponents 2m, 2m+2, 2m+4, 2m+6
//    with m ≥ 1.
struct VanishingPattern {
  int window = 0;
  bool lam_p_zero = false;
  bool all_odd_vanish = false;
  std::vector<int> zero_exponents;
  std::optional<int> four_consecutive_at;  // t with zeros at t+1..t+4
  std::optional<int> odd_run_at;           // m with zeros at 2(m+i)+1, i = 0..3
  std::optional<int> even_run_at;          // m ≥ 1 with zeros at 2(m+i), i = 0..3
};

VanishingPattern vanishing_pattern_scan(const HeckeSeed& seed, int window);

struct NonvanishWitness {
  bool found = false;
  int n = 0;
  GradedRational product;       // exact when the exact lane decided
  double product_value = 0.0;   // float projection
  CaseTag tag = CaseTag::trivial_low_index;
  bool escalated = false;       // float lane handed the pair to exact arithmetic
};

// Smallest n ≤ max_n with λ_F(p^n)λ_G(p^n) ≠ 0. Absence is reported via
// found = false, never thrown; any valid pair has an index ≤ 14.
NonvanishWitness first_joint_nonvanishing(const HeckeSeed& f, const HeckeSeed& g, int max_n = 14);

// Float lane. If any product within the window lands inside escalate_tol of
// zero the pair is recomputed exactly (doubles convert to rationals without
// loss), so borderline zeros are never misread.
NonvanishWitness first_joint_nonvanishing_real(const HeckeSeed& f, const HeckeSeed& g,
                                               int max_n = 14, double tol = 1e-9,
                                               double escalate_tol = 1e-6);

struct SweepConfig {
  SamplingMeasure measure;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 97};
  std::uint64_t trials = 0;
  std::uint64_t rng_seed = 1;
  int max_n = 14;
  double tol = 1e-9;
  double escalate_tol = 1e-6;
  int workers = 0;  // 0 = hardware concurrency
};

struct SweepReport {
  std::uint64_t trials = 0;
  int max_n = 14;
  std::vector<std::uint64_t> histogram;  // histogram[n] for n = 1..max_n
  int max_index = 0;
  std::uint64_t escalations = 0;
  std::map<CaseTag, std::uint64_t> tag_counts;
  std::map<CaseTag, int> tag_max_index;
  // pairs with no index ≤ max_n, kept in full for replay
  std::vector<std::pair<HeckeSeed, HeckeSeed>> anomalies;
};

// Monte-Carlo sweep over sampled pairs; per-trial rng substreams make the
// report independent of the worker count, and histogram merging is plain
// addition.
SweepReport sweep_nonvanishing(const SweepConfig& config);

}  // namespace siegel
