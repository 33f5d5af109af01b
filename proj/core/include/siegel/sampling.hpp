#pragma once

#include "siegel/rng.hpp"
#include "siegel/system.hpp"

#include <string>
#include <vector>

namespace siegel {

// How per-prime angle pairs are drawn. All kinds except all_zero yield
// Satake-mode seeds; all_zero emits the free-mode seed (0, 0) used to
// exercise the fully degenerate branch.
//
// "weighted:st" is the USp(4) Weyl measure (cosθ1 − cosθ2)² sin²θ1 sin²θ2,
// the Sato-Tate-style choice: under it the trace u + v has mean 0 and
// second moment 1, matching the prime-sum normalization the hypothesis
// class assumes. "weighted:sin2" is the plain product density sin²θ1 sin²θ2.
struct SamplingMeasure {
  enum class Kind { uniform, sin2_weighted, weyl, pinned, atom_mix, all_zero };
  Kind kind = Kind::uniform;
  double theta1 = 0.0;  // pinned point or atom location
  double theta2 = 0.0;
  double mass = 0.0;  // atom mass for atom_mix

  // "uniform" | "weighted:st" | "weighted:sin2" | "pinned:<t1>,<t2>" |
  // "atom:<t1>,<t2>,<mass>" | "allzero"; angle tokens accept plain doubles
  // plus "pi" and "pi/2".
  static SamplingMeasure parse(const std::string& spec);
  std::string spec() const;
};

SatakePair sample_angles(const SamplingMeasure& measure, Rng& rng);
HeckeSeed sample_seed(const SamplingMeasure& measure, std::uint64_t p, Rng& rng);

// Independent per-prime seeds; deterministic under a fixed rng seed and
// independent of any worker layout.
EigenSystem sample_system(const SamplingMeasure& measure, const std::vector<std::uint64_t>& primes,
                          std::uint64_t rng_seed);

}  // namespace siegel
