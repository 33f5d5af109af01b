#pragma once

#include "siegel/nonvanishing.hpp"
#include "siegel/system.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace siegel {

enum class ArithmeticMode { exact, floating };
const char* to_string(ArithmeticMode mode);
ArithmeticMode mode_from_string(const std::string& s);

// Echoed verbatim into every report so a report reproduces from its own
// header.
struct RunConfig {
  ArithmeticMode mode = ArithmeticMode::exact;
  double tol = 1e-9;
  std::uint64_t primes_up_to = 100;
  std::uint64_t cutoff = 10000;
  std::uint64_t rng_seed = 1;
  std::string measure = "uniform";
  std::string out_dir = ".";
  int workers = 0;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string content_hash(std::string_view bytes);

std::string to_json(const RunConfig& config);

// graded rationals travel as {"q": "num/den", "half_power": bool}
std::string to_json(const GradedRational& value);

std::string system_to_json(const EigenSystem& sys);
EigenSystem system_from_json(const std::string& text);
EigenSystem load_system(const std::string& path);
void save_system(const EigenSystem& sys, const std::string& path);

// anomaly replay: a JSON array of exact seed pairs
std::string seed_pairs_to_json(const std::vector<std::pair<HeckeSeed, HeckeSeed>>& pairs);
std::vector<std::pair<HeckeSeed, HeckeSeed>> seed_pairs_from_json(const std::string& text);

std::string sweep_report_to_json(const SweepReport& report);

// {"report": name, "config": {...}, "input_hash": ..., "payload": {...}}
std::string report_envelope(const std::string& name, const RunConfig& config,
                            const std::string& payload_json, std::string_view input_bytes = {});

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace siegel
