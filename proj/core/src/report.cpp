#include "siegel/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace siegel {

using nlohmann::json;

const char* to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::exact ? "exact" : "float";
}

ArithmeticMode mode_from_string(const std::string& s) {
  if (s == "exact") return ArithmeticMode::exact;
  if (s == "float") return ArithmeticMode::floating;
  throw std::invalid_argument("unknown arithmetic mode '" + s + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string content_hash(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

namespace {

json config_json(const RunConfig& c) {
  return json{{"mode", to_string(c.mode)},   {"tol", c.tol},
              {"primes_up_to", c.primes_up_to}, {"cutoff", c.cutoff},
              {"rng_seed", c.rng_seed},      {"measure", c.measure},
              {"out", c.out_dir},            {"workers", c.workers}};
}

json graded_json(const GradedRational& v) {
  return json{{"q", to_string(v.q)}, {"half_power", v.parity == Parity::odd}};
}

GradedRational graded_from(const json& j) {
  return GradedRational{parse_rational(j.at("q").get<std::string>()),
                        j.at("half_power").get<bool>() ? Parity::odd : Parity::even};
}

json seed_json(const HeckeSeed& s) {
  json j{{"p", s.p}, {"lam_p", graded_json(s.lam_p)}, {"lam_p2", graded_json(s.lam_p2)}};
  if (s.angles) {
    j["theta1"] = s.angles->theta1;
    j["theta2"] = s.angles->theta2;
  }
  return j;
}

HeckeSeed seed_from(const json& j) {
  HeckeSeed s = make_seed(j.at("p").get<std::uint64_t>(), graded_from(j.at("lam_p")),
                          graded_from(j.at("lam_p2")));
  if (j.contains("theta1"))
    s.angles = SatakePair{j.at("theta1").get<double>(), j.at("theta2").get<double>()};
  return s;
}

}  // namespace

std::string to_json(const RunConfig& config) { return config_json(config).dump(2); }

std::string to_json(const GradedRational& value) { return graded_json(value).dump(); }

std::string system_to_json(const EigenSystem& sys) {
  json seeds = json::array();
  for (const auto& [p, seed] : sys.seeds) seeds.push_back(seed_json(seed));
  return json{{"provenance", to_string(sys.provenance)}, {"seeds", seeds}}.dump(2);
}

EigenSystem system_from_json(const std::string& text) {
  json j = json::parse(text);
  EigenSystem sys;
  sys.provenance = provenance_from_string(j.at("provenance").get<std::string>());
  for (const auto& sj : j.at("seeds")) sys.insert(seed_from(sj));
  return sys;
}

EigenSystem load_system(const std::string& path) { return system_from_json(read_file(path)); }

void save_system(const EigenSystem& sys, const std::string& path) {
  write_file(path, system_to_json(sys));
}

std::string seed_pairs_to_json(const std::vector<std::pair<HeckeSeed, HeckeSeed>>& pairs) {
  json arr = json::array();
  for (const auto& [f, g] : pairs)
    arr.push_back(json{{"p", f.p}, {"F", seed_json(f)}, {"G", seed_json(g)}});
  return arr.dump(2);
}

std::vector<std::pair<HeckeSeed, HeckeSeed>> seed_pairs_from_json(const std::string& text) {
  std::vector<std::pair<HeckeSeed, HeckeSeed>> out;
  for (const auto& j : json::parse(text))
    out.emplace_back(seed_from(j.at("F")), seed_from(j.at("G")));
  return out;
}

std::string sweep_report_to_json(const SweepReport& report) {
  json hist = json::object();
  for (int n = 1; n <= report.max_n; ++n)
    if (report.histogram[n] > 0) hist[std::to_string(n)] = report.histogram[n];
  json tags = json::object();
  for (const auto& [tag, count] : report.tag_counts) tags[to_string(tag)] = count;
  json tag_max = json::object();
  for (const auto& [tag, n] : report.tag_max_index) tag_max[to_string(tag)] = n;
  return json{{"trials", report.trials},
              {"max_n", report.max_n},
              {"histogram", hist},
              {"max_index", report.max_index},
              {"escalations", report.escalations},
              {"tag_counts", tags},
              {"tag_max_index", tag_max},
              {"anomalies", json::parse(seed_pairs_to_json(report.anomalies))}}
      .dump(2);
}

std::string report_envelope(const std::string& name, const RunConfig& config,
                            const std::string& payload_json, std::string_view input_bytes) {
  json j{{"report", name},
         {"config", config_json(config)},
         {"input_hash", content_hash(input_bytes)},
         {"payload", json::parse(payload_json)}};
  return j.dump(2);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace siegel
