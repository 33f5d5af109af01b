#include "siegel/sampling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace siegel {

namespace {

double parse_angle(const std::string& tok) {
  if (tok == "pi") return M_PI;
  if (tok == "pi/2") return M_PI / 2.0;
  if (tok == "0") return 0.0;
  std::size_t pos = 0;
  double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw std::invalid_argument("bad angle token '" + tok + "'");
  return v;
}

std::string angle_token(double v) {
  if (v == M_PI) return "pi";
  if (v == M_PI / 2.0) return "pi/2";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

SamplingMeasure SamplingMeasure::parse(const std::string& spec) {
  SamplingMeasure m;
  if (spec == "uniform") {
    m.kind = Kind::uniform;
    return m;
  }
  if (spec == "weighted:sin2") {
    m.kind = Kind::sin2_weighted;
    return m;
  }
  if (spec == "weighted:st") {
    m.kind = Kind::weyl;
    return m;
  }
  if (spec == "allzero") {
    m.kind = Kind::all_zero;
    return m;
  }
  if (spec.rfind("pinned:", 0) == 0) {
    auto parts = split(spec.substr(7), ',');
    if (parts.size() != 2) throw std::invalid_argument("pinned measure needs two angles");
    m.kind = Kind::pinned;
    m.theta1 = parse_angle(parts[0]);
    m.theta2 = parse_angle(parts[1]);
    return m;
  }
  if (spec.rfind("atom:", 0) == 0) {
    auto parts = split(spec.substr(5), ',');
    if (parts.size() != 3) throw std::invalid_argument("atom measure needs two angles and a mass");
    m.kind = Kind::atom_mix;
    m.theta1 = parse_angle(parts[0]);
    m.theta2 = parse_angle(parts[1]);
    m.mass = std::stod(parts[2]);
    if (m.mass < 0.0 || m.mass > 1.0) throw std::invalid_argument("atom mass outside [0, 1]");
    return m;
  }
  throw std::invalid_argument("unknown measure spec '" + spec + "'");
}

std::string SamplingMeasure::spec() const {
  switch (kind) {
    case Kind::uniform: return "uniform";
    case Kind::sin2_weighted: return "weighted:sin2";
    case Kind::weyl: return "weighted:st";
    case Kind::all_zero: return "allzero";
    case Kind::pinned: return "pinned:" + angle_token(theta1) + "," + angle_token(theta2);
    case Kind::atom_mix: {
      std::ostringstream os;
      os.precision(17);
      os << "atom:" << angle_token(theta1) << "," << angle_token(theta2) << "," << mass;
      return os.str();
    }
  }
  return "uniform";
}

namespace {

double draw_sin2(Rng& rng) {
  // rejection against the sin² envelope; acceptance rate 1/2
  for (;;) {
    double theta = rng.uniform(0.0, M_PI);
    double s = std::sin(theta);
    if (rng.uniform01() < s * s) return theta;
  }
}

SatakePair draw_weyl(Rng& rng) {
  // rejection for the Weyl density (cosθ1 − cosθ2)² sin²θ1 sin²θ2 with the
  // flat envelope 4 on [0, π]²
  for (;;) {
    double t1 = rng.uniform(0.0, M_PI);
    double t2 = rng.uniform(0.0, M_PI);
    double d = std::cos(t1) - std::cos(t2);
    double s1 = std::sin(t1), s2 = std::sin(t2);
    double density = d * d * s1 * s1 * s2 * s2;
    if (4.0 * rng.uniform01() < density) return SatakePair{t1, t2};
  }
}

}  // namespace

SatakePair sample_angles(const SamplingMeasure& measure, Rng& rng) {
  switch (measure.kind) {
    case SamplingMeasure::Kind::uniform:
      return SatakePair{rng.uniform(0.0, M_PI), rng.uniform(0.0, M_PI)};
    case SamplingMeasure::Kind::sin2_weighted:
      return SatakePair{draw_sin2(rng), draw_sin2(rng)};
    case SamplingMeasure::Kind::weyl:
      return draw_weyl(rng);
    case SamplingMeasure::Kind::pinned:
      return SatakePair{measure.theta1, measure.theta2};
    case SamplingMeasure::Kind::atom_mix:
      if (rng.uniform01() < measure.mass) return SatakePair{measure.theta1, measure.theta2};
      return SatakePair{rng.uniform(0.0, M_PI), rng.uniform(0.0, M_PI)};
    case SamplingMeasure::Kind::all_zero:
      throw std::logic_error("all_zero measure has no angles");
  }
  throw std::logic_error("unreachable");
}

HeckeSeed sample_seed(const SamplingMeasure& measure, std::uint64_t p, Rng& rng) {
  if (measure.kind == SamplingMeasure::Kind::all_zero)
    return make_seed(p, Rational(0), Rational(0));
  return satake_to_seed(sample_angles(measure, rng), p);
}

EigenSystem sample_system(const SamplingMeasure& measure, const std::vector<std::uint64_t>& primes,
                          std::uint64_t rng_seed) {
  if (primes.empty()) throw std::invalid_argument("sample_system: no primes given");
  EigenSystem sys;
  sys.provenance = Provenance::satake_sampled;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Rng rng = Rng::substream(rng_seed, i);
    sys.insert(sample_seed(measure, primes[i], rng));
  }
  return sys;
}

}  // namespace siegel
