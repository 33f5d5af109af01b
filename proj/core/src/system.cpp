#include "siegel/system.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace siegel {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ingested: return "ingested";
    case Provenance::satake_sampled: return "satake-sampled";
    case Provenance::manual: return "manual";
  }
  return "manual";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "ingested") return Provenance::ingested;
  if (s == "satake-sampled") return Provenance::satake_sampled;
  if (s == "manual") return Provenance::manual;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

const HeckeSeed& EigenSystem::seed_at(std::uint64_t p) const {
  auto it = seeds.find(p);
  if (it == seeds.end())
    throw std::out_of_range("missing seed for prime " + std::to_string(p));
  return it->second;
}

void EigenSystem::insert(HeckeSeed seed) {
  std::uint64_t p = seed.p;
  if (!seeds.emplace(p, std::move(seed)).second)
    throw std::invalid_argument("duplicate seed for prime " + std::to_string(p));
}

namespace {

// prime-power values up to the largest exponent that fits under n_max
template <class T, class Fn>
auto power_vector(std::uint64_t p, std::uint64_t n_max, Fn&& lam) {
  int v_max = 0;
  for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
    ++v_max;
    if (pk > n_max / p) break;
  }
  return lam(v_max);
}

}  // namespace

EigenTable<double> extend_multiplicative(const EigenSystem& sys, std::uint64_t n_max) {
  EigenTable<double> table;
  table.cutoff = n_max;
  table.value = multiplicative_table<double>(n_max, [&](std::uint64_t p) {
    const HeckeSeed& seed = sys.seed_at(p);
    return power_vector<double>(p, n_max,
                                [&](int v_max) { return lambda_powers(real_view(seed), v_max); });
  });
  return table;
}

EigenTable<Rational> extend_multiplicative_exact(const EigenSystem& sys, std::uint64_t n_max) {
  EigenTable<Rational> table;
  table.cutoff = n_max;
  table.value = multiplicative_table<Rational>(n_max, [&](std::uint64_t p) {
    const HeckeSeed& seed = sys.seed_at(p);
    if (!seed.lam_p.is_zero() && seed.lam_p.parity != Parity::even)
      throw std::domain_error("exact table requires plain-rational seeds (prime " +
                              std::to_string(p) + " has odd parity)");
    return power_vector<Rational>(p, n_max, [&](int v_max) {
      std::vector<GradedRational> lam = lambda_powers(seed, v_max);
      std::vector<Rational> out;
      out.reserve(lam.size());
      for (const auto& g : lam) out.push_back(g.q);
      return out;
    });
  });
  return table;
}

std::vector<RawEigenRecord> parse_raw_csv(std::istream& in) {
  std::vector<RawEigenRecord> records;
  std::set<std::pair<std::uint64_t, int>> seen;
  std::string line;
  int row = 0;
  bool header_checked = false;
  while (std::getline(in, line)) {
    ++row;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    if (!header_checked) {
      std::string squeezed;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
      if (squeezed != "p,n,mu,k")
        throw std::invalid_argument("row 1: expected header 'p,n,mu,k', got '" + line + "'");
      header_checked = true;
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4)
      throw std::invalid_argument("row " + std::to_string(row) + ": expected 4 fields");
    RawEigenRecord rec;
    try {
      rec.p = std::stoull(fields[0]);
      rec.n = std::stoi(fields[1]);
      rec.mu = Integer(fields[2]);
      rec.k = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw std::invalid_argument("row " + std::to_string(row) + ": malformed integer field");
    }
    if (!seen.emplace(rec.p, rec.n).second)
      throw std::invalid_argument("row " + std::to_string(row) + ": duplicate (p, n) = (" +
                                  std::to_string(rec.p) + ", " + std::to_string(rec.n) + ")");
    if (!is_prime(rec.p))
      throw std::invalid_argument("row " + std::to_string(row) + ": p is not prime");
    if (rec.n < 1 || rec.k < 4)
      throw std::invalid_argument("row " + std::to_string(row) + ": need n >= 1 and k >= 4");
    records.push_back(std::move(rec));
  }
  return records;
}

EigenSystem system_from_records(const std::vector<RawEigenRecord>& records) {
  std::map<std::uint64_t, std::map<int, RawEigenRecord>> by_prime;
  for (const auto& rec : records) by_prime[rec.p][rec.n] = rec;
  EigenSystem sys;
  sys.provenance = Provenance::ingested;
  for (auto& [p, rows] : by_prime) {
    auto r1 = rows.find(1);
    auto r2 = rows.find(2);
    if (r1 == rows.end() || r2 == rows.end())
      throw std::invalid_argument("prime " + std::to_string(p) +
                                  ": seeds need both the n=1 and n=2 records");
    if (r1->second.k != r2->second.k)
      throw std::invalid_argument("prime " + std::to_string(p) + ": inconsistent weight k");
    sys.insert(make_seed(p, normalize(r1->second), normalize(r2->second)));
  }
  return sys;
}

EigenSystem ingest_csv(std::istream& in) { return system_from_records(parse_raw_csv(in)); }

EigenSystem ingest_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return ingest_csv(in);
}

}  // namespace siegel
