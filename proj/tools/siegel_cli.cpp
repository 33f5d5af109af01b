// siegel: batch front door for the eigenvalue machinery. Subcommands map
// one-to-one onto library operations; this file only parses flags, moves
// bytes, and sets exit codes (0 ok, 2 input error, 3 anomaly detected).

#include <CLI11.hpp>
#include <json.hpp>

#include "siegel/dirichlet.hpp"
#include "siegel/fpoly.hpp"
#include "siegel/gamma.hpp"
#include "siegel/gf.hpp"
#include "siegel/nonvanishing.hpp"
#include "siegel/report.hpp"
#include "siegel/sums.hpp"
#include "siegel/signs.hpp"

#include <filesystem>
#include <iostream>

using namespace siegel;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAnomaly = 3;

std::string out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

json graded_payload(const GradedRational& v, std::uint64_t p) {
  return json{{"q", to_string(v.q)}, {"half_power", v.parity == Parity::odd}, {"value", v.to_double(p)}};
}

bool exact_capable(const EigenSystem& sys) {
  for (const auto& [p, seed] : sys.seeds)
    if (!seed.lam_p.is_zero() && seed.lam_p.parity != Parity::even) return false;
  return true;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t cutoff) {
  std::vector<std::uint64_t> cps;
  for (std::uint64_t x = 1000; x < cutoff; x *= 4) cps.push_back(x);
  cps.push_back(cutoff);
  return cps;
}

int cmd_ingest(const RunConfig& cfg, const std::string& csv_path) {
  std::string bytes = read_file(csv_path);
  EigenSystem sys = ingest_csv_file(csv_path);
  std::string path = out_path(cfg, "system.json");
  save_system(sys, path);
  json payload{{"seeds", sys.seeds.size()}, {"system_file", path}};
  write_file(out_path(cfg, "ingest.json"),
             report_envelope("ingest", cfg, payload.dump(), bytes));
  std::cout << "ingested " << sys.seeds.size() << " seeds -> " << path << "\n";
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, const std::string& name) {
  EigenSystem sys = sample_system(SamplingMeasure::parse(cfg.measure),
                                  primes_up_to(cfg.primes_up_to), cfg.rng_seed);
  std::string path = out_path(cfg, name);
  save_system(sys, path);
  std::cout << "sampled " << sys.seeds.size() << " seeds -> " << path << "\n";
  return kExitOk;
}

int cmd_recur(const RunConfig& cfg, const std::string& seed_file, std::uint64_t prime, int n_max) {
  std::string bytes = read_file(seed_file);
  EigenSystem sys = system_from_json(bytes);
  json per_prime = json::object();
  for (const auto& [p, seed] : sys.seeds) {
    if (prime != 0 && p != prime) continue;
    auto lam = lambda_powers(seed, n_max);
    json rows = json::array();
    for (int n = 0; n <= n_max; ++n) rows.push_back(graded_payload(lam[n], p));
    per_prime[std::to_string(p)] = rows;
    std::cout << "p=" << p << ":";
    for (int n = 0; n <= n_max; ++n) std::cout << " " << lam[n].to_double(p);
    std::cout << "\n";
  }
  if (per_prime.empty()) throw std::invalid_argument("no matching prime in the seed file");
  json payload{{"n_max", n_max}, {"lambda", per_prime}};
  write_file(out_path(cfg, "recur.json"), report_envelope("recur", cfg, payload.dump(), bytes));
  return kExitOk;
}

int cmd_gf(const RunConfig& cfg, const std::string& seed_file, std::uint64_t prime, int terms) {
  std::string bytes = read_file(seed_file);
  EigenSystem sys = system_from_json(bytes);
  const HeckeSeed& seed = sys.seed_at(prime);
  json payload{{"p", prime}, {"terms", terms}};
  if (cfg.mode == ArithmeticMode::exact) {
    RationalGF<Rational> gf = local_spin_gf(seed);
    auto series = series_coeffs(gf, terms);
    json num = json::array(), den = json::array(), coeffs = json::array();
    for (const auto& c : gf.num) num.push_back(to_string(c));
    for (const auto& c : gf.den) den.push_back(to_string(c));
    for (const auto& c : series) coeffs.push_back(to_string(c));
    payload["num"] = num;
    payload["den"] = den;
    payload["series"] = coeffs;
  } else {
    RationalGF<double> gf = local_spin_gf_real(seed);
    payload["num"] = gf.num;
    payload["den"] = gf.den;
    payload["series"] = series_coeffs(gf, terms);
  }
  write_file(out_path(cfg, "gf.json"), report_envelope("gf", cfg, payload.dump(), bytes));
  std::cout << "wrote " << out_path(cfg, "gf.json") << "\n";
  return kExitOk;
}

int cmd_hadamard(const RunConfig& cfg, const std::string& file_f, const std::string& file_g,
                 std::uint64_t prime, int depth) {
  std::string bytes = read_file(file_f) + read_file(file_g);
  EigenSystem sysF = system_from_json(read_file(file_f));
  EigenSystem sysG = system_from_json(read_file(file_g));
  const HeckeSeed& f = sysF.seed_at(prime);
  const HeckeSeed& g = sysG.seed_at(prime);
  json payload{{"p", prime}, {"depth", depth}};
  if (cfg.mode == ArithmeticMode::exact) {
    LocalRankinFactor<Rational> fac = local_rankin_factor(f, g);
    json gp = json::array(), den = json::array();
    for (const auto& c : fac.gp) gp.push_back(to_string(c));
    for (const auto& c : fac.den) den.push_back(to_string(c));
    payload["gp"] = gp;
    payload["den"] = den;
    Rational res = identity_residual(f, g, depth);
    payload["residual"] = to_string(res);
    payload["residual_zero"] = res == 0;
  } else {
    LocalRankinFactor<double> fac = local_rankin_factor_real(f, g);
    payload["gp"] = fac.gp;
    payload["den"] = fac.den;
    payload["residual"] = identity_residual_real(f, g, depth);
  }
  if (f.angles && g.angles) {
    LocalRankinFactor<double> fac = local_rankin_factor_real(f, g);
    if (fac.den_roots) {
      json roots = json::array();
      for (const auto& [r, m] : *fac.den_roots)
        roots.push_back(json{{"re", r.real()}, {"im", r.imag()}, {"mult", m}});
      payload["den_roots"] = roots;
    }
  }
  write_file(out_path(cfg, "hadamard.json"), report_envelope("hadamard", cfg, payload.dump(), bytes));
  std::cout << "wrote " << out_path(cfg, "hadamard.json") << "\n";
  return kExitOk;
}

int cmd_nonvanish_replay(const RunConfig& cfg, const std::string& replay_path, int max_n) {
  std::string bytes = read_file(replay_path);
  auto pairs = seed_pairs_from_json(bytes);
  json rows = json::array();
  std::uint64_t unresolved = 0;
  for (const auto& [f, g] : pairs) {
    NonvanishWitness w = first_joint_nonvanishing(f, g, max_n);  // exact lane
    if (!w.found) ++unresolved;
    rows.push_back(json{{"p", f.p},
                        {"found", w.found},
                        {"n", w.n},
                        {"product", graded_payload(w.product, f.p)},
                        {"case", to_string(w.tag)}});
  }
  json payload{{"pairs", pairs.size()}, {"unresolved", unresolved}, {"witnesses", rows}};
  write_file(out_path(cfg, "nonvanish_replay.json"),
             report_envelope("nonvanish-replay", cfg, payload.dump(), bytes));
  std::cout << "replayed " << pairs.size() << " pairs, unresolved " << unresolved << "\n";
  return unresolved == 0 ? kExitOk : kExitAnomaly;
}

int cmd_nonvanish(const RunConfig& cfg, std::uint64_t trials, int max_n,
                  const std::vector<std::uint64_t>& primes) {
  SweepConfig sweep;
  sweep.measure = SamplingMeasure::parse(cfg.measure);
  if (!primes.empty()) sweep.primes = primes;
  sweep.trials = trials;
  sweep.rng_seed = cfg.rng_seed;
  sweep.max_n = max_n;
  sweep.tol = cfg.tol;
  sweep.workers = cfg.workers;
  SweepReport rep = sweep_nonvanishing(sweep);
  write_file(out_path(cfg, "nonvanish.json"),
             report_envelope("nonvanish-sweep", cfg, sweep_report_to_json(rep)));
  std::cout << "trials=" << rep.trials << " max_index=" << rep.max_index
            << " anomalies=" << rep.anomalies.size() << "\n";
  if (!rep.anomalies.empty()) {
    std::string replay = out_path(cfg, "nonvanish_anomalies.json");
    write_file(replay, seed_pairs_to_json(rep.anomalies));
    std::cerr << json{{"error", "joint non-vanishing anomaly"},
                      {"count", rep.anomalies.size()},
                      {"replay", replay}}
                     .dump()
              << "\n";
    return kExitAnomaly;
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, const std::string& seed_file, std::uint64_t prime, int window) {
  std::string bytes = read_file(seed_file);
  EigenSystem sys = system_from_json(bytes);
  VanishingPattern pat = vanishing_pattern_scan(sys.seed_at(prime), window);
  json payload{{"p", prime},
               {"window", pat.window},
               {"lam_p_zero", pat.lam_p_zero},
               {"all_odd_vanish", pat.all_odd_vanish},
               {"zero_exponents", pat.zero_exponents}};
  payload["four_consecutive_at"] =
      pat.four_consecutive_at ? json(*pat.four_consecutive_at) : json(nullptr);
  payload["odd_run_at"] = pat.odd_run_at ? json(*pat.odd_run_at) : json(nullptr);
  payload["even_run_at"] = pat.even_run_at ? json(*pat.even_run_at) : json(nullptr);
  write_file(out_path(cfg, "scan.json"), report_envelope("scan", cfg, payload.dump(), bytes));
  std::cout << "zeros<=window: " << pat.zero_exponents.size() << "\n";
  return kExitOk;
}

int cmd_lseries(const RunConfig& cfg, const std::string& file_f, const std::string& file_g) {
  std::string bytes = read_file(file_f) + read_file(file_g);
  EigenSystem sysF = system_from_json(read_file(file_f));
  EigenSystem sysG = system_from_json(read_file(file_g));
  std::uint64_t n = cfg.cutoff;
  json payload{{"cutoff", n}};

  // per-prime residuals of the local factor identity, up to --primes-up-to
  json residuals = json::array();
  double residual_max = 0.0;
  for (std::uint64_t p : primes_up_to(std::min<std::uint64_t>(cfg.primes_up_to, n))) {
    double r = identity_residual_real(sysF.seed_at(p), sysG.seed_at(p), 40);
    residual_max = std::max(residual_max, r);
    residuals.push_back(json{{"p", p}, {"residual", r}});
  }
  payload["per_prime_residuals"] = residuals;
  payload["per_prime_residual_max"] = residual_max;

  // truncated Euler-product envelope monitor for g(s), A = 16
  {
    RankinFactors<double> mon =
        rankin_factors_real(sysF, sysG, std::min<std::uint64_t>(cfg.primes_up_to, n));
    json curve = json::array();
    for (double sigma : {2.0, 1.5, 1.0, 0.75, 0.6}) {
      GBoundCheck chk = g_bound_check(mon, sigma, 16.0, 1e6);
      curve.push_back(json{{"sigma", sigma},
                           {"value", chk.value},
                           {"bound", chk.bound},
                           {"ratio", chk.ratio},
                           {"tail_bound", chk.tail_bound}});
    }
    payload["g_bound"] = curve;
  }
  std::string csv = "n,coeff\n";
  bool exact = cfg.mode == ArithmeticMode::exact && exact_capable(sysF) && exact_capable(sysG);
  if (exact) {
    EigenTable<Rational> f = extend_multiplicative_exact(sysF, n);
    EigenTable<Rational> g = extend_multiplicative_exact(sysG, n);
    DirichletSeries<Rational> lfg = coeffs_product(f, g);
    RankinFactors<Rational> factors = rankin_factors(sysF, sysG, n);
    DirichletSeries<Rational> conv =
        dirichlet_convolve(coeffs_g(factors, n), coeffs_rankin(factors, n));
    payload["identity_residual"] = to_string(max_abs_difference(lfg, conv));
    payload["exact"] = true;
    for (std::uint64_t i = 1; i <= n; ++i)
      csv += std::to_string(i) + "," + to_string(lfg.coeff[i]) + "\n";
  } else {
    EigenTable<double> f = extend_multiplicative(sysF, n);
    EigenTable<double> g = extend_multiplicative(sysG, n);
    DirichletSeries<double> lfg = coeffs_product(f, g);
    RankinFactors<double> factors = rankin_factors_real(sysF, sysG, n);
    DirichletSeries<double> conv =
        dirichlet_convolve(coeffs_g(factors, n), coeffs_rankin(factors, n));
    payload["identity_residual"] = max_scaled_difference(lfg, conv);
    payload["exact"] = false;
    for (std::uint64_t i = 1; i <= n; ++i)
      csv += std::to_string(i) + "," + std::to_string(lfg.coeff[i]) + "\n";
  }
  write_file(out_path(cfg, "lfg.csv"), csv);
  write_file(out_path(cfg, "lseries.json"), report_envelope("lseries", cfg, payload.dump(), bytes));
  std::cout << "wrote " << out_path(cfg, "lfg.csv") << "\n";
  return kExitOk;
}

int cmd_gamma(const RunConfig& cfg, int k1, int k2, bool convexity) {
  auto factors = gamma_factors(k1, k2);
  json rows = json::array();
  for (const auto& f : factors) {
    rows.push_back(json{{"kind", f.kind == GammaKind::R ? "R" : "C"}, {"shift", f.shift}});
    std::cout << (f.kind == GammaKind::R ? "Gamma_R" : "Gamma_C") << "(s + " << f.shift << ")\n";
  }
  json payload{{"k1", k1}, {"k2", k2}, {"factors", rows}};
  if (convexity) {
    json grid = json::array();
    for (double c : {1.05, 1.25, 1.45})
      for (double t : {0.0, 10.0, 50.0}) {
        ArchRatio r = archimedean_ratio(k1, k2, c, t);
        grid.push_back(
            json{{"c", c}, {"t", t}, {"ratio", r.value}, {"bound", r.bound},
                 {"fitted", std::pow(r.value / r.bound, 1.0 / (2.0 * c - 1.0))}});
      }
    payload["convexity_grid"] = grid;
  }
  write_file(out_path(cfg, "gamma.json"), report_envelope("gamma", cfg, payload.dump()));
  return kExitOk;
}

int cmd_sums(const RunConfig& cfg, std::uint64_t pairs) {
  SamplingMeasure measure = SamplingMeasure::parse(cfg.measure);
  auto primes = primes_up_to(cfg.cutoff);
  std::vector<std::uint64_t> cps = geometric_checkpoints(cfg.cutoff);
  json runs = json::array();
  for (std::uint64_t i = 0; i < pairs; ++i) {
    EigenSystem sysF = sample_system(measure, primes, cfg.rng_seed + 2 * i);
    EigenSystem sysG = sample_system(measure, primes, cfg.rng_seed + 2 * i + 1);
    EigenTable<double> f = extend_multiplicative(sysF, cfg.cutoff);
    EigenTable<double> g = extend_multiplicative(sysG, cfg.cutoff);
    PartialSumReport self = partial_sum_experiment(f, f, cps);
    PartialSumReport cross = partial_sum_experiment(f, g, cps);
    runs.push_back(json{{"self_slope", self.slope},
                        {"self_linear_coeff", self.linear_coeff},
                        {"cross_slope", cross.slope}});
    std::string csv = "x,self,cross\n";
    for (std::size_t j = 0; j < cps.size(); ++j)
      csv += std::to_string(cps[j]) + "," + std::to_string(self.sums[j]) + "," +
             std::to_string(cross.sums[j]) + "\n";
    write_file(out_path(cfg, "sums_" + std::to_string(i) + ".csv"), csv);
  }
  json payload{{"pairs", pairs}, {"checkpoints", cps}, {"runs", runs}};
  write_file(out_path(cfg, "sums.json"), report_envelope("sums", cfg, payload.dump()));
  std::cout << "wrote " << out_path(cfg, "sums.json") << "\n";
  return kExitOk;
}

int cmd_signs(const RunConfig& cfg, std::uint64_t pairs, double hyp_c) {
  SamplingMeasure measure = SamplingMeasure::parse(cfg.measure);
  auto primes = primes_up_to(cfg.cutoff);
  json runs = json::array();
  for (std::uint64_t i = 0; i < pairs; ++i) {
    EigenSystem sysF = sample_system(measure, primes, cfg.rng_seed + 2 * i);
    EigenSystem sysG = sample_system(measure, primes, cfg.rng_seed + 2 * i + 1);
    EigenTable<double> f = extend_multiplicative(sysF, cfg.cutoff);
    EigenTable<double> g = extend_multiplicative(sysG, cfg.cutoff);
    SignCensus census = sign_census(f, g, cfg.cutoff, cfg.tol);
    PrimeSignEstimate est = prime_sign_estimator(f, g, cfg.cutoff, cfg.tol);
    HypothesisResult hyp = hypothesis_check(g, hyp_c, cfg.cutoff);
    runs.push_back(json{{"pos", census.pos},
                        {"neg", census.neg},
                        {"zero", census.zero},
                        {"s_plus", est.s_plus},
                        {"s_minus", est.s_minus},
                        {"pos_lower_bound", est.pos_lower_bound},
                        {"hypothesis_count", hyp.count},
                        {"hypothesis_pass", hyp.pass}});
  }
  DensityResult density = mr_density(HFunction{}, cfg.primes_up_to);
  json payload{{"pairs", pairs},
               {"x", cfg.cutoff},
               {"mr_density_h1", to_string(density.exact)},
               {"mr_density_tail_bound", density.tail_bound},
               {"runs", runs}};
  write_file(out_path(cfg, "signs.json"), report_envelope("signs", cfg, payload.dump()));
  std::cout << "wrote " << out_path(cfg, "signs.json") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siegel: spin eigenvalue recurrences, convolution factors, and sign statistics"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "exact";
  app.add_option("--mode", mode, "arithmetic mode")
      ->check(CLI::IsMember({"exact", "float"}))
      ->envname("SIEGEL_MODE");
  app.add_option("--tol", cfg.tol, "float-lane zero tolerance")->envname("SIEGEL_TOL");
  app.add_option("--primes-up-to", cfg.primes_up_to, "prime cutoff")->envname("SIEGEL_PRIMES_UP_TO");
  app.add_option("--cutoff", cfg.cutoff, "series cutoff")->envname("SIEGEL_CUTOFF");
  app.add_option("--seed", cfg.rng_seed, "rng seed")->envname("SIEGEL_SEED");
  app.add_option("--measure", cfg.measure, "sampling measure spec")->envname("SIEGEL_MEASURE");
  app.add_option("--out", cfg.out_dir, "report output directory")->envname("SIEGEL_OUT");
  app.add_option("--workers", cfg.workers, "worker threads (0 = auto)")->envname("SIEGEL_WORKERS");

  auto* ingest = app.add_subcommand("ingest", "CSV (p,n,mu,k) -> normalized system JSON");
  std::string csv_path;
  ingest->add_option("csv", csv_path, "input CSV path")->required();

  auto* sample = app.add_subcommand("sample", "draw a system from --measure up to --primes-up-to");
  std::string sample_name = "system.json";
  sample->add_option("--name", sample_name, "output file name");

  auto* recur = app.add_subcommand("recur", "lambda(p^n) table from a seed file");
  std::string recur_file;
  std::uint64_t recur_prime = 0;
  int recur_n = 14;
  recur->add_option("--seed-file", recur_file)->required();
  recur->add_option("--prime", recur_prime, "restrict to one prime");
  recur->add_option("--n", recur_n, "largest exponent");

  auto* gf = app.add_subcommand("gf", "local spin generating function");
  std::string gf_file;
  std::uint64_t gf_prime = 2;
  int gf_terms = 16;
  gf->add_option("--seed-file", gf_file)->required();
  gf->add_option("--prime", gf_prime)->required();
  gf->add_option("--terms", gf_terms);

  auto* had = app.add_subcommand("hadamard", "local convolution factor of two systems");
  std::string had_f, had_g;
  std::uint64_t had_prime = 2;
  int had_depth = 40;
  had->add_option("--seed-file", had_f)->required();
  had->add_option("--seed-file2", had_g)->required();
  had->add_option("--prime", had_prime)->required();
  had->add_option("--depth", had_depth);

  auto* nonv = app.add_subcommand("nonvanish", "joint non-vanishing sweep");
  std::uint64_t nonv_trials = 10000;
  int nonv_max_n = 14;
  std::vector<std::uint64_t> nonv_primes;
  std::string nonv_replay;
  nonv->add_option("--trials", nonv_trials);
  nonv->add_option("--max-n", nonv_max_n);
  nonv->add_option("--primes", nonv_primes)->delimiter(',');
  nonv->add_option("--replay", nonv_replay, "re-examine recorded seed pairs exactly");

  auto* scan = app.add_subcommand("scan", "vanishing-pattern scan of one seed");
  std::string scan_file;
  std::uint64_t scan_prime = 2;
  int scan_window = 100;
  scan->add_option("--seed-file", scan_file)->required();
  scan->add_option("--prime", scan_prime)->required();
  scan->add_option("--window", scan_window);

  auto* lser = app.add_subcommand("lseries", "product coefficients and the factorization residual");
  std::string lser_f, lser_g;
  lser->add_option("--seed-file", lser_f)->required();
  lser->add_option("--seed-file2", lser_g)->required();

  auto* gam = app.add_subcommand("gamma", "archimedean factor table");
  int k1 = 0, k2 = 0;
  bool gam_convexity = false;
  gam->add_option("--k1", k1)->required();
  gam->add_option("--k2", k2)->required();
  gam->add_flag("--convexity-grid", gam_convexity, "sample the ratio/bound monitor");

  auto* sums = app.add_subcommand("sums", "partial-sum growth experiment on sampled pairs");
  std::uint64_t sums_pairs = 5;
  sums->add_option("--trials", sums_pairs, "number of sampled pairs");

  auto* signs = app.add_subcommand("signs", "sign census and prime-sign estimators");
  std::uint64_t signs_pairs = 5;
  double signs_c = 0.5;
  signs->add_option("--trials", signs_pairs, "number of sampled pairs");
  signs->add_option("--c", signs_c, "hypothesis threshold in (0, 4)");

  // global flags remain usable after the subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitInput;
  }
  cfg.mode = mode_from_string(mode);

  try {
    if (app.got_subcommand(ingest)) return cmd_ingest(cfg, csv_path);
    if (app.got_subcommand(sample)) return cmd_sample(cfg, sample_name);
    if (app.got_subcommand(recur)) return cmd_recur(cfg, recur_file, recur_prime, recur_n);
    if (app.got_subcommand(gf)) return cmd_gf(cfg, gf_file, gf_prime, gf_terms);
    if (app.got_subcommand(had)) return cmd_hadamard(cfg, had_f, had_g, had_prime, had_depth);
    if (app.got_subcommand(nonv)) {
      if (!nonv_replay.empty()) return cmd_nonvanish_replay(cfg, nonv_replay, nonv_max_n);
      return cmd_nonvanish(cfg, nonv_trials, nonv_max_n, nonv_primes);
    }
    if (app.got_subcommand(scan)) return cmd_scan(cfg, scan_file, scan_prime, scan_window);
    if (app.got_subcommand(lser)) return cmd_lseries(cfg, lser_f, lser_g);
    if (app.got_subcommand(gam)) return cmd_gamma(cfg, k1, k2, gam_convexity);
    if (app.got_subcommand(sums)) return cmd_sums(cfg, sums_pairs);
    if (app.got_subcommand(signs)) return cmd_signs(cfg, signs_pairs, signs_c);
    std::cerr << json{{"error", "unknown subcommand"}}.dump() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitInput;
  }
}
