// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
//
// Command line front end: simulate, estimate, experiment, rates.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavinv/wavinv.hpp"

namespace fs = std::filesystem;
using namespace wavinv;

namespace {

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
};

struct SimulateOptions {
  std::string kernel = "log-potential";
  std::string signal = "tent";
  std::string filter = "db8";
  int max_level = 10;
  double delta = 1e-3;
  double epsilon = 1e-5;
};

struct EstimateOptions {
  std::string bundle;
  std::string method = "nl2";
  std::optional<int> j, j0, j1, J;
  double kappa = 0.4;
  double kappa_op = 1.5;
  double kappa_data = 1.5;
  std::optional<double> tau;
  double t = 1.0;
  double rule_c = 5.0;
  bool sqrt_dim = false;
  std::string threshold_mode = "empirical";
};

struct ExperimentOptions {
  std::string config;
  std::optional<int> threads;
};

struct RatesOptions {
  std::string kernel = "diagonal:1";
  std::string signal = "smooth:1";
  std::string filter = "db8";
  int max_level = 8;
  std::string method = "linear j=oracle";
  double s = 1.5;
  double t = 1.0;
  int min_exp = 4;
  int max_exp = 12;
  int replications = 50;
  std::string epsilon_mode = "tied";
  double epsilon = 0.0;
  int threads = 1;
};

void write_json(const fs::path& path, const nlohmann::json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

fs::path default_out(const GlobalOptions& g, const std::string& stem, ReportFormat fmt) {
  if (!g.out.empty()) return g.out;
  return stem + (fmt == ReportFormat::Csv ? ".csv" : ".json");
}

int run_simulate(const GlobalOptions& g, const SimulateOptions& o) {
  const auto filter = WaveletFilter::from_name(o.filter);
  const auto kernel = parse_kernel(o.kernel);
  const auto signal = parse_signal(o.signal);
  const std::uint64_t seed = g.seed.value_or(0);
  const auto K = build_operator(kernel, o.max_level, filter);
  const auto f = synthesize_signal(signal, o.max_level, filter);
  const auto obs = observe(f, K, o.delta, o.epsilon, seed);
  const fs::path dir = g.out.empty() ? "bundle" : g.out;
  write_bundle(dir, obs, {kernel_text(kernel), signal_text(signal), filter.name()});
  std::printf("wrote %s (J_max=%d, delta=%g, epsilon=%g, seed=%llu)\n", dir.c_str(), o.max_level,
              o.delta, o.epsilon, static_cast<unsigned long long>(seed));
  return 0;
}

int run_estimate(const GlobalOptions& g, const EstimateOptions& o) {
  const Bundle b = read_bundle(o.bundle);
  const Observation& obs = b.obs;
  const auto scale = o.sqrt_dim ? LevelRuleScale::SqrtDim : LevelRuleScale::Dim;
  std::optional<int> rule_level;
  auto level_or_rule = [&](const std::optional<int>& given) {
    if (given) return *given;
    if (!rule_level) {
      if (!(obs.delta > 0.0)) throw std::invalid_argument("level rule needs delta > 0; pass a level");
      rule_level = select_level(obs.kdelta, obs.delta, o.rule_c, scale);
    }
    return *rule_level;
  };

  Estimate est;
  if (o.method == "linear") {
    est = linear_galerkin(obs, LinearSpec{level_or_rule(o.j), o.t, o.tau});
  } else if (o.method == "nl1") {
    NL1Spec spec;
    spec.j0 = o.j0.value_or(0);
    spec.j1 = level_or_rule(o.j1 ? o.j1 : o.j);
    spec.kappa = o.kappa;
    spec.t = o.t;
    spec.tau = o.tau;
    if (o.threshold_mode == "empirical") spec.mode = ThresholdMode::EmpiricalDecay;
    else if (o.threshold_mode == "theoretical") spec.mode = ThresholdMode::Theoretical;
    else throw std::invalid_argument("--threshold-mode must be empirical or theoretical");
    est = nl1_estimate(obs, spec);
  } else if (o.method == "nl2") {
    est = nl2_estimate(obs, NL2Spec{level_or_rule(o.J ? o.J : o.j), o.kappa_op, o.kappa_data, o.t, o.tau});
  } else {
    throw std::invalid_argument("unknown method '" + o.method + "' (linear | nl1 | nl2)");
  }

  const auto fmt = parse_report_format(g.format);
  const fs::path dir = g.out.empty() ? "estimate" : g.out;
  fs::create_directories(dir);
  if (fmt == ReportFormat::Csv) {
    write_coefficients(dir / "estimate.csv", est.f);
  } else {
    write_json(dir / "estimate.json", {{"max_level", est.f.max_level()}, {"coefficients", est.f.vector()}});
  }
  nlohmann::json diag = {{"method", o.method},
                         {"chosen_level", est.diagnostics.used_level},
                         {"rule_level", rule_level ? nlohmann::json(*rule_level) : nlohmann::json(nullptr)},
                         {"cutoff_triggered", est.cutoff_triggered},
                         {"kept_coefficients", est.diagnostics.kept_coefficients},
                         {"kept_operator_entries", est.diagnostics.kept_operator_entries},
                         {"inv_norm", std::isfinite(est.diagnostics.inv_norm)
                                          ? nlohmann::json(est.diagnostics.inv_norm)
                                          : nlohmann::json(nullptr)},
                         {"delta", obs.delta},
                         {"epsilon", obs.epsilon},
                         {"seed", obs.seed}};
  if (b.has_truth) diag["rmse"] = rmse(est.f, obs.truth);
  write_json(dir / "diagnostics.json", diag);
  std::printf("%s: level %d, cutoff %s", o.method.c_str(), est.diagnostics.used_level,
              est.cutoff_triggered ? "yes" : "no");
  if (b.has_truth) std::printf(", rmse %.6g", diag["rmse"].get<double>());
  std::printf("\n");
  return 0;
}

int run_experiment(const GlobalOptions& g, const ExperimentOptions& o) {
  ExperimentConfig cfg = load_config(o.config);
  if (g.seed) cfg.base_seed = *g.seed;
  if (o.threads) cfg.threads = *o.threads;
  const auto fmt = parse_report_format(g.format);
  const auto res = run_monte_carlo(cfg);
  const fs::path out = default_out(g, "results", fmt);
  emit_report(res, fmt, out);
  for (const auto& c : res.cells)
    std::printf("delta=%-8g epsilon=%-8g %-12s rmse=%.5g  cutoff=%.2f  failures=%.2f  J=%d\n", c.delta,
                c.epsilon, c.method.c_str(), c.rmse_mean, c.cutoff_rate, c.failure_rate,
                c.chosen_j_mode());
  std::printf("config %s, wrote %s\n", res.provenance.config_hash.c_str(), out.c_str());
  return 0;
}

int run_rates(const GlobalOptions& g, const RatesOptions& o) {
  if (o.min_exp < 1 || o.max_exp - o.min_exp + 1 < static_cast<int>(kMinRatePoints))
    throw std::invalid_argument("rates: need at least " + std::to_string(kMinRatePoints) +
                                " grid points with min exponent >= 1");
  ExperimentConfig cfg;
  cfg.kernel = parse_kernel(o.kernel);
  cfg.signal = parse_signal(o.signal);
  cfg.filter = o.filter;
  cfg.max_level = o.max_level;
  cfg.delta_grid.clear();
  for (int k = o.min_exp; k <= o.max_exp; ++k) cfg.delta_grid.push_back(std::exp2(-k));
  if (o.epsilon_mode == "tied") cfg.tie_epsilon = true;
  else if (o.epsilon_mode == "zero") cfg.epsilon_grid = {0.0};
  else if (o.epsilon_mode == "fixed") cfg.epsilon_grid = {o.epsilon};
  else throw std::invalid_argument("--epsilon-mode must be tied, zero or fixed");
  auto m = parse_method(o.method);
  m.level.s = o.s;
  m.t = o.t;
  cfg.methods = {m};
  cfg.replications = o.replications;
  cfg.base_seed = g.seed.value_or(0);
  cfg.threads = o.threads;

  const auto res = run_monte_carlo(cfg);
  const auto fit = fit_rate(res, m.label, o.s, o.t, 1);
  const auto fmt = parse_report_format(g.format);
  const fs::path out = default_out(g, "rates", fmt);
  if (fmt == ReportFormat::Json) {
    auto doc = to_json(res);
    doc["fit"] = to_json(fit);
    write_json(out, doc);
  } else {
    emit_report(res, fmt, out);
    fs::path fit_path = out;
    fit_path.replace_extension(".fit.json");
    write_json(fit_path, to_json(fit));
  }
  std::printf("slope %.4f (theory %.4f), r^2 %.4f over %zu points; wrote %s\n", fit.slope,
              fit.theoretical_exponent, fit.r_squared, fit.points, out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavinv: wavelet estimators for inverse problems with noisy operators"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed (observation seed or experiment base seed)");
  app.add_option("--out", g.out, "Output file or directory");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "json"}));

  SimulateOptions so;
  auto* sim = app.add_subcommand("simulate", "Write an observation bundle");
  sim->add_option("--kernel", so.kernel, "log-potential | diagonal[:t]");
  sim->add_option("--signal", so.signal, "tent | smooth:n | wavelet:j,k");
  sim->add_option("--filter", so.filter, "haar | db1..db10");
  sim->add_option("--J-max", so.max_level, "Finest level");
  sim->add_option("--delta", so.delta, "Operator noise level")->check(CLI::NonNegativeNumber);
  sim->add_option("--epsilon", so.epsilon, "Data noise level")->check(CLI::NonNegativeNumber);

  EstimateOptions eo;
  auto* est = app.add_subcommand("estimate", "Run one estimator on a bundle");
  est->add_option("--bundle", eo.bundle, "Bundle directory written by simulate")->required();
  est->add_option("--method", eo.method)->check(CLI::IsMember({"linear", "nl1", "nl2"}));
  est->add_option("--j", eo.j, "Level (any method)");
  est->add_option("--j0", eo.j0, "NL-I coarse level");
  est->add_option("--j1", eo.j1, "NL-I inversion level");
  est->add_option("--J", eo.J, "NL-II level");
  est->add_option("--kappa", eo.kappa, "NL-I threshold constant");
  est->add_option("--kappa-op", eo.kappa_op, "NL-II operator threshold constant");
  est->add_option("--kappa-data", eo.kappa_data, "NL-II data threshold constant");
  est->add_option("--tau", eo.tau, "Cutoff parameter");
  est->add_option("--t", eo.t, "Degree of ill-posedness");
  est->add_option("--rule-c", eo.rule_c, "Level rule constant, used when no level is given");
  est->add_flag("--sqrt-dim", eo.sqrt_dim, "Level rule with the square-root dimension factor");
  est->add_option("--threshold-mode", eo.threshold_mode)
      ->check(CLI::IsMember({"empirical", "theoretical"}));

  ExperimentOptions xo;
  auto* exp = app.add_subcommand("experiment", "Run a Monte Carlo config file");
  exp->add_option("config", xo.config, "Config file")->required();
  exp->add_option("--threads", xo.threads, "Worker threads (0 = all cores)");

  RatesOptions ro;
  auto* rates = app.add_subcommand("rates", "Noise sweep with a rate fit");
  rates->add_option("--kernel", ro.kernel);
  rates->add_option("--signal", ro.signal);
  rates->add_option("--filter", ro.filter);
  rates->add_option("--J-max", ro.max_level);
  rates->add_option("--method", ro.method, "Method line, e.g. \"linear j=oracle\"");
  rates->add_option("--s", ro.s, "Smoothness used for the oracle level and the theory line");
  rates->add_option("--t", ro.t, "Degree of ill-posedness");
  rates->add_option("--min-exp", ro.min_exp, "Largest noise level is 2^-min");
  rates->add_option("--max-exp", ro.max_exp, "Smallest noise level is 2^-max");
  rates->add_option("--replications", ro.replications)->check(CLI::PositiveNumber);
  rates->add_option("--epsilon-mode", ro.epsilon_mode)->check(CLI::IsMember({"tied", "zero", "fixed"}));
  rates->add_option("--epsilon", ro.epsilon, "Data noise for --epsilon-mode fixed");
  rates->add_option("--threads", ro.threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) return run_simulate(g, so);
    if (*est) return run_estimate(g, eo);
    if (*exp) return run_experiment(g, xo);
    if (*rates) return run_rates(g, ro);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "wavinv: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "wavinv: %s\n", e.what());
    return 1;
  }
  return 0;
}
