// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wavinv/harness/config.hpp"
#include "wavinv/harness/methods.hpp"
#include "wavinv/harness/rmse.hpp"
#include "wavinv/operators/build.hpp"
#include "wavinv/random.hpp"
#include "wavinv/simulate/observation.hpp"
#include "wavinv/version.hpp"

namespace wavinv {

struct CellResult {
  double delta = 0.0;
  double epsilon = 0.0;
  std::string method;
  double rmse_mean = 0.0;  // root of the mean squared L² error
  double rmse_std = 0.0;   // sample std of the per-replication L² errors
  double cutoff_rate = 0.0;
  double failure_rate = 0.0;  // estimator errors, excluded from rmse_mean
  std::map<int, int> chosen_j;
  double wall_ms = 0.0;
  std::vector<std::optional<double>> errors;  // per replication; nullopt = failure
  std::vector<int> levels;                    // per replication; -1 = failure

  /// Most frequent level (smallest on ties), -1 without successes.
  int chosen_j_mode() const {
    int best = -1, count = 0;
    for (const auto& [j, n] : chosen_j)
      if (n > count) best = j, count = n;
    return best;
  }

  /// rmse_mean is NaN when every replication failed; two such cells compare equal.
  friend bool operator==(const CellResult& a, const CellResult& b) {
    const bool same_mean =
        a.rmse_mean == b.rmse_mean || (std::isnan(a.rmse_mean) && std::isnan(b.rmse_mean));
    return same_mean && a.delta == b.delta && a.epsilon == b.epsilon && a.method == b.method &&
           a.rmse_std == b.rmse_std && a.cutoff_rate == b.cutoff_rate &&
           a.failure_rate == b.failure_rate && a.chosen_j == b.chosen_j &&
           a.wall_ms == b.wall_ms && a.errors == b.errors && a.levels == b.levels;
  }
};

struct Provenance {
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string version = kVersion;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ExperimentResult {
  std::vector<CellResult> cells;
  Provenance provenance;
  std::vector<std::uint64_t> replication_seeds;

  const CellResult* find(const std::string& method, double delta, double epsilon) const {
    for (const auto& c : cells)
      if (c.method == method && c.delta == delta && c.epsilon == epsilon) return &c;
    return nullptr;
  }

  std::vector<const CellResult*> cells_for(const std::string& method) const {
    std::vector<const CellResult*> out;
    for (const auto& c : cells)
      if (c.method == method) out.push_back(&c);
    return out;
  }

  friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

/// Equality of every reported number except wall-clock time.
inline bool same_numbers(const ExperimentResult& a, const ExperimentResult& b) {
  if (!(a.provenance == b.provenance) || a.replication_seeds != b.replication_seeds ||
      a.cells.size() != b.cells.size())
    return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CellResult x = a.cells[i], y = b.cells[i];
    x.wall_ms = y.wall_ms = 0.0;
    if (!(x == y)) return false;
  }
  return true;
}

/// Observation seed of replication r. Shared by all cells and methods, so
/// methods are compared on identical noise draws.
inline std::uint64_t replication_seed(std::uint64_t base_seed, int r) {
  return derive_seed(base_seed, static_cast<std::uint64_t>(r));
}

namespace detail {

inline void summarize(CellResult& cell) {
  const std::size_t reps = cell.errors.size();
  std::size_t ok = 0, failures = 0;
  double mean = 0.0;
  for (const auto& e : cell.errors) {
    if (e) {
      ++ok;
      mean += *e;
    } else {
      ++failures;
    }
  }
  cell.rmse_mean = root_mean_square(cell.errors);
  cell.rmse_std = 0.0;
  if (ok >= 2) {
    mean /= static_cast<double>(ok);
    double var = 0.0;
    for (const auto& e : cell.errors)
      if (e) var += (*e - mean) * (*e - mean);
    cell.rmse_std = std::sqrt(var / static_cast<double>(ok - 1));
  }
  cell.failure_rate = reps ? static_cast<double>(failures) / static_cast<double>(reps) : 0.0;
  cell.chosen_j.clear();
  for (int j : cell.levels)
    if (j >= 0) ++cell.chosen_j[j];
}

}  // namespace detail

/// Runs every (δ, ε, method) cell for `replications` seeded observations.
/// Estimator errors are recorded per replication and never abort the sweep.
/// Results depend only on the config and base seed, not on `threads`.
inline ExperimentResult run_monte_carlo(const ExperimentConfig& cfg) {
  validate(cfg);
  const WaveletFilter filter = WaveletFilter::from_name(cfg.filter);
  const GalerkinMatrix K = build_operator(cfg.kernel, cfg.max_level, filter);
  const CoeffVector truth = synthesize_signal(cfg.signal, cfg.max_level, filter);

  std::vector<std::pair<double, double>> noise_cells;
  for (double d : cfg.delta_grid) {
    if (cfg.tie_epsilon) noise_cells.emplace_back(d, d);
    else
      for (double e : cfg.epsilon_grid) noise_cells.emplace_back(d, e);
  }

  ExperimentResult result;
  result.provenance = Provenance{config_hash(cfg), cfg.base_seed, kVersion};
  for (int r = 0; r < cfg.replications; ++r)
    result.replication_seeds.push_back(replication_seed(cfg.base_seed, r));

  const auto reps = static_cast<std::size_t>(cfg.replications);
  const std::size_t n_methods = cfg.methods.size();
  int threads = cfg.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : cfg.threads;
  threads = std::clamp(threads, 1, cfg.replications);

  for (const auto& [delta, epsilon] : noise_cells) {
    std::vector<std::vector<std::optional<double>>> errors(n_methods, std::vector<std::optional<double>>(reps));
    std::vector<std::vector<int>> levels(n_methods, std::vector<int>(reps, -1));
    std::vector<std::vector<char>> cutoffs(n_methods, std::vector<char>(reps, 0));
    std::vector<std::vector<double>> millis(n_methods, std::vector<double>(reps, 0.0));

    auto worker = [&](int tid) {
      for (int r = tid; r < cfg.replications; r += threads) {
        const auto ri = static_cast<std::size_t>(r);
        const Observation obs = observe(truth, K, delta, epsilon, result.replication_seeds[ri]);
        RuleCache rules;
        for (std::size_t m = 0; m < n_methods; ++m) {
          const auto t0 = std::chrono::steady_clock::now();
          try {
            const Estimate est = run_method(cfg.methods[m], obs, rules);
            errors[m][ri] = rmse(est.f, truth);
            levels[m][ri] = est.diagnostics.used_level;
            cutoffs[m][ri] = est.cutoff_triggered;
          } catch (const std::exception&) {
            errors[m][ri] = std::nullopt;
          }
          millis[m][ri] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0).count();
        }
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }

    for (std::size_t m = 0; m < n_methods; ++m) {
      CellResult cell;
      cell.delta = delta;
      cell.epsilon = epsilon;
      cell.method = cfg.methods[m].label;
      cell.errors = std::move(errors[m]);
      cell.levels = std::move(levels[m]);
      std::size_t n_cut = 0;
      for (char c : cutoffs[m]) n_cut += c != 0;
      cell.cutoff_rate = static_cast<double>(n_cut) / static_cast<double>(reps);
      for (double ms : millis[m]) cell.wall_ms += ms;
      detail::summarize(cell);
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

}  // namespace wavinv
