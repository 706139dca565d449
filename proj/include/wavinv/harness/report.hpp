// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wavinv/harness/monte_carlo.hpp"
#include "wavinv/harness/rate_fit.hpp"

namespace wavinv {

enum class ReportFormat { Csv, Json };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format '" + s + "' (csv | json)");
}

inline constexpr const char* kCsvHeader =
    "delta,epsilon,method,rmse_mean,rmse_std,cutoff_rate,chosen_j_mode,wall_ms,seed";

/// One row per (δ, ε, method) cell; `seed` is the experiment's base seed.
inline void write_csv(std::ostream& out, const ExperimentResult& res) {
  out << kCsvHeader << '\n';
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  for (const auto& c : res.cells) {
    out << num(c.delta) << ',' << num(c.epsilon) << ',' << c.method << ',' << num(c.rmse_mean)
        << ',' << num(c.rmse_std) << ',' << num(c.cutoff_rate) << ',' << c.chosen_j_mode() << ','
        << num(c.wall_ms) << ',' << res.provenance.seed << '\n';
  }
}

inline nlohmann::json to_json(const CellResult& c) {
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : c.errors) errors.push_back(e ? nlohmann::json(*e) : nlohmann::json(nullptr));
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [j, n] : c.chosen_j) hist[std::to_string(j)] = n;
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {{"delta", c.delta},
          {"epsilon", c.epsilon},
          {"method", c.method},
          {"rmse_mean", finite_or_null(c.rmse_mean)},
          {"rmse_std", c.rmse_std},
          {"cutoff_rate", c.cutoff_rate},
          {"failure_rate", c.failure_rate},
          {"chosen_j_histogram", hist},
          {"chosen_j_mode", c.chosen_j_mode()},
          {"wall_ms", c.wall_ms},
          {"errors", errors},
          {"levels", c.levels}};
}

inline nlohmann::json to_json(const ExperimentResult& res) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : res.cells) cells.push_back(to_json(c));
  return {{"provenance",
           {{"config_hash", res.provenance.config_hash},
            {"seed", res.provenance.seed},
            {"version", res.provenance.version}}},
          {"replication_seeds", res.replication_seeds},
          {"cells", cells}};
}

inline CellResult cell_from_json(const nlohmann::json& j) {
  CellResult c;
  c.delta = j.at("delta").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.method = j.at("method").get<std::string>();
  c.rmse_mean = j.at("rmse_mean").is_null() ? NAN : j.at("rmse_mean").get<double>();
  c.rmse_std = j.at("rmse_std").get<double>();
  c.cutoff_rate = j.at("cutoff_rate").get<double>();
  c.failure_rate = j.at("failure_rate").get<double>();
  for (const auto& [k, v] : j.at("chosen_j_histogram").items()) c.chosen_j[std::stoi(k)] = v.get<int>();
  c.wall_ms = j.at("wall_ms").get<double>();
  for (const auto& e : j.at("errors"))
    c.errors.push_back(e.is_null() ? std::nullopt : std::optional<double>(e.get<double>()));
  c.levels = j.at("levels").get<std::vector<int>>();
  return c;
}

inline ExperimentResult result_from_json(const nlohmann::json& j) {
  ExperimentResult res;
  const auto& p = j.at("provenance");
  res.provenance.config_hash = p.at("config_hash").get<std::string>();
  res.provenance.seed = p.at("seed").get<std::uint64_t>();
  res.provenance.version = p.at("version").get<std::string>();
  res.replication_seeds = j.at("replication_seeds").get<std::vector<std::uint64_t>>();
  for (const auto& c : j.at("cells")) res.cells.push_back(cell_from_json(c));
  return res;
}

inline nlohmann::json to_json(const RateFit& f) {
  return {{"slope", f.slope},
          {"intercept", f.intercept},
          {"r_squared", f.r_squared},
          {"theoretical_exponent", f.theoretical_exponent},
          {"points", f.points}};
}

inline void emit_report(const ExperimentResult& res, ReportFormat format,
                        const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_report: cannot write " + path.string());
  if (format == ReportFormat::Csv) write_csv(out, res);
  else out << to_json(res).dump(2) << '\n';
  if (!out) throw std::runtime_error("emit_report: write failed for " + path.string());
}

}  // namespace wavinv
