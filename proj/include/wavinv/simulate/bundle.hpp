// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wavinv/operators/matrix_io.hpp"
#include "wavinv/simulate/observation.hpp"

namespace wavinv {

// Observation bundle: a directory holding
//   operator.gmat   the observed K_δ (see matrix_io.hpp)
//   g.csv           noisy data coefficients
//   truth.csv       ground truth coefficients (optional, scoring only)
//   meta.json       delta, epsilon, seed, kernel, signal, filter, max_level, illposedness
//
// Coefficient CSV: header "index,level,position,value", one row per coefficient.

inline void write_coefficients(const std::filesystem::path& path, const CoeffVector& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_coefficients: cannot open " + path.string());
  out << "index,level,position,value\n";
  char buf[32];
  for (std::size_t i = 0; i < c.size(); ++i) {
    const MultiIndex mi = unflatten(i);
    std::snprintf(buf, sizeof buf, "%.17g", c[i]);
    out << i << ',' << mi.level << ',' << mi.position << ',' << buf << '\n';
  }
  if (!out) throw std::runtime_error("write_coefficients: write failed for " + path.string());
}

inline CoeffVector read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_coefficients: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "index,level,position,value")
    throw std::runtime_error("read_coefficients: bad header in " + path.string());
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string idx, lev, pos, val;
    if (!std::getline(ls, idx, ',') || !std::getline(ls, lev, ',') ||
        !std::getline(ls, pos, ',') || !std::getline(ls, val))
      throw std::runtime_error("read_coefficients: malformed row '" + line + "'");
    if (std::stoul(idx) != values.size())
      throw std::runtime_error("read_coefficients: rows out of order in " + path.string());
    values.push_back(std::stod(val));
  }
  const int lg = exact_log2(values.size());
  if (lg < 0) throw std::runtime_error("read_coefficients: length is not a power of two");
  return CoeffVector(lg - 1, std::move(values));
}

struct BundleInfo {
  std::string kernel;
  std::string signal;
  std::string filter;
};

inline void write_bundle(const std::filesystem::path& dir, const Observation& obs,
                         const BundleInfo& info) {
  std::filesystem::create_directories(dir);
  write_matrix(dir / "operator.gmat", obs.kdelta, MatrixEncoding::Binary);
  write_coefficients(dir / "g.csv", obs.g);
  write_coefficients(dir / "truth.csv", obs.truth);
  nlohmann::json meta = {{"delta", obs.delta},
                         {"epsilon", obs.epsilon},
                         {"seed", obs.seed},
                         {"kernel", info.kernel},
                         {"signal", info.signal},
                         {"filter", info.filter},
                         {"max_level", obs.max_level()},
                         {"illposedness", obs.kdelta.illposedness}};
  std::ofstream out(dir / "meta.json");
  if (!out) throw std::runtime_error("write_bundle: cannot write meta.json in " + dir.string());
  out << meta.dump(2) << '\n';
}

struct Bundle {
  Observation obs;
  BundleInfo info;
  bool has_truth = false;
};

inline Bundle read_bundle(const std::filesystem::path& dir) {
  Bundle b;
  std::ifstream in(dir / "meta.json");
  if (!in) throw std::runtime_error("read_bundle: missing meta.json in " + dir.string());
  const nlohmann::json meta = nlohmann::json::parse(in);
  b.obs.delta = meta.at("delta").get<double>();
  b.obs.epsilon = meta.at("epsilon").get<double>();
  b.obs.seed = meta.at("seed").get<std::uint64_t>();
  b.info.kernel = meta.value("kernel", std::string("unknown"));
  b.info.signal = meta.value("signal", std::string("unknown"));
  b.info.filter = meta.value("filter", std::string("db8"));
  b.obs.kdelta = read_matrix(dir / "operator.gmat");
  b.obs.g = read_coefficients(dir / "g.csv");
  if (b.obs.g.max_level() != b.obs.kdelta.max_level)
    throw std::runtime_error("read_bundle: operator and data levels differ");
  if (std::filesystem::exists(dir / "truth.csv")) {
    b.obs.truth = read_coefficients(dir / "truth.csv");
    b.has_truth = true;
  } else {
    b.obs.truth = CoeffVector(b.obs.g.max_level());
  }
  return b;
}

}  // namespace wavinv
