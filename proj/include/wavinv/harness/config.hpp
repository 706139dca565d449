// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavinv/estimators/estimate.hpp"
#include "wavinv/estimators/level_rule.hpp"
#include "wavinv/operators/kernel.hpp"
#include "wavinv/simulate/signal.hpp"

namespace wavinv {

/// How a method picks its level (j for linear, j1 for NL-I, J for NL-II).
struct LevelChoice {
  enum class Kind { Fixed, Rule, Oracle, Adaptive };
  Kind kind = Kind::Fixed;
  int level = 0;                             // Fixed
  double c = 5.0;                            // Rule
  LevelRuleScale scale = LevelRuleScale::Dim;
  double s = 1.5;                            // Oracle smoothness
  double constant = 1.0;                     // Adaptive multiplier

  friend bool operator==(const LevelChoice&, const LevelChoice&) = default;
};

struct MethodSpec {
  enum class Kind { Linear, NL1, NL2 };
  Kind kind = Kind::Linear;
  std::string label;
  LevelChoice level;
  int j0 = 0;
  double kappa = 0.4;
  double kappa_op = 1.5;
  double kappa_data = 1.5;
  double t = 1.0;
  std::optional<double> tau;
  ThresholdMode mode = ThresholdMode::EmpiricalDecay;

  friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

struct ExperimentConfig {
  KernelSpec kernel = LogPotential{};
  SignalSpec signal = TentSignal{};
  std::string filter = "db8";
  int max_level = 10;
  std::vector<double> delta_grid{1e-3};
  std::vector<double> epsilon_grid{1e-5};
  bool tie_epsilon = false;  // ε = δ per cell; epsilon_grid ignored
  std::vector<MethodSpec> methods;
  int replications = 20;
  std::uint64_t base_seed = 0;
  int threads = 1;  // 0: hardware concurrency; never affects results
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] inline void config_error(const std::string& msg) {
  throw std::invalid_argument("config: " + msg);
}

inline double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  config_error("bad number '" + s + "' for " + what);
}

inline long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  config_error("bad integer '" + s + "' for " + what);
}

inline bool parse_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  config_error("bad boolean '" + s + "' for " + what);
}

inline std::vector<double> parse_grid(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_double(tok, what));
  return out;
}

}  // namespace detail

inline KernelSpec parse_kernel(const std::string& s) {
  if (s == "log-potential") return LogPotential{};
  if (s.rfind("diagonal", 0) == 0) {
    const auto colon = s.find(':');
    const double t = colon == std::string::npos ? 1.0
                                                : detail::parse_double(s.substr(colon + 1), "kernel");
    return DiagonalKernel{t};
  }
  detail::config_error("unknown kernel '" + s + "' (log-potential | diagonal[:t])");
}

inline std::string kernel_text(const KernelSpec& k) {
  if (const auto* d = std::get_if<DiagonalKernel>(&k)) return "diagonal:" + detail::fmt_double(d->t);
  if (std::holds_alternative<LogPotential>(k)) return "log-potential";
  detail::config_error("custom kernels cannot be written to a config file");
}

inline SignalSpec parse_signal(const std::string& s) {
  if (s == "tent") return TentSignal{};
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "smooth")
    return SmoothSignal{arg.empty() ? 1 : static_cast<int>(detail::parse_int(arg, "signal"))};
  if (head == "wavelet") {
    const auto parts = detail::split(arg, ',');
    if (parts.size() != 2) detail::config_error("wavelet signal needs 'wavelet:level,position'");
    return SingleWaveletSignal{{static_cast<int>(detail::parse_int(parts[0], "signal")),
                                static_cast<int>(detail::parse_int(parts[1], "signal"))}};
  }
  detail::config_error("unknown signal '" + s + "' (tent | smooth:n | wavelet:j,k)");
}

inline std::string signal_text(const SignalSpec& s) {
  if (std::holds_alternative<CustomSignal>(s))
    detail::config_error("custom signals cannot be written to a config file");
  return signal_name(s);
}

inline LevelChoice parse_level_choice(const std::string& v) {
  LevelChoice lc;
  if (v == "rule") lc.kind = LevelChoice::Kind::Rule;
  else if (v == "oracle") lc.kind = LevelChoice::Kind::Oracle;
  else if (v == "adaptive") lc.kind = LevelChoice::Kind::Adaptive;
  else {
    lc.kind = LevelChoice::Kind::Fixed;
    lc.level = static_cast<int>(detail::parse_int(v, "level"));
  }
  return lc;
}

inline std::string method_kind_name(MethodSpec::Kind k) {
  switch (k) {
    case MethodSpec::Kind::Linear: return "linear";
    case MethodSpec::Kind::NL1: return "nl1";
    case MethodSpec::Kind::NL2: return "nl2";
  }
  return "?";
}

/// "nl2 J=rule c=5 kappa_op=1.5 kappa_data=1.5 label=..." -> MethodSpec.
inline MethodSpec parse_method(const std::string& text) {
  const auto tokens = detail::split(text, ' ');
  if (tokens.empty()) detail::config_error("empty method line");
  MethodSpec m;
  if (tokens[0] == "linear") m.kind = MethodSpec::Kind::Linear;
  else if (tokens[0] == "nl1") m.kind = MethodSpec::Kind::NL1;
  else if (tokens[0] == "nl2") m.kind = MethodSpec::Kind::NL2;
  else detail::config_error("unknown method '" + tokens[0] + "' (linear | nl1 | nl2)");
  m.label = tokens[0];

  std::optional<LevelChoice> level;
  double c = 5.0, s = 1.5, constant = 1.0;
  bool sqrt_dim = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos) detail::config_error("method option '" + tokens[i] + "' needs key=value");
    const std::string key = tokens[i].substr(0, eq);
    const std::string val = tokens[i].substr(eq + 1);
    if (key == "j" || key == "j1" || key == "J") level = parse_level_choice(val);
    else if (key == "label") m.label = val;
    else if (key == "j0") m.j0 = static_cast<int>(detail::parse_int(val, key));
    else if (key == "kappa") m.kappa = detail::parse_double(val, key);
    else if (key == "kappa_op") m.kappa_op = detail::parse_double(val, key);
    else if (key == "kappa_data") m.kappa_data = detail::parse_double(val, key);
    else if (key == "t") m.t = detail::parse_double(val, key);
    else if (key == "tau") m.tau = detail::parse_double(val, key);
    else if (key == "c") c = detail::parse_double(val, key);
    else if (key == "s") s = detail::parse_double(val, key);
    else if (key == "constant") constant = detail::parse_double(val, key);
    else if (key == "sqrt_dim") sqrt_dim = detail::parse_bool(val, key);
    else if (key == "mode") {
      if (val == "empirical") m.mode = ThresholdMode::EmpiricalDecay;
      else if (val == "theoretical") m.mode = ThresholdMode::Theoretical;
      else detail::config_error("mode must be empirical or theoretical");
    } else {
      detail::config_error("unknown method option '" + key + "'");
    }
  }
  if (!level) detail::config_error("method '" + text + "' needs a level (j, j1 or J)");
  m.level = *level;
  m.level.c = c;
  m.level.s = s;
  m.level.constant = constant;
  m.level.scale = sqrt_dim ? LevelRuleScale::SqrtDim : LevelRuleScale::Dim;
  return m;
}

inline std::string method_text(const MethodSpec& m) {
  std::ostringstream out;
  out << method_kind_name(m.kind) << " label=" << m.label << ' '
      << (m.kind == MethodSpec::Kind::Linear ? "j" : m.kind == MethodSpec::Kind::NL1 ? "j1" : "J")
      << '=';
  switch (m.level.kind) {
    case LevelChoice::Kind::Fixed: out << m.level.level; break;
    case LevelChoice::Kind::Rule: out << "rule"; break;
    case LevelChoice::Kind::Oracle: out << "oracle"; break;
    case LevelChoice::Kind::Adaptive: out << "adaptive"; break;
  }
  out << " c=" << detail::fmt_double(m.level.c) << " s=" << detail::fmt_double(m.level.s)
      << " constant=" << detail::fmt_double(m.level.constant)
      << " sqrt_dim=" << (m.level.scale == LevelRuleScale::SqrtDim ? "true" : "false")
      << " t=" << detail::fmt_double(m.t);
  if (m.tau) out << " tau=" << detail::fmt_double(*m.tau);
  if (m.kind == MethodSpec::Kind::NL1)
    out << " j0=" << m.j0 << " kappa=" << detail::fmt_double(m.kappa) << " mode="
        << (m.mode == ThresholdMode::EmpiricalDecay ? "empirical" : "theoretical");
  if (m.kind == MethodSpec::Kind::NL2)
    out << " kappa_op=" << detail::fmt_double(m.kappa_op)
        << " kappa_data=" << detail::fmt_double(m.kappa_data);
  return out.str();
}

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.replications < 1) detail::config_error("replications must be >= 1");
  if (cfg.delta_grid.empty()) detail::config_error("deltaGrid must be nonempty");
  if (!cfg.tie_epsilon && cfg.epsilon_grid.empty()) detail::config_error("epsilonGrid must be nonempty");
  auto in_range = [](double v) { return v == 0.0 || (v > 0.0 && v < 1.0); };
  for (double v : cfg.delta_grid)
    if (!in_range(v)) detail::config_error("delta values must lie in (0,1) or be 0");
  if (!cfg.tie_epsilon)
    for (double v : cfg.epsilon_grid)
      if (!in_range(v)) detail::config_error("epsilon values must lie in (0,1) or be 0");
  if (cfg.methods.empty()) detail::config_error("at least one method is required");
  for (std::size_t i = 0; i < cfg.methods.size(); ++i)
    for (std::size_t k = i + 1; k < cfg.methods.size(); ++k)
      if (cfg.methods[i].label == cfg.methods[k].label)
        detail::config_error("duplicate method label '" + cfg.methods[i].label + "'");
}

/// Flat "key = value" document; '#' starts a comment; `methods` may repeat.
inline ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      detail::config_error("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string val = detail::trim(line.substr(eq + 1));
    if (key == "kernel") cfg.kernel = parse_kernel(val);
    else if (key == "signal") cfg.signal = parse_signal(val);
    else if (key == "filter") cfg.filter = val;
    else if (key == "J_max") cfg.max_level = static_cast<int>(detail::parse_int(val, key));
    else if (key == "deltaGrid") cfg.delta_grid = detail::parse_grid(val, key);
    else if (key == "epsilonGrid") cfg.epsilon_grid = detail::parse_grid(val, key);
    else if (key == "tieEpsilon") cfg.tie_epsilon = detail::parse_bool(val, key);
    else if (key == "methods" || key == "method") cfg.methods.push_back(parse_method(val));
    else if (key == "replications") cfg.replications = static_cast<int>(detail::parse_int(val, key));
    else if (key == "baseSeed") cfg.base_seed = static_cast<std::uint64_t>(detail::parse_int(val, key));
    else if (key == "threads") cfg.threads = static_cast<int>(detail::parse_int(val, key));
    else detail::config_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  validate(cfg);
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

/// Canonical text; identical configs (up to thread count) give identical text.
inline std::string config_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  auto grid = [](const std::vector<double>& g) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + detail::fmt_double(g[i]);
    return s;
  };
  out << "kernel = " << kernel_text(cfg.kernel) << "\n"
      << "signal = " << signal_text(cfg.signal) << "\n"
      << "filter = " << cfg.filter << "\n"
      << "J_max = " << cfg.max_level << "\n"
      << "deltaGrid = " << grid(cfg.delta_grid) << "\n"
      << "epsilonGrid = " << grid(cfg.epsilon_grid) << "\n"
      << "tieEpsilon = " << (cfg.tie_epsilon ? "true" : "false") << "\n"
      << "replications = " << cfg.replications << "\n"
      << "baseSeed = " << cfg.base_seed << "\n";
  for (const auto& m : cfg.methods) out << "methods = " << method_text(m) << "\n";
  return out.str();
}

/// FNV-1a over the canonical text, as 16 hex digits.
inline std::string config_hash(const ExperimentConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config_text(cfg)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wavinv
