// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <map>
#include <utility>

#include "wavinv/estimators/level_rule.hpp"
#include "wavinv/estimators/linear.hpp"
#include "wavinv/estimators/nonlinear.hpp"
#include "wavinv/harness/config.hpp"

namespace wavinv {

/// Memoizes the level rule per observation, keyed by (c, scale).
class RuleCache {
 public:
  int level(const Observation& obs, double c, LevelRuleScale scale) {
    const auto key = std::make_pair(c, scale);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const int j = select_level(obs.kdelta, obs.delta, c, scale);
    cache_.emplace(key, j);
    return j;
  }

 private:
  std::map<std::pair<double, LevelRuleScale>, int> cache_;
};

inline int resolve_level(const LevelChoice& choice, const MethodSpec& m, const Observation& obs,
                         RuleCache& rules) {
  switch (choice.kind) {
    case LevelChoice::Kind::Fixed:
      return choice.level;
    case LevelChoice::Kind::Rule:
      return rules.level(obs, choice.c, choice.scale);
    case LevelChoice::Kind::Oracle:
      return oracle_level(choice.s, m.t, 1, std::max(obs.delta, obs.epsilon), obs.max_level());
    case LevelChoice::Kind::Adaptive:
      return adaptive_level(obs.epsilon, obs.delta, m.t, 1, obs.max_level(), choice.constant);
  }
  return choice.level;
}

/// Runs one configured method. Throws on estimator errors.
inline Estimate run_method(const MethodSpec& m, const Observation& obs, RuleCache& rules) {
  const int level = resolve_level(m.level, m, obs, rules);
  switch (m.kind) {
    case MethodSpec::Kind::Linear:
      return linear_galerkin(obs, LinearSpec{level, m.t, m.tau});
    case MethodSpec::Kind::NL1:
      return nl1_estimate(obs, NL1Spec{m.j0, level, m.kappa, m.t, m.tau, m.mode});
    case MethodSpec::Kind::NL2:
      return nl2_estimate(obs, NL2Spec{level, m.kappa_op, m.kappa_data, m.t, m.tau});
  }
  detail::fail("run_method", "unknown method kind");
}

}  // namespace wavinv
