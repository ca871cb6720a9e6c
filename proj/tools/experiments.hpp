// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhelab/harness/report.hpp"

namespace qhelab::cli {

// Invalid command line or config file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

struct ExperimentConfig {
  std::string command;  // run, audit, adversary
  int scheme = 0;
  std::vector<int> n{1}, k{1}, R{1}, traps{0}, kprime{1};
  std::vector<double> gamma{1.5};
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;  // 0: command default
  bool exhaustive = false;
  int depth = 2;
  std::string metric;    // audit
  std::string party;     // adversary
  std::string strategy;  // adversary
  std::string output;    // empty: stdout
};

// "3", "1,2", "1..3" or a mix such as "1..2,5".
std::vector<int> parse_int_grid(const std::string& text);
std::vector<double> parse_double_grid(const std::string& text);

// Overrides fields of `base` with the keys present in a JSON object. Keys use
// the flag names: scheme, n, k, R, gamma, kprime, traps, seed, trials,
// exhaustive, depth, metric, party, strategy, output.
ExperimentConfig apply_config_json(ExperimentConfig base, const nlohmann::json& j);

// Fills the adversary party and strategy when unset: Bob's measure-zx for
// schemes 4 and 7, Alice's probe for scheme 6 or when the party is Alice.
ExperimentConfig with_defaults(ExperimentConfig c);

// Throws ConfigError when the config is outside the supported ranges.
void validate(const ExperimentConfig& c);

// Runs every grid point, `workers` at a time, and returns the reports in grid
// order. Each grid point draws from its own stream split off the seed in
// order, so the output does not depend on the worker count.
std::vector<SchemeReport> run_experiment(const ExperimentConfig& c, int workers = 1);

// Registered schemes and adversary strategies, one JSON object each.
std::vector<nlohmann::ordered_json> scheme_registry();

std::string to_jsonl(const std::vector<SchemeReport>& reports);
bool all_pass(const std::vector<SchemeReport>& reports);

// Worker count from QHELAB_WORKERS, defaulting to the hardware concurrency.
int workers_from_env();

}  // namespace qhelab::cli
