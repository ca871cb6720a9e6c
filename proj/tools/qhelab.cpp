// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

// qhelab: batch runner for the protocol library. Writes JSON-lines reports and
// exits 0 iff every checked row passes; 1 on a failed row; 2 on a usage or
// runtime error, with a JSON error record on stdout.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "experiments.hpp"

namespace {

using qhelab::cli::ExperimentConfig;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

int emit_error(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cout << j.dump() << "\n";
  return kExitError;
}

struct Flags {
  int scheme = 0;
  std::string n = "1", k = "1", R = "1", traps = "0", kprime = "1", gamma = "1.5";
  std::optional<std::uint64_t> seed;
  std::size_t trials = 0;
  bool exhaustive = false;
  int depth = 2;
  std::string metric, party, strategy, output, config;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--scheme", f.scheme, "scheme id")->required();
  cmd->add_option("--n", f.n, "variables or qubits: 3, 1,2 or 1..3");
  cmd->add_option("--k", f.k, "security parameter grid");
  cmd->add_option("--R", f.R, "T-gate count grid");
  cmd->add_option("--traps", f.traps, "trap count grid");
  cmd->add_option("--gamma", f.gamma, "outer locking ratio grid (scheme 9)");
  cmd->add_option("--kprime", f.kprime, "inner locking k grid (scheme 9)");
  cmd->add_option("--seed", f.seed, "root seed (default 1)");
  cmd->add_option("--trials", f.trials, "trials per grid point (0: command default)");
  cmd->add_option("--depth", f.depth, "layer count for random rebit circuits");
  cmd->add_option("--output", f.output, "report path (default stdout)");
  cmd->add_option("--config", f.config, "JSON config; its keys override flags");
}

ExperimentConfig to_config(const std::string& command, const Flags& f) {
  ExperimentConfig c;
  c.command = command;
  c.scheme = f.scheme;
  c.n = qhelab::cli::parse_int_grid(f.n);
  c.k = qhelab::cli::parse_int_grid(f.k);
  c.R = qhelab::cli::parse_int_grid(f.R);
  c.traps = qhelab::cli::parse_int_grid(f.traps);
  c.kprime = qhelab::cli::parse_int_grid(f.kprime);
  c.gamma = qhelab::cli::parse_double_grid(f.gamma);
  if (f.seed) c.seed = *f.seed;
  c.trials = f.trials;
  c.exhaustive = f.exhaustive;
  c.depth = f.depth;
  c.metric = f.metric;
  c.party = f.party;
  c.strategy = f.strategy;
  c.output = f.output;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw qhelab::cli::ConfigError("cannot open config " + f.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw qhelab::cli::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    c = qhelab::cli::apply_config_json(c, j);
  }
  return c;
}

int write_report(const ExperimentConfig& c, const std::string& body) {
  if (c.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out) return emit_error("io", "cannot write " + c.output);
    out << body;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhelab: protocol experiments with JSON-lines reports"};
  app.require_subcommand(1);

  Flags run_f, audit_f, adv_f;
  CLI::App* run = app.add_subcommand("run", "run a scheme over a parameter grid and check correctness");
  add_common(run, run_f);
  run->add_flag("--exhaustive", run_f.exhaustive, "enumerate hidden randomness where feasible");

  CLI::App* audit = app.add_subcommand("audit", "compute security metrics and compare with known values");
  add_common(audit, audit_f);
  audit->add_option("--metric", audit_f.metric, "trace-distance, cmi, comm or holevo")->required();

  CLI::App* adv = app.add_subcommand("adversary", "run cheating-party experiments");
  add_common(adv, adv_f);
  adv->add_option("--party", adv_f.party, "alice or bob");
  adv->add_option("--strategy", adv_f.strategy, "registered strategy id");

  CLI::App* list = app.add_subcommand("list-schemes", "print registered schemes and strategies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what());
  }

  try {
    if (list->parsed()) {
      for (const auto& j : qhelab::cli::scheme_registry()) std::cout << j.dump() << "\n";
      return 0;
    }
    ExperimentConfig c;
    if (run->parsed()) c = to_config("run", run_f);
    if (audit->parsed()) c = to_config("audit", audit_f);
    if (adv->parsed()) c = to_config("adversary", adv_f);
    const auto reports = qhelab::cli::run_experiment(c, qhelab::cli::workers_from_env());
    if (const int rc = write_report(c, qhelab::cli::to_jsonl(reports))) return rc;
    return qhelab::cli::all_pass(reports) ? 0 : kExitFail;
  } catch (const qhelab::cli::ConfigError& e) {
    return emit_error("usage", e.what());
  } catch (const std::exception& e) {
    return emit_error("runtime", e.what());
  }
}
