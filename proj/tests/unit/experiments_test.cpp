// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "experiments.hpp"

namespace qhelab::cli {
namespace {

TEST(Experiments, GridParsing) {
  EXPECT_EQ(parse_int_grid("3"), (std::vector<int>{3}));
  EXPECT_EQ(parse_int_grid("1..3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(parse_int_grid("1..2,5"), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(parse_double_grid("1.5,1.25"), (std::vector<double>{1.5, 1.25}));
  EXPECT_THROW(parse_int_grid("3..1"), ConfigError);
  EXPECT_THROW(parse_int_grid("x"), ConfigError);
  EXPECT_THROW(parse_int_grid("2a"), ConfigError);
}

TEST(Experiments, ConfigFileOverridesFlags) {
  ExperimentConfig c;
  c.command = "run";
  c.scheme = 4;
  c.seed = 9;
  c = apply_config_json(c, nlohmann::json::parse(R"({"scheme": 10, "n": "1..2", "k": [2], "exhaustive": true})"));
  EXPECT_EQ(c.scheme, 10);
  EXPECT_EQ(c.n, (std::vector<int>{1, 2}));
  EXPECT_EQ(c.k, (std::vector<int>{2}));
  EXPECT_TRUE(c.exhaustive);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_THROW(apply_config_json(c, nlohmann::json::parse(R"({"colour": 1})")), ConfigError);
  EXPECT_THROW(apply_config_json(c, nlohmann::json::parse(R"({"scheme": "four"})")), ConfigError);
}

TEST(Experiments, Validation) {
  ExperimentConfig c;
  c.command = "run";
  c.scheme = 4;
  c.n = {0};
  EXPECT_THROW(validate(c), ConfigError);
  c.n = {1};
  EXPECT_NO_THROW(validate(c));
  c.scheme = 3;
  EXPECT_THROW(validate(c), ConfigError);
  c.command = "audit";
  c.scheme = 8;
  c.metric = "holevo";
  c.n = {3};
  c.k = {3};
  EXPECT_THROW(validate(c), ConfigError);  // dense view too large
  c.command = "adversary";
  c.scheme = 6;
  EXPECT_EQ(with_defaults(c).party, "alice");
  EXPECT_EQ(with_defaults(c).strategy, "probe");
  c.scheme = 4;
  EXPECT_EQ(with_defaults(c).strategy, "measure-zx");
}

TEST(Experiments, ReportDoesNotDependOnWorkers) {
  ExperimentConfig c;
  c.command = "run";
  c.scheme = 8;
  c.n = {1, 2};
  c.k = {1, 2};
  c.trials = 5;
  c.seed = 3;
  const std::string one = to_jsonl(run_experiment(c, 1));
  EXPECT_EQ(one, to_jsonl(run_experiment(c, 4)));
  c.seed = 4;
  EXPECT_NE(one, to_jsonl(run_experiment(c, 1)));
}

TEST(Experiments, Registry) {
  int schemes = 0, strategies = 0;
  for (const auto& j : scheme_registry()) (j["kind"] == "scheme" ? schemes : strategies)++;
  EXPECT_EQ(schemes, 9);
  EXPECT_GE(strategies, 4);
}

}  // namespace
}  // namespace qhelab::cli
