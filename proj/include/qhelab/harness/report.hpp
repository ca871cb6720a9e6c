// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qhelab {

enum class Check {
  Equal,    // |observed - expected| <= tolerance
  AtLeast,  // observed >= expected - tolerance
  AtMost,   // observed <= expected + tolerance
  Wilson,   // expected lies inside the 95% Wilson interval of observed
  Report    // recorded only
};

struct MetricRow {
  std::string metric;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  Check check = Check::Equal;
  bool pass = false;
  std::string provenance;
  std::size_t successes = 0;
  std::size_t trials = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct SchemeReport {
  std::string scheme;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::vector<MetricRow> rows;

  MetricRow& add(const std::string& metric, double expected, double observed, double tolerance, Check check,
                 const std::string& provenance);
  // Monte Carlo rate; checked against [lo, hi] bounds on the rate itself and
  // reported with its Wilson interval.
  MetricRow& add_rate(const std::string& metric, std::size_t successes, std::size_t trials, double expected,
                      Check check, const std::string& provenance);

  bool all_pass() const;
  std::vector<nlohmann::ordered_json> to_json_rows() const;
  std::string to_jsonl() const;
};

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

// Round-trippable shortest formatting used in reports.
std::string format_double(double v);

}  // namespace qhelab
