// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/harness/report.hpp"

#include <cmath>
#include <cstdio>

namespace qhelab {

namespace {

const char* check_name(Check c) {
  switch (c) {
    case Check::Equal: return "equal";
    case Check::AtLeast: return "at-least";
    case Check::AtMost: return "at-most";
    case Check::Wilson: return "wilson";
    case Check::Report: return "report";
  }
  return "?";
}

bool evaluate(const MetricRow& r) {
  switch (r.check) {
    case Check::Equal: return std::abs(r.observed - r.expected) <= r.tolerance;
    case Check::AtLeast: return r.observed >= r.expected - r.tolerance;
    case Check::AtMost: return r.observed <= r.expected + r.tolerance;
    case Check::Wilson: return r.ci_low <= r.expected && r.expected <= r.ci_high;
    case Check::Report: return true;
  }
  return false;
}

}  // namespace

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

MetricRow& SchemeReport::add(const std::string& metric, double expected, double observed, double tolerance,
                             Check check, const std::string& provenance) {
  MetricRow r;
  r.metric = metric;
  r.expected = expected;
  r.observed = observed;
  r.tolerance = tolerance;
  r.check = check;
  r.provenance = provenance;
  r.pass = evaluate(r);
  rows.push_back(r);
  return rows.back();
}

MetricRow& SchemeReport::add_rate(const std::string& metric, std::size_t successes, std::size_t trials,
                                  double expected, Check check, const std::string& provenance) {
  MetricRow r;
  r.metric = metric;
  r.expected = expected;
  r.observed = trials ? static_cast<double>(successes) / trials : 0.0;
  r.check = check;
  r.provenance = provenance;
  r.successes = successes;
  r.trials = trials;
  std::tie(r.ci_low, r.ci_high) = wilson_interval(successes, trials);
  r.pass = evaluate(r);
  rows.push_back(r);
  return rows.back();
}

bool SchemeReport::all_pass() const {
  for (const MetricRow& r : rows)
    if (!r.pass) return false;
  return true;
}

std::vector<nlohmann::ordered_json> SchemeReport::to_json_rows() const {
  std::vector<nlohmann::ordered_json> out;
  for (const MetricRow& r : rows) {
    nlohmann::ordered_json j;
    j["scheme"] = scheme;
    j["params"] = params;
    j["metric"] = r.metric;
    j["expected"] = r.expected;
    j["observed"] = r.observed;
    j["tolerance"] = r.tolerance;
    j["check"] = check_name(r.check);
    if (r.trials) {
      j["successes"] = r.successes;
      j["trials"] = r.trials;
      j["ci95"] = {r.ci_low, r.ci_high};
    }
    j["pass"] = r.pass;
    j["seed"] = seed;
    j["provenance"] = r.provenance;
    out.push_back(std::move(j));
  }
  return out;
}

std::string SchemeReport::to_jsonl() const {
  std::string s;
  for (const auto& j : to_json_rows()) s += j.dump() + "\n";
  return s;
}

}  // namespace qhelab
