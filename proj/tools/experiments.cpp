// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "qhelab/linpoly.hpp"
#include "qhelab/qhe.hpp"
#include "qhelab/qsim/ops.hpp"
#include "qhelab/rebit_schemes/circuit.hpp"
#include "qhelab/rebit_schemes/schemes.hpp"
#include "qhelab/seclab.hpp"

namespace qhelab::cli {

namespace {

constexpr double kExact = 1e-9;
constexpr std::size_t kLeafBudget = std::size_t{1} << 21;

bool is_linpoly(int s) { return s == 4 || s == 7 || s == 8 || s == 9 || s == 10; }
bool is_view_scheme(int s) { return s == 4 || s == 7 || s == 8 || s == 10; }

std::vector<Bit> bits_of(std::uint64_t v, int n) {
  std::vector<Bit> b(n);
  for (int i = 0; i < n; ++i) b[i] = (v >> i) & 1;
  return b;
}

std::vector<Bit> ones(int n) { return std::vector<Bit>(n, 1); }

SchemeReport new_report(const ExperimentConfig& c, const std::string& scheme) {
  SchemeReport r;
  r.scheme = scheme;
  r.seed = c.seed;
  return r;
}

std::string scheme_name(int s) { return "scheme" + std::to_string(s); }

std::size_t trials_or(const ExperimentConfig& c, std::size_t fallback) { return c.trials ? c.trials : fallback; }

// Grid point task: returns the reports for that point.
using Task = std::function<std::vector<SchemeReport>(Rng&)>;

// ---- run ----

using LinRunner = std::function<LinpolyRun(const std::vector<Bit>&, const LinearPolynomial&, Rng&)>;

LinRunner linpoly_runner(int scheme, int k, double gamma, int kprime) {
  switch (scheme) {
    case 4: return [k](const auto& x, const auto& p, Rng& r) { return run_scheme4(x, p, k, r); };
    case 7: return [k](const auto& x, const auto& p, Rng& r) { return run_scheme7(x, p, k, r); };
    case 8: return [k](const auto& x, const auto& p, Rng& r) { return run_scheme8(x, p, k, r); };
    case 9: return [gamma, kprime](const auto& x, const auto& p, Rng& r) { return run_scheme9(x, p, gamma, kprime, r); };
    case 10: return [k](const auto& x, const auto& p, Rng& r) { return run_scheme10(x, p, k, r); };
  }
  throw ConfigError("not a linear-polynomial scheme");
}

// Bob-to-Alice bits in full mode; negative when no closed form is registered.
double expected_bob_bits(int scheme, int n, int k) {
  switch (scheme) {
    case 4: return n * k + 1;
    case 7: return k + 1;
    case 8: return k + 2;
    case 10: return k + 1;
  }
  return -1;
}

double expected_alice_bits(int scheme, int n, int k) {
  if (scheme == 4 || scheme == 7 || scheme == 10) return 2 * n * k;
  return -1;
}

void add_count(SchemeReport& r, const std::string& metric, double expected, std::size_t observed) {
  if (expected < 0)
    r.add(metric, 0, static_cast<double>(observed), 0, Check::Report, "count");
  else
    r.add(metric, expected, static_cast<double>(observed), 0, Check::Equal, "count");
}

SchemeReport linpoly_point(const ExperimentConfig& c, int n, int k, double gamma, int kprime, Rng& rng) {
  const int s = c.scheme;
  SchemeReport rep = new_report(c, scheme_name(s));
  rep.params["n"] = n;
  if (s == 9) {
    rep.params["gamma"] = gamma;
    rep.params["kprime"] = kprime;
    rep.params["outer_k"] = scheme9_outer_k(n, gamma);
  } else {
    rep.params["k"] = k;
  }
  const LinRunner run = linpoly_runner(s, k, gamma, kprime);
  const std::uint64_t inputs = std::uint64_t{1} << n;
  const std::size_t combos = inputs * inputs * 2;

  std::size_t failures = 0, evaluations = 0;
  double weight_error = 0.0;
  bool exhaustive = c.exhaustive && (s == 4 || s == 7 || s == 10);
  if (exhaustive) {
    // The all-zero path depth bounds the leaf count from below.
    Rng probe = Rng::from_tape({});
    run(ones(n), LinearPolynomial{n, ones(n), 1}, probe);
    const std::size_t depth = probe.drawn().size();
    exhaustive = depth < 40 && (std::size_t{1} << depth) * combos <= kLeafBudget;
  }
  if (exhaustive) {
    const std::size_t budget = std::max<std::size_t>(kLeafBudget / combos, 1);
    try {
      for (std::uint64_t xv = 0; xv < inputs; ++xv)
        for (std::uint64_t av = 0; av < inputs; ++av)
          for (Bit cc = 0; cc < 2; ++cc) {
            const std::vector<Bit> x = bits_of(xv, n);
            const LinearPolynomial p{n, bits_of(av, n), cc};
            double total = 0.0;
            enumerate_tapes(
                [&](Rng& tape) {
                  failures += run(x, p, tape).value() != p.eval(x);
                  ++evaluations;
                  total += tape.weight();
                },
                budget);
            weight_error = std::max(weight_error, std::abs(total - 1.0));
          }
    } catch (const std::length_error&) {
      // Draw tree too large for exact enumeration: fall back to sampling.
      exhaustive = false;
      failures = evaluations = 0;
      weight_error = 0.0;
    }
  }
  if (!exhaustive) {
    const std::size_t trials = trials_or(c, 200);
    for (std::uint64_t xv = 0; xv < inputs; ++xv)
      for (std::uint64_t av = 0; av < inputs; ++av)
        for (Bit cc = 0; cc < 2; ++cc) {
          const std::vector<Bit> x = bits_of(xv, n);
          const LinearPolynomial p{n, bits_of(av, n), cc};
          for (std::size_t t = 0; t < trials; ++t) {
            failures += run(x, p, rng).value() != p.eval(x);
            ++evaluations;
          }
        }
  }
  rep.params["randomness"] = exhaustive ? "exhaustive" : "sampled";
  rep.add("evaluation_failures", 0, static_cast<double>(failures), 0, Check::Equal,
          exhaustive ? "enumeration" : "oracle");
  rep.add("evaluations", 0, static_cast<double>(evaluations), 0, Check::Report, "count");
  if (exhaustive) rep.add("enumeration_weight_error", 0, weight_error, kExact, Check::AtMost, "enumeration");

  const LinpolyRun sample = run(ones(n), LinearPolynomial{n, ones(n), 1}, rng);
  add_count(rep, "bob_to_alice_bits", expected_bob_bits(s, n, k), comm_audit(sample.transcript, Direction::BobToAlice));
  add_count(rep, "alice_to_bob_bits", expected_alice_bits(s, n, k),
            comm_audit(sample.transcript, Direction::AliceToBob));
  return rep;
}

std::vector<SchemeReport> rebit_point(const ExperimentConfig& c, int n, Rng& rng) {
  const RebitScheme scheme = c.scheme == 1 ? RebitScheme::One : RebitScheme::Two;
  std::vector<SchemeReport> out;
  const std::size_t trials = trials_or(c, 20);
  for (std::size_t t = 0; t < trials; ++t) {
    const AlmostCommutingCircuit circ = random_almost_commuting(n, c.depth, scheme, rng);
    const Vector in = random_rebit_input(n, scheme, rng);
    RebitRun run = scheme == RebitScheme::One ? run_scheme1(circ, in, rng) : run_scheme2(circ, in, rng);
    SchemeReport rep = std::move(run.report);
    rep.seed = c.seed;
    rep.params["depth"] = c.depth;
    rep.params["trial"] = t;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<SchemeReport> scheme5_point(const ExperimentConfig& c, int n, int R, int k, Rng& rng) {
  std::vector<SchemeReport> out;
  const std::size_t trials = trials_or(c, 30);
  for (std::size_t t = 0; t < trials; ++t) {
    const CliffordTCircuit circ = random_clifford_t(n, R, 4 * n, rng);
    const Vector in = random_state(n, rng).vector();
    QheRun run = run_scheme5(circ, in, k, rng);
    SchemeReport rep = std::move(run.report);
    rep.seed = c.seed;
    rep.params["trial"] = t;
    out.push_back(std::move(rep));
  }
  return out;
}

double row_value(const SchemeReport& r, const std::string& metric) {
  for (const MetricRow& row : r.rows)
    if (row.metric == metric) return row.observed;
  throw std::logic_error("missing report row " + metric);
}

SchemeReport scheme6_point(const ExperimentConfig& c, int n, int R, int k, int traps, Rng& rng) {
  SchemeReport rep = new_report(c, "scheme6");
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["t_gates"] = R;
  rep.params["traps"] = traps;
  rep.params["behavior"] = "honest";
  const std::size_t trials = trials_or(c, 100);
  std::size_t aborts = 0;
  double min_fidelity = 1.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const CliffordTCircuit circ = random_clifford_t(n, R, 4 * n, rng);
    const Vector in = random_state(n, rng).vector();
    const Scheme6Run run = run_scheme6(circ, in, k, traps, rng);
    aborts += run.aborted;
    if (!run.aborted) min_fidelity = std::min(min_fidelity, row_value(run.run.report, "output_fidelity"));
  }
  rep.add_rate("abort_rate", aborts, trials, 0.0, Check::Equal, "monte-carlo");
  rep.add("min_output_fidelity", 1.0, min_fidelity, 1e-8, Check::AtLeast, "oracle");
  return rep;
}

// ---- audit ----

SchemeReport trace_distance_point(const ExperimentConfig& c, int n, int k) {
  const ViewScheme vs = view_scheme_from_id(c.scheme);
  SchemeReport rep = new_report(c, scheme_name(c.scheme));
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["metric"] = "trace-distance";
  for (int i = 0; i < n; ++i) {
    const double d = per_bit_distance(vs, n, k, i);
    const std::string m = "per_bit_trace_distance_" + std::to_string(i);
    if (c.scheme == 4)
      rep.add(m, std::ldexp(1.0, -k), d, kExact, Check::Equal, "constant");
    else if (c.scheme == 8)
      rep.add(m, std::pow(2.0, -0.5 * k), d, kExact, Check::Equal, "constant");
    else
      rep.add(m, 0, d, 0, Check::Report, "enumeration");
  }
  if (c.scheme == 4)
    rep.add("guess_rate", 0.5 + std::ldexp(1.0, -k - 1), 0.5 + 0.5 * per_bit_distance(vs, n, k, 0), kExact,
            Check::Equal, "constant");
  if (c.scheme == 7 || c.scheme == 10) {
    // Every pair of distinct inputs is equally far apart.
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
      for (std::uint64_t b = a + 1; b < (std::uint64_t{1} << n); ++b) {
        const double d = privacy_distance(vs, n, k, bits_of(a, n), bits_of(b, n));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    if (n > 1) rep.add("pairwise_distance_spread", 0, hi - lo, kExact, Check::Equal, "enumeration");
    rep.add("pairwise_distance", 0, hi, 0, Check::Report, "enumeration");
  }
  return rep;
}

SchemeReport cmi_point(const ExperimentConfig& c, int n, int k) {
  const ViewScheme vs = view_scheme_from_id(c.scheme);
  SchemeReport rep = new_report(c, scheme_name(c.scheme));
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["metric"] = "cmi";
  const OutcomeTable table = outcome_table(vs, n, k);
  const double info = table_information(table);
  const double given = table_information_given_bases(table);
  if (c.scheme == 7 && k == 1)
    rep.add("cmi", cmi_formula("k1_exact", n, k), info, kExact, Check::Equal, "constant");
  else if (c.scheme == 7 && n == 2)
    rep.add("cmi", cmi_formula("n2_exact", n, k), info, kExact, Check::Equal, "constant");
  else
    rep.add("cmi", 0, info, 0, Check::Report, "enumeration");
  if (c.scheme == 7) {
    rep.add("cmi_given_bases", n, given, kExact, Check::Equal, "enumeration");
    rep.add("cmi_lower_bound", n - k, info, kExact, Check::AtLeast, "enumeration");
    rep.add("two_bit_lower", 0, cmi_formula("two_bit_lower", n, k), 0, Check::Report, "constant");
  } else if (c.scheme == 8) {
    rep.add("cmi_given_bases", n / 2, given, kExact, Check::AtLeast, "enumeration");
  } else {
    rep.add("cmi_given_bases", 0, given, 0, Check::Report, "enumeration");
  }
  return rep;
}

SchemeReport holevo_point(const ExperimentConfig& c, int n, int k) {
  const ViewScheme vs = view_scheme_from_id(c.scheme);
  SchemeReport rep = new_report(c, scheme_name(c.scheme));
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["metric"] = "holevo";
  const double chi = view_holevo(vs, n, k);
  const double info = table_information(outcome_table(vs, n, k));
  // Pair-scheme views are diagonal in the measured frame, so the fixed
  // measurement attains the Holevo quantity; otherwise it only bounds it.
  if (c.scheme == 8)
    rep.add("holevo", info, chi, kExact, Check::AtLeast, "enumeration");
  else
    rep.add("holevo", info, chi, kExact, Check::Equal, "enumeration");
  rep.add("holevo_upper_bound", n, chi, kExact, Check::AtMost, "constant");
  return rep;
}

SchemeReport comm_point(const ExperimentConfig& c, int n, int k, int R, Rng& rng) {
  const int s = c.scheme;
  SchemeReport rep = new_report(c, scheme_name(s));
  rep.params["n"] = n;
  rep.params["metric"] = "comm";
  if (s == 1 || s == 2) {
    rep.params["depth"] = c.depth;
    const RebitScheme scheme = s == 1 ? RebitScheme::One : RebitScheme::Two;
    const AlmostCommutingCircuit circ = random_almost_commuting(n, c.depth, scheme, rng);
    const RebitRun run = scheme == RebitScheme::One ? run_scheme1(circ, random_rebit_input(n, scheme, rng), rng)
                                                    : run_scheme2(circ, random_rebit_input(n, scheme, rng), rng);
    // Scheme 2 returns both Pauli bits of every data qubit; Scheme 1 only
    // those of teleported-away qubits.
    add_count(rep, "bob_to_alice_bits", s == 2 ? 2.0 * n : -1, comm_audit(run.transcript, Direction::BobToAlice));
    add_count(rep, "alice_to_bob_bits", -1, comm_audit(run.transcript, Direction::AliceToBob));
    return rep;
  }
  if (s == 5) {
    rep.params["k"] = k;
    rep.params["t_gates"] = R;
    const CliffordTCircuit circ = random_clifford_t(n, R, 4 * n, rng);
    const QheRun run = run_scheme5(circ, random_state(n, rng).vector(), k, rng);
    add_count(rep, "lower_level_instances", 2 * n + R, run.instances);
    add_count(rep, "key_variables", 2 * n + 4 * R, run.variables);
    add_count(rep, "bob_to_alice_bits", -1, comm_audit(run.transcript, Direction::BobToAlice));
    add_count(rep, "alice_to_bob_bits", -1, comm_audit(run.transcript, Direction::AliceToBob));
    return rep;
  }
  rep.params["k"] = k;
  const double gamma = 1.5;
  if (s == 9) rep.params["gamma"] = gamma;
  const LinpolyRun run = linpoly_runner(s, k, gamma, 1)(ones(n), LinearPolynomial{n, ones(n), 1}, rng);
  add_count(rep, "bob_to_alice_bits", expected_bob_bits(s, n, k), comm_audit(run.transcript, Direction::BobToAlice));
  add_count(rep, "alice_to_bob_bits", expected_alice_bits(s, n, k), comm_audit(run.transcript, Direction::AliceToBob));
  return rep;
}

// ---- adversary ----

SchemeReport bob_point(const ExperimentConfig& c, int n, int k, Rng& rng) {
  SchemeReport rep = new_report(c, scheme_name(c.scheme));
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["party"] = "bob";
  rep.params["strategy"] = c.strategy;
  const std::size_t trials = trials_or(c, 10000);
  if (c.strategy == "honest") {
    const LinRunner run = linpoly_runner(c.scheme, k, 0, 0);
    std::size_t errors = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Bit> x(n), a(n);
      for (int i = 0; i < n; ++i) x[i] = rng.bit(), a[i] = rng.bit();
      const LinearPolynomial p{n, a, rng.bit()};
      errors += run(x, p, rng).value() != p.eval(x);
    }
    rep.add_rate("evaluation_error_rate", errors, trials, 0.0, Check::Equal, "monte-carlo");
    return rep;
  }
  const BobAttack a = cheating_bob(c.scheme, n, k, trials, rng);
  if (c.scheme == 4)
    rep.add("guess_rate", 0.5 + std::ldexp(1.0, -k - 1), a.guess_rate, kExact, Check::Equal, "constant");
  else
    rep.add("guess_rate", 0, a.guess_rate, 0, Check::Report, "enumeration");
  rep.add_rate("evaluation_error_rate", a.errors.successes, a.errors.trials, 0.1,
               k == 1 ? Check::AtLeast : Check::Report, "monte-carlo");
  return rep;
}

SchemeReport alice_point(const ExperimentConfig& c, int n, int k, Rng& rng) {
  SchemeReport rep = new_report(c, scheme_name(c.scheme));
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["party"] = "alice";
  rep.params["strategy"] = c.strategy;
  const std::size_t trials = trials_or(c, 1000);
  const AliceAttack a = cheating_alice(c.scheme, c.strategy, n, k, trials, rng);
  if (c.strategy == "probe") {
    // A shared basis hides individual coefficients: with n > 1 Scheme 7 only
    // reveals their parity, so the rate is recorded without a target.
    const bool per_variable = c.scheme == 4 || n == 1;
    rep.add_rate("identification_rate", a.identified.successes, a.identified.trials, per_variable ? 1.0 : 0.0,
                 per_variable ? Check::Equal : Check::Report, "monte-carlo");
    rep.add_rate("distributed_error_rate", a.errors.successes, a.errors.trials, 0.2, Check::AtLeast, "monte-carlo");
  } else if (c.strategy == "honest") {
    rep.add_rate("identification_rate", a.identified.successes, a.identified.trials, 0.5, Check::Wilson,
                 "monte-carlo");
    rep.add_rate("distributed_error_rate", a.errors.successes, a.errors.trials, 0.0, Check::Equal, "monte-carlo");
  } else {
    rep.add_rate("identification_rate", a.identified.successes, a.identified.trials, 0, Check::Report, "monte-carlo");
    rep.add_rate("distributed_error_rate", a.errors.successes, a.errors.trials, 0, Check::Report, "monte-carlo");
  }
  return rep;
}

SchemeReport trap_point(const ExperimentConfig& c, int n, int R, int k, int traps, Rng& rng) {
  SchemeReport rep = new_report(c, "scheme6");
  rep.params["n"] = n;
  rep.params["k"] = k;
  rep.params["t_gates"] = R;
  rep.params["traps"] = traps;
  rep.params["party"] = "alice";
  rep.params["strategy"] = c.strategy;
  const CliffordTCircuit circ = random_clifford_t(n, R, 4 * n, rng);
  const TrapAttack a = trap_detection(circ, k, traps, c.strategy, trials_or(c, 400), rng);
  if (c.strategy == "honest")
    rep.add_rate("abort_rate", a.aborts.successes, a.aborts.trials, 0.0, Check::Equal, "monte-carlo");
  else if (c.strategy == "probe" && traps >= 4)
    rep.add_rate("abort_rate", a.aborts.successes, a.aborts.trials, 0.5, Check::AtLeast, "monte-carlo");
  else
    rep.add_rate("abort_rate", a.aborts.successes, a.aborts.trials, 0, Check::Report, "monte-carlo");
  return rep;
}

// ---- grid ----

template <typename F>
Task single(F f) {
  return [f](Rng& rng) { return std::vector<SchemeReport>{f(rng)}; };
}

std::vector<Task> build_tasks(const ExperimentConfig& c) {
  std::vector<Task> tasks;
  const int s = c.scheme;
  if (c.command == "run") {
    if (s == 9) {
      for (int n : c.n)
        for (double g : c.gamma)
          for (int kp : c.kprime) tasks.push_back(single([=](Rng& r) { return linpoly_point(c, n, 0, g, kp, r); }));
    } else if (is_linpoly(s)) {
      for (int n : c.n)
        for (int k : c.k) tasks.push_back(single([=](Rng& r) { return linpoly_point(c, n, k, 0, 0, r); }));
    } else if (s == 1 || s == 2) {
      for (int n : c.n) tasks.push_back([=](Rng& r) { return rebit_point(c, n, r); });
    } else if (s == 5) {
      for (int n : c.n)
        for (int R : c.R)
          for (int k : c.k) tasks.push_back([=](Rng& r) { return scheme5_point(c, n, R, k, r); });
    } else if (s == 6) {
      for (int n : c.n)
        for (int R : c.R)
          for (int k : c.k)
            for (int m : c.traps) tasks.push_back(single([=](Rng& r) { return scheme6_point(c, n, R, k, m, r); }));
    }
    return tasks;
  }
  if (c.command == "audit") {
    for (int n : c.n) {
      if (c.metric == "comm") {
        for (int k : c.k)
          for (int R : c.R) tasks.push_back(single([=](Rng& r) { return comm_point(c, n, k, R, r); }));
        continue;
      }
      for (int k : c.k) {
        if (c.metric == "trace-distance") tasks.push_back(single([=](Rng&) { return trace_distance_point(c, n, k); }));
        if (c.metric == "cmi") tasks.push_back(single([=](Rng&) { return cmi_point(c, n, k); }));
        if (c.metric == "holevo") tasks.push_back(single([=](Rng&) { return holevo_point(c, n, k); }));
      }
    }
    return tasks;
  }
  // adversary
  for (int n : c.n)
    for (int k : c.k) {
      if (s == 6) {
        for (int R : c.R)
          for (int m : c.traps) tasks.push_back(single([=](Rng& r) { return trap_point(c, n, R, k, m, r); }));
      } else if (c.party == "bob") {
        tasks.push_back(single([=](Rng& r) { return bob_point(c, n, k, r); }));
      } else {
        tasks.push_back(single([=](Rng& r) { return alice_point(c, n, k, r); }));
      }
    }
  return tasks;
}

void need(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void check_range(const std::vector<int>& v, const std::string& name, int lo, int hi) {
  need(!v.empty(), name + " grid is empty");
  for (int x : v)
    need(x >= lo && x <= hi, name + " = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
}

std::vector<int> ints_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return {v.get<int>()};
  if (v.is_string()) return parse_int_grid(v.get<std::string>());
  if (v.is_array()) {
    std::vector<int> out;
    for (const auto& e : v) {
      need(e.is_number_integer(), "grid entries must be integers");
      out.push_back(e.get<int>());
    }
    return out;
  }
  throw ConfigError("grid must be an integer, a list or a range string");
}

std::vector<double> doubles_from_json(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_string()) return parse_double_grid(v.get<std::string>());
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& e : v) {
      need(e.is_number(), "grid entries must be numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  throw ConfigError("grid must be a number, a list or a string");
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + s + "'");
  }
  need(used == s.size(), "not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  need(!parts.empty(), "empty grid");
  return parts;
}

}  // namespace

std::vector<int> parse_int_grid(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split_commas(text)) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const int lo = parse_int(part.substr(0, dots)), hi = parse_int(part.substr(dots + 2));
    need(lo <= hi, "empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split_commas(text)) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ConfigError("not a number: '" + part + "'");
    }
    need(used == part.size(), "not a number: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

ExperimentConfig apply_config_json(ExperimentConfig c, const nlohmann::json& j) {
  need(j.is_object(), "config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "scheme") c.scheme = v.get<int>();
      else if (key == "n") c.n = ints_from_json(v);
      else if (key == "k") c.k = ints_from_json(v);
      else if (key == "R") c.R = ints_from_json(v);
      else if (key == "traps") c.traps = ints_from_json(v);
      else if (key == "kprime") c.kprime = ints_from_json(v);
      else if (key == "gamma") c.gamma = doubles_from_json(v);
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "trials") c.trials = v.get<std::size_t>();
      else if (key == "exhaustive") c.exhaustive = v.get<bool>();
      else if (key == "depth") c.depth = v.get<int>();
      else if (key == "metric") c.metric = v.get<std::string>();
      else if (key == "party") c.party = v.get<std::string>();
      else if (key == "strategy") c.strategy = v.get<std::string>();
      else if (key == "output") c.output = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("config key '" + key + "' has the wrong type");
    }
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  const int s = c.scheme;
  need(c.command == "run" || c.command == "audit" || c.command == "adversary", "unknown command '" + c.command + "'");
  check_range(c.k, "k", 1, 6);
  check_range(c.R, "R", 0, 3);
  check_range(c.traps, "traps", 0, 8);
  check_range(c.kprime, "kprime", 1, 4);
  need(!c.gamma.empty(), "gamma grid is empty");
  for (double g : c.gamma) need(g > 1.0 && g < 2.0, "gamma must lie in (1, 2)");
  need(c.depth >= 0 && c.depth <= 6, "depth outside [0, 6]");

  if (c.command == "run") {
    need(s == 1 || s == 2 || s == 5 || s == 6 || is_linpoly(s), "run covers schemes 1, 2, 4, 5, 6, 7, 8, 9, 10");
    check_range(c.n, "n", 1, 3);
  } else if (c.command == "audit") {
    need(c.metric == "trace-distance" || c.metric == "cmi" || c.metric == "comm" || c.metric == "holevo",
         "metric must be trace-distance, cmi, comm or holevo");
    if (c.metric == "comm") {
      need(s == 1 || s == 2 || s == 5 || is_linpoly(s), "comm audit covers schemes 1, 2, 4, 5, 7, 8, 9, 10");
      check_range(c.n, "n", 1, 3);
    } else {
      need(is_view_scheme(s), c.metric + " audit covers schemes 4, 7, 8, 10");
      check_range(c.n, "n", 1, 3);
      for (int n : c.n)
        for (int k : c.k) {
          const int qubits = s == 8 ? k * (n + 1) : 2 * n * k;
          need(qubits <= 12, "view exceeds the 12-qubit cap");
          if (c.metric == "holevo" || s == 8) need(qubits <= 10, "dense view exceeds 10 qubits");
        }
    }
  } else {
    need(s == 4 || s == 7 || s == 6, "adversary covers schemes 4, 6, 7");
    check_range(c.n, "n", 1, 3);
    need(c.party == "alice" || c.party == "bob", "party must be alice or bob");
    if (c.party == "bob") {
      need(s != 6, "scheme 6 adversary is a cheating Alice");
      need(c.strategy == "measure-zx" || c.strategy == "honest", "unknown Bob strategy '" + c.strategy + "'");
    } else {
      bool known = false;
      for (const AliceStrategyInfo& info : alice_strategies()) known |= info.id == c.strategy;
      need(known, "unknown Alice strategy '" + c.strategy + "'");
    }
  }
}

ExperimentConfig with_defaults(ExperimentConfig c) {
  if (c.command != "adversary") return c;
  if (c.party.empty()) c.party = c.scheme == 6 ? "alice" : "bob";
  if (c.strategy.empty()) c.strategy = c.party == "bob" ? "measure-zx" : "probe";
  return c;
}

std::vector<SchemeReport> run_experiment(const ExperimentConfig& config, int workers) {
  const ExperimentConfig c = with_defaults(config);
  validate(c);
  const std::vector<Task> tasks = build_tasks(c);
  Rng root(c.seed);
  std::vector<Rng> streams;
  for (std::size_t i = 0; i < tasks.size(); ++i) streams.push_back(root.split());

  std::vector<std::vector<SchemeReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i](streams[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int pool = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> threads;
  for (int w = 1; w < pool; ++w) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SchemeReport> out;
  for (auto& r : results)
    for (auto& rep : r) out.push_back(std::move(rep));
  return out;
}

std::vector<nlohmann::ordered_json> scheme_registry() {
  struct Entry {
    int id;
    const char* name;
    const char* commands;
  };
  const Entry entries[] = {
      {1, "rebit gadgets, R_z on the first qubit", "run,audit:comm"},
      {2, "rebit gadgets on every qubit", "run,audit:comm"},
      {4, "per-bit pad linear polynomial", "run,audit,adversary"},
      {5, "Clifford+T with garden-hose T gates", "run,audit:comm"},
      {6, "Clifford+T with trap qubits", "run,adversary"},
      {7, "shared-basis linear polynomial", "run,audit,adversary"},
      {8, "data-locking linear polynomial", "run,audit"},
      {9, "nested data-locking linear polynomial", "run,audit:comm"},
      {10, "classical shared-basis linear polynomial", "run,audit"},
  };
  std::vector<nlohmann::ordered_json> out;
  for (const Entry& e : entries) {
    nlohmann::ordered_json j;
    j["kind"] = "scheme";
    j["id"] = e.id;
    j["name"] = e.name;
    j["commands"] = e.commands;
    out.push_back(std::move(j));
  }
  for (const AdversaryStrategy& s : adversary_strategies()) {
    nlohmann::ordered_json j;
    j["kind"] = "strategy";
    j["party"] = s.party == Party::Alice ? "alice" : "bob";
    j["id"] = s.id;
    j["description"] = s.description;
    out.push_back(std::move(j));
  }
  return out;
}

std::string to_jsonl(const std::vector<SchemeReport>& reports) {
  std::string s;
  for (const SchemeReport& r : reports) s += r.to_jsonl();
  return s;
}

bool all_pass(const std::vector<SchemeReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SchemeReport& r) { return r.all_pass(); });
}

int workers_from_env() {
  if (const char* env = std::getenv("QHELAB_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw ConfigError("QHELAB_WORKERS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace qhelab::cli
