// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   acceptance [path/to/qhelab]
// The CLI path is needed for the reproducibility criterion.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "experiments.hpp"
#include "qhelab/linpoly.hpp"
#include "qhelab/qhe.hpp"
#include "qhelab/qsim.hpp"
#include "qhelab/rebit.hpp"
#include "qhelab/rebit_schemes/circuit.hpp"
#include "qhelab/rebit_schemes/schemes.hpp"
#include "qhelab/rebit_schemes/views.hpp"
#include "qhelab/seclab.hpp"

namespace {

using namespace qhelab;

const Complex kI(0, 1);
constexpr double kExact = 1e-9;
constexpr double kFid = 1e-8;

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(12);
    s << what << ": got " << got << ", want " << want;
    require(std::abs(got - want) <= tol, s.str());
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- independent oracles ----

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix ry(double t) { return mat2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2)); }

// Little-endian: local qubit i of `u` is register qubit qs[i].
Vector apply_on(const Vector& psi, const Matrix& u, const std::vector<int>& qs) {
  Vector out = Vector::Zero(psi.size());
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    if (psi(x) == Complex(0)) continue;
    Eigen::Index col = 0, rest = x;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      col |= ((x >> qs[i]) & 1) << i;
      rest &= ~(Eigen::Index{1} << qs[i]);
    }
    for (Eigen::Index row = 0; row < u.rows(); ++row) {
      Eigen::Index y = rest;
      for (std::size_t i = 0; i < qs.size(); ++i) y |= ((row >> i) & 1) << qs[i];
      out(y) += u(row, col) * psi(x);
    }
  }
  return out;
}

double overlap(const Vector& a, const Vector& b) { return std::norm(a.dot(b)); }

Matrix oracle_gate(const std::string& name) {
  const double h = 1 / std::sqrt(2.0);
  if (name == "h") return mat2(h, h, h, -h);
  if (name == "p") return mat2(1, 0, 0, kI);
  if (name == "t") return mat2(1, 0, 0, std::exp(kI * (kPi / 4)));
  if (name == "x") return mat2(0, 1, 1, 0);
  if (name == "y") return mat2(0, -kI, kI, 0);
  if (name == "z") return mat2(1, 0, 0, -1);
  if (name == "cnot") {
    // Local qubit 0 controls local qubit 1.
    Matrix m = Matrix::Zero(4, 4);
    for (int idx = 0; idx < 4; ++idx) {
      const int c = idx & 1, t = idx >> 1;
      m(c | ((t ^ c) << 1), idx) = 1;
    }
    return m;
  }
  throw std::invalid_argument("no oracle for gate " + name);
}

Vector clifford_t_oracle(const CliffordTCircuit& c, Vector psi) {
  for (const CliffordTGate& g : c.gates) psi = apply_on(psi, oracle_gate(g.gate), g.targets);
  return psi;
}

// a|x>|0> + b|x>|1> -> (a + ib)|x> after rotating the largest amplitude real.
Vector logical_of(const Vector& phys) {
  const Eigen::Index d = phys.size() / 2;
  Eigen::Index k = 0;
  phys.cwiseAbs().maxCoeff(&k);
  const Vector v = phys * std::conj(phys(k)) / std::abs(phys(k));
  Vector out(d);
  for (Eigen::Index x = 0; x < d; ++x) out(x) = v(x).real() + kI * v(x + d).real();
  return out;
}

Vector logical_oracle(const AlmostCommutingCircuit& c, Vector psi) {
  for (const Layer& layer : c.layers) {
    if (const auto* rz = std::get_if<RzLayer>(&layer)) {
      psi = apply_on(psi, mat2(1, 0, 0, std::pow(kI, rz->j)), {rz->qubit});
    } else {
      const auto& y = std::get<YdiagLayer>(layer);
      psi = apply_on(psi, y.unitary, y.qubits);
    }
  }
  return psi;
}

Bit parity_oracle(const std::vector<Bit>& x, const std::vector<Bit>& a, Bit c) {
  Bit y = c;
  for (std::size_t i = 0; i < x.size(); ++i) y ^= a[i] & x[i];
  return y;
}

std::vector<Bit> bits(std::uint64_t v, int n) {
  std::vector<Bit> b(n);
  for (int i = 0; i < n; ++i) b[i] = (v >> i) & 1;
  return b;
}

cli::ExperimentConfig config(const std::string& command, int scheme) {
  cli::ExperimentConfig c;
  c.command = command;
  c.scheme = scheme;
  return c;
}

bool cli_passes(const cli::ExperimentConfig& c, Criterion& crit, const std::string& label) {
  const auto reports = cli::run_experiment(c, cli::workers_from_env());
  const bool ok = !reports.empty() && cli::all_pass(reports);
  crit.require(ok, label + ": report has failing rows");
  return ok;
}

// ---- criteria ----

Criterion linpoly_correctness() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  for (int s : {4, 7, 8, 10}) {
    cli::ExperimentConfig cfg = config("run", s);
    cfg.n = {1, 2, 3};
    cfg.k = {1, 2};
    cfg.exhaustive = true;
    cfg.seed = 11;
    cli_passes(cfg, c, "scheme " + std::to_string(s));
  }
  cli::ExperimentConfig cfg9 = config("run", 9);
  cfg9.n = {1, 2, 3};
  cfg9.gamma = {1.5};
  cfg9.kprime = {1};
  cfg9.seed = 11;
  cli_passes(cfg9, c, "scheme 9");

  // Independent parity oracle over every (x, a, c).
  Rng rng(12);
  using Run = std::function<LinpolyRun(const std::vector<Bit>&, const LinearPolynomial&, int, Rng&)>;
  const std::vector<std::pair<int, Run>> runs = {
      {4, [](const auto& x, const auto& p, int k, Rng& r) { return run_scheme4(x, p, k, r); }},
      {7, [](const auto& x, const auto& p, int k, Rng& r) { return run_scheme7(x, p, k, r); }},
      {8, [](const auto& x, const auto& p, int k, Rng& r) { return run_scheme8(x, p, k, r); }},
      {9, [](const auto& x, const auto& p, int, Rng& r) { return run_scheme9(x, p, 1.5, 1, r); }},
      {10, [](const auto& x, const auto& p, int k, Rng& r) { return run_scheme10(x, p, k, r); }},
  };
  for (const auto& [id, run] : runs) {
    int wrong = 0;
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k)
        for (std::uint64_t xv = 0; xv < (1u << n); ++xv)
          for (std::uint64_t av = 0; av < (1u << n); ++av)
            for (Bit cc = 0; cc < 2; ++cc)
              for (int t = 0; t < 4; ++t) {
                const auto x = bits(xv, n), a = bits(av, n);
                wrong += run(x, LinearPolynomial{n, a, cc}, k, rng).value() != parity_oracle(x, a, cc);
              }
    c.require(wrong == 0, "scheme " + std::to_string(id) + ": " + std::to_string(wrong) + " wrong values");
  }
  const double elapsed = seconds_since(t0);
  c.require(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s exceeds 2 min");
  return c;
}

Criterion scheme5_correctness() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(500 + seed);
    const int n = 1 + static_cast<int>(seed % 2);
    const int R = static_cast<int>(seed % 3);
    const CliffordTCircuit circ = random_clifford_t(n, R, 3 * n + 2, rng);
    const Vector in = random_state(n, rng).vector();
    const QheRun run = run_scheme5(circ, in, 2, rng);
    const double f = overlap(run.output, clifford_t_oracle(circ, in));
    c.require(f >= 1 - kFid, "seed " + std::to_string(seed) + " fidelity " + std::to_string(f));
  }
  cli::ExperimentConfig cfg = config("run", 5);
  cfg.n = {2};
  cfg.R = {2};
  cfg.k = {2};
  cfg.seed = 7;
  cfg.trials = 30;
  cli_passes(cfg, c, "run scheme 5");
  c.require(seconds_since(t0) < 300.0, "runtime exceeds 5 min");
  return c;
}

Criterion rebit_correctness() {
  Criterion c;
  Rng rng(21);
  for (RebitScheme scheme : {RebitScheme::One, RebitScheme::Two})
    for (int i = 0; i < 20; ++i) {
      const int n = 1 + i % 2, depth = 1 + i % 3;
      const AlmostCommutingCircuit circ = random_almost_commuting(n, depth, scheme, rng);
      const Vector in = random_rebit_input(n, scheme, rng);
      const RebitRun run = scheme == RebitScheme::One ? run_scheme1(circ, in, rng) : run_scheme2(circ, in, rng);
      const double f = overlap(logical_oracle(circ, logical_of(in)), logical_of(run.output));
      c.require(f >= 1 - kFid, "scheme " + std::to_string(scheme == RebitScheme::One ? 1 : 2) + " case " +
                                   std::to_string(i) + " fidelity " + std::to_string(f));
    }
  return c;
}

Criterion constants() {
  Criterion c;
  Rng rng(31);
  c.near(privacy_distance(ViewScheme::Scheme4, 1, 1, {0}, {1}), 0.5, kExact, "scheme 4 pair distance");
  c.near(cheating_bob(4, 1, 1, 0, rng).guess_rate, 0.75, kExact, "scheme 4 guess rate");
  for (int k = 1; k <= 3; ++k) {
    c.near(privacy_distance(ViewScheme::Scheme4, 1, k, {0}, {1}), std::ldexp(1.0, -k), kExact,
           "per-variable distance k=" + std::to_string(k));
    if (k <= 2)
      for (int i = 0; i < 2; ++i)
        c.near(per_bit_distance(ViewScheme::Scheme4, 2, k, i), std::ldexp(1.0, -k), kExact,
               "per-variable distance n=2 k=" + std::to_string(k));
  }
  for (int k = 1; k <= 2; ++k)
    c.near(per_bit_distance(ViewScheme::Scheme8, 1, k, 0), std::pow(2.0, -k / 2.0), kExact,
           "scheme 8 per-bit distance k=" + std::to_string(k));
  c.near(per_bit_distance(ViewScheme::Scheme8, 2, 1, 0), 1 / std::sqrt(2.0), kExact, "scheme 8 per-bit n=2");
  for (int n : {2, 3})
    c.near(cmi_uniform(ViewScheme::Scheme7, n, 1), n - 1 + std::ldexp(1.0, -n), kExact,
           "scheme 7 information k=1 n=" + std::to_string(n));
  c.near(cmi_uniform(ViewScheme::Scheme7, 2, 2), 11.0 / 16.0, kExact, "scheme 7 information n=k=2");
  for (int k = 1; k <= 3; ++k) {
    const double q = std::ldexp(1.0, -k);
    c.near(cmi_uniform(ViewScheme::Scheme7, 2, k), 3 * q - q * q, kExact,
           "scheme 7 information n=2 k=" + std::to_string(k));
  }
  cli::ExperimentConfig td = config("audit", 4);
  td.metric = "trace-distance";
  td.k = {1, 2, 3};
  cli_passes(td, c, "audit trace-distance");
  cli::ExperimentConfig cmi = config("audit", 7);
  cmi.metric = "cmi";
  cmi.n = {2, 3};
  cmi.k = {1, 2};
  cli_passes(cmi, c, "audit cmi");
  return c;
}

Criterion privacy() {
  Criterion c;
  Rng rng(41);
  // Scheme 1: Bob's view does not depend on the input.
  for (int n = 1; n <= 2; ++n)
    for (int depth = 1; depth <= 2; ++depth)
      for (int rep = 0; rep < 2; ++rep) {
        const AlmostCommutingCircuit circ = random_almost_commuting(n, depth, RebitScheme::One, rng);
        const Matrix ref = rebit_bob_view(circ, random_rebit_input(n, RebitScheme::One, rng));
        double worst = 0.0;
        for (int i = 0; i < 20; ++i)
          worst = std::max(worst,
                           trace_distance(ref, rebit_bob_view(circ, random_rebit_input(n, RebitScheme::One, rng))));
        c.require(worst < kExact, "scheme 1 view depends on input: " + std::to_string(worst));
      }
  // Scheme 2: product inputs related by R_y(pi) on every data qubit and any
  // R_y on the phase qubit give the same view.
  for (int n = 1; n <= 2; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      const AlmostCommutingCircuit circ = random_almost_commuting(n, 2, RebitScheme::Two, rng);
      Vector in = Vector::Ones(1);
      for (int q = 0; q <= n; ++q) {
        const double t = 2 * kPi * rng.uniform();
        const Vector r = (Vector(2) << std::cos(t), std::sin(t)).finished();
        in = Eigen::kroneckerProduct(r, in).eval();
      }
      Vector other = apply_on(in, ry(2 * kPi * rng.uniform()), {n});
      for (int q = 0; q < n; ++q) other = apply_on(other, ry(kPi), {q});
      const double d = trace_distance(rebit_bob_view(circ, in), rebit_bob_view(circ, other));
      c.require(d < kExact, "scheme 2 flipped pair distinguishable: " + std::to_string(d));
    }
  const AlmostCommutingCircuit c3{3, {YdiagLayer{{0, 1, 2}, ydiag_triple(2 * kPi * rng.uniform())}}};
  Vector z000 = Vector::Zero(16), z111 = Vector::Zero(16);
  z000(0) = z111(7) = 1;
  const double same = trace_distance(rebit_bob_view(c3, z000), rebit_bob_view(c3, z111));
  c.require(same < kExact, "scheme 2 n=3 pair distinguishable: " + std::to_string(same));
  const AlmostCommutingCircuit c2{2, {YdiagLayer{{0, 1}, random_real_ydiag(2, rng)}}};
  Vector plus = Vector::Zero(8), minus = Vector::Zero(8);
  plus(0) = minus(0) = plus(3) = 1 / std::sqrt(2.0);
  minus(3) = -1 / std::sqrt(2.0);
  const double witness = trace_distance(rebit_bob_view(c2, plus), rebit_bob_view(c2, minus));
  c.require(witness >= 0.5, "scheme 2 witness distance " + std::to_string(witness));
  // Scheme 7: all distinct inputs are equally far apart.
  for (int n : {2, 3})
    for (int k : {1, 2}) {
      const double ref = privacy_distance(ViewScheme::Scheme7, n, k, bits(0, n), bits(1, n));
      c.require(ref > 0, "scheme 7 distance is zero");
      for (std::uint64_t a = 0; a < (1u << n); ++a)
        for (std::uint64_t b = a + 1; b < (1u << n); ++b)
          c.near(privacy_distance(ViewScheme::Scheme7, n, k, bits(a, n), bits(b, n)), ref, kExact,
                 "scheme 7 pairwise distance n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return c;
}

Criterion gadgets() {
  Criterion c;
  Rng rng(51);
  const std::vector<std::pair<GadgetTarget, Matrix>> targets = {
      {GadgetTarget::quarter(0), ry(0)},           {GadgetTarget::quarter(1), ry(kPi / 2)},
      {GadgetTarget::quarter(2), ry(kPi)},         {GadgetTarget::quarter(3), ry(3 * kPi / 2)},
      {GadgetTarget::ty(), ry(kPi / 4)},
  };
  for (const auto& [g, want] : targets) {
    bool seen[2][2] = {};
    for (int trial = 0; trial < 10; ++trial) {
      const QuantumState psi = random_real_state(2, rng);
      const Vector expect = apply_on(psi.vector(), want, {1});
      enumerate_tapes([&](Rng& tape) {
        QuantumState s = psi;
        const GadgetOutcome out = uncertain_gadget(s, 1, g, tape);
        seen[out.m][out.s] = true;
        c.require(out.r == gadget_correction(g, out.m, out.s), "correction table disagrees with branch");
        const Vector fixed = out.r ? apply_on(s.vector(), ry(-kPi), {1}) : s.vector();
        c.require(overlap(fixed, expect) >= 1 - kExact, "gadget output differs from G|psi>");
      });
    }
    c.require(seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1], "gadget branch never reached");
  }
  const Matrix pdg = mat2(1, 0, 0, -kI);
  for (bool literal : {true, false})
    for (Bit p = 0; p < 2; ++p)
      for (Bit q = 0; q < 2; ++q)
        for (int trial = 0; trial < 50; ++trial) {
          const Vector psi = random_state(2, rng).vector();
          QuantumState s = QuantumState::from_vector(psi);
          const GardenHoseResult r =
              literal ? garden_hose_literal(s, 1, p, q, rng) : garden_hose_contract(s, 1, p, q, rng);
          c.require(r.position == (p ? HoseOutput::Out2 : HoseOutput::Out1), "garden hose output position");
          c.require(r.applied_pdg == (p ^ q), "garden hose P^dag flag");
          Vector fixed = s.vector();
          if (r.x) fixed = apply_on(fixed, oracle_gate("x"), {1});
          if (r.z) fixed = apply_on(fixed, oracle_gate("z"), {1});
          const Vector expect = (p ^ q) ? apply_on(psi, pdg, {1}) : psi;
          c.require(overlap(fixed, expect) >= 1 - 1e-10, "garden hose output state");
        }
  return c;
}

Criterion communication() {
  Criterion c;
  Rng rng(61);
  auto count = [&](std::size_t got, std::size_t want, const std::string& what) {
    c.require(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  };
  for (int n = 1; n <= 3; ++n) {
    const AlmostCommutingCircuit circ = random_almost_commuting(n, 2, RebitScheme::Two, rng);
    const RebitRun run = run_scheme2(circ, random_rebit_input(n, RebitScheme::Two, rng), rng);
    count(comm_audit(run.transcript, Direction::BobToAlice), 2 * n, "scheme 2 n=" + std::to_string(n));
    for (int k = 1; k <= 2; ++k) {
      std::vector<Bit> x(n), a(n);
      for (int i = 0; i < n; ++i) x[i] = rng.bit(), a[i] = rng.bit();
      const LinearPolynomial p{n, a, rng.bit()};
      const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      count(comm_audit(run_scheme4(x, p, k, rng).transcript, Direction::BobToAlice), n * k + 1, "scheme 4" + at);
      count(comm_audit(run_scheme7(x, p, k, rng).transcript, Direction::BobToAlice), k + 1, "scheme 7" + at);
      count(comm_audit(run_scheme8(x, p, k, rng).transcript, Direction::BobToAlice), k + 2, "scheme 8" + at);
      count(comm_audit(run_scheme10(x, p, k, rng).transcript, Direction::BobToAlice), k + 1, "scheme 10" + at);
    }
  }
  for (int n = 1; n <= 2; ++n)
    for (int R = 0; R <= 2; ++R) {
      const CliffordTCircuit circ = random_clifford_t(n, R, 4, rng);
      const QheRun run = run_scheme5(circ, random_state(n, rng).vector(), 2, rng);
      const std::string at = " n=" + std::to_string(n) + " R=" + std::to_string(R);
      count(static_cast<std::size_t>(run.instances), 2 * n + R, "scheme 5 instances" + at);
      count(static_cast<std::size_t>(run.variables), 2 * n + 4 * R, "scheme 5 key variables" + at);
    }
  cli::ExperimentConfig cfg = config("audit", 2);
  cfg.metric = "comm";
  cfg.n = {3};
  cli_passes(cfg, c, "audit comm scheme 2");
  return c;
}

Criterion adversary() {
  Criterion c;
  Rng rng(71);
  const BobAttack bob = cheating_bob(4, 1, 1, 10000, rng);
  c.require(bob.errors.rate() > 0.1, "cheating Bob error rate " + std::to_string(bob.errors.rate()));
  const AliceAttack alice = cheating_alice(4, "probe", 1, 1, 2000, rng);
  c.require(alice.identified.trials > 0 && alice.identified.successes == alice.identified.trials,
            "probe identification rate " + std::to_string(alice.identified.rate()));
  c.require(alice.errors.rate() >= 0.2, "probe error rate " + std::to_string(alice.errors.rate()));
  const CliffordTCircuit circ{1, {{"h", {0}}, {"t", {0}}}};
  const TrapAttack probe = trap_detection(circ, 1, 4, "probe", 400, rng);
  c.require(probe.aborts.rate() >= 0.5, "trap detection rate " + std::to_string(probe.aborts.rate()));
  const TrapAttack honest = trap_detection(circ, 1, 4, "honest", 100, rng);
  c.require(honest.aborts.successes == 0, "honest runs aborted " + std::to_string(honest.aborts.successes));

  cli::ExperimentConfig b = config("adversary", 4);
  b.party = "bob";
  cli_passes(b, c, "adversary bob");
  cli::ExperimentConfig a = config("adversary", 4);
  a.party = "alice";
  a.strategy = "probe";
  cli_passes(a, c, "adversary alice probe");
  cli::ExperimentConfig t = config("adversary", 6);
  t.traps = {4};
  t.strategy = "probe";
  t.trials = 400;
  cli_passes(t, c, "adversary scheme 6 probe");
  t.strategy = "honest";
  t.trials = 100;
  cli_passes(t, c, "adversary scheme 6 honest");
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Criterion reproducibility(const std::string& cli_path) {
  Criterion c;
  if (cli_path.empty()) {
    c.require(false, "no CLI path given");
    return c;
  }
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("qhelab_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> commands = {
      "run --scheme 5 --n 2 --R 2 --k 2 --seed 7 --trials 30",
      "run --scheme 8 --n 1..2 --k 1..2 --seed 3 --trials 20",
      "run --scheme 10 --n 3 --k 2 --exhaustive",
      "audit --metric trace-distance --scheme 4 --k 1..3",
      "adversary --party bob --scheme 4 --k 1 --seed 9",
      "adversary --scheme 6 --traps 4 --strategy probe --trials 400 --seed 3",
  };
  int idx = 0;
  for (const std::string& cmd : commands) {
    std::string bodies[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto out = dir / ("report" + std::to_string(idx) + "_" + std::to_string(rep) + ".jsonl");
      // Different worker counts must not change the report.
      const std::string line = "QHELAB_WORKERS=" + std::string(rep ? "4" : "1") + " '" + cli_path + "' " + cmd +
                               " --output '" + out.string() + "' > /dev/null";
      const int rc = std::system(line.c_str());
      c.require(rc == 0, "'" + cmd + "' exited with " + std::to_string(rc));
      bodies[rep] = slurp(out);
    }
    c.require(!bodies[0].empty(), "'" + cmd + "' wrote an empty report");
    c.require(bodies[0] == bodies[1], "'" + cmd + "' reports differ between reruns");
    ++idx;
  }
  std::filesystem::remove_all(dir);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"linear-polynomial correctness", linpoly_correctness},
      {"Clifford+T scheme correctness", scheme5_correctness},
      {"rebit scheme correctness", rebit_correctness},
      {"exact constants", constants},
      {"privacy invariance", privacy},
      {"gadget and garden-hose contracts", gadgets},
      {"communication accounting", communication},
      {"adversary bench", adversary},
      {"reproducibility", [&] { return reproducibility(cli_path); }},
  };
  int failed = 0, id = 0;
  for (const auto& [title, run] : criteria) {
    ++id;
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s  %s (%.1f s)\n", id, c.pass ? "PASS" : "FAIL", title.c_str(), seconds_since(t0));
    for (std::size_t i = 0; i < c.notes.size() && i < 10; ++i) std::printf("  - %s\n", c.notes[i].c_str());
    std::fflush(stdout);
    failed += !c.pass;
  }
  return failed ? 1 : 0;
}
