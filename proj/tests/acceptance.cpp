// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracle.hpp"
#include "qwalk/gates.hpp"
#include "qwalk/io.hpp"
#include "qwalk/walk.hpp"

namespace {

using namespace qwalk;
using qwalk::testing::controlled_x;
using qwalk::testing::embed;
using qwalk::testing::random_unit_vector;
using qwalk::testing::taylor_propagator;
using qwalk::testing::textbook;
using std::numbers::pi;
using Tag = ComponentKind::Tag;

constexpr Complex kI{0.0, 1.0};

// Collects the worst observed deviation and the first failure message.
struct Tally {
  double worst = 0.0;
  std::string first_failure;
  int checks = 0;

  void within(double deviation, double tol, const std::string& what) {
    ++checks;
    worst = std::max(worst, deviation);
    if (!(deviation <= tol) && first_failure.empty()) {
      std::ostringstream os;
      os << what << " deviates by " << deviation;
      first_failure = os.str();
    }
  }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool ok() const { return first_failure.empty(); }
};

double dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

Graph shape(Tag tag) {
  switch (tag) {
    case Tag::kLooplessIsolated: return Graph(1);
    case Tag::kLoopedIsolated: return Graph(1, {}, {0});
    case Tag::kPath2: return Graph(2, {{0, 1}});
    default: return Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  }
}

ComponentKind kind_of(Tag tag) {
  if (tag == Tag::kCycle4) return {tag, {0, 3}, {1, 2}};
  return {tag, {}, {}};
}

Tally closed_forms() {
  Tally t;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> time(-25.0, 25.0);
  for (Tag tag : {Tag::kLooplessIsolated, Tag::kLoopedIsolated, Tag::kPath2, Tag::kCycle4}) {
    const Graph g = shape(tag);
    const Eigen::MatrixXd a = adjacency_matrix(g);
    for (int draw = 0; draw < 1000; ++draw) {
      const Amplitudes c = random_unit_vector(rng, g.n());
      const double s = time(rng);
      const Amplitudes closed = evolve_closed_form(kind_of(tag), c, s);
      t.within(dev(closed, taylor_propagator(a, s) * c), 1e-10, to_string(tag) + " vs oracle");
      // Whole-matrix spectral route over the same adjacency.
      t.within(dev(closed, evolve_generic(a, c, s)), 1e-10, to_string(tag) + " vs spectral");
    }
  }

  // Special-time rows, stated as explicit actions on the amplitudes.
  for (int draw = 0; draw < 100; ++draw) {
    const Amplitudes c1 = random_unit_vector(rng, 1);
    for (double s : {pi / 2, pi, 3 * pi / 2, 2 * pi}) {
      t.within(dev(evolve_closed_form(kind_of(Tag::kLooplessIsolated), c1, s), c1), 1e-10, "K1 static");
    }
    const Complex phases[] = {-kI, -1.0, kI, 1.0};
    for (int k = 0; k < 4; ++k) {
      const double s = (k + 1) * pi / 2;
      t.within(dev(evolve_closed_form(kind_of(Tag::kLoopedIsolated), c1, s), phases[k] * c1), 1e-10,
               "looped K1 phase");
    }

    const Amplitudes c2 = random_unit_vector(rng, 2);
    Amplitudes swap(2);
    swap << c2[1], c2[0];
    t.within(dev(evolve_closed_form(kind_of(Tag::kPath2), c2, pi / 2), -kI * swap), 1e-10, "P2 pi/2");
    t.within(dev(evolve_closed_form(kind_of(Tag::kPath2), c2, pi), -c2), 1e-10, "P2 pi");
    t.within(dev(evolve_closed_form(kind_of(Tag::kPath2), c2, 3 * pi / 2), kI * swap), 1e-10, "P2 3pi/2");
    t.within(dev(evolve_closed_form(kind_of(Tag::kPath2), c2, 2 * pi), c2), 1e-10, "P2 2pi");

    const Amplitudes c4 = random_unit_vector(rng, 4);
    Amplitudes corners(4);
    corners << -c4[3], -c4[2], -c4[1], -c4[0];
    t.within(dev(evolve_closed_form(kind_of(Tag::kCycle4), c4, pi / 2), corners), 1e-10, "C4 pi/2");
    t.within(dev(evolve_closed_form(kind_of(Tag::kCycle4), c4, pi), c4), 1e-10, "C4 pi");
  }
  return t;
}

Tally gate_suite() {
  Tally t;
  auto check = [&](const GateOp& op, int n, const Eigen::MatrixXcd& want, const std::string& what) {
    const Eigen::MatrixXcd got = gate_unitary(compile_gate(op, n));
    t.within(dev(got, want), 1e-9, what + " n=" + std::to_string(n));
  };
  for (GateKind kind : {GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kH, GateKind::kHAlt,
                        GateKind::kT, GateKind::kS}) {
    for (int n = 1; n <= 3; ++n) {
      for (int q = 1; q <= n; ++q) check(GateOp::single(kind, q), n, embed(textbook(kind), q, n), mnemonic(kind));
    }
  }

  std::mt19937_64 rng(102);
  std::uniform_int_distribution<std::int64_t> den(1, 24);
  for (int draw = 0; draw < 20; ++draw) {
    const std::int64_t d = den(rng);
    const Radians theta = Radians::pi_times(std::uniform_int_distribution<std::int64_t>(0, 2 * d - 1)(rng), d);
    for (int n = 1; n <= 3; ++n) {
      for (int q = 1; q <= n; ++q) {
        check(GateOp::phase(theta, q), n, embed(textbook(GateKind::kPhase, theta.value()), q, n),
              "phase(" + theta.to_string() + ")");
      }
    }
    const Radians got = compile_gate(GateOp::phase(theta, 1), 1).total_duration();
    const Radians want = theta.is_zero() ? Radians() : Radians::pi_times(2) - theta;
    t.expect(got.exact() && got == want, "phase(" + theta.to_string() + ") duration " + got.to_string());
  }

  for (int n = 2; n <= 3; ++n) {
    for (int c = 1; c <= n; ++c) {
      for (int g = 1; g <= n; ++g) {
        if (c != g) check(GateOp::cnot(c, g), n, controlled_x({c}, g, n), "cnot");
      }
    }
  }
  for (int c1 = 1; c1 <= 3; ++c1) {
    for (int c2 = 1; c2 <= 3; ++c2) {
      for (int g = 1; g <= 3; ++g) {
        if (c1 != c2 && c1 != g && c2 != g) check(GateOp::toffoli(c1, c2, g), 3, controlled_x({c1, c2}, g, 3), "toffoli");
      }
    }
  }

  const std::pair<GateOp, Radians> durations[] = {
      {GateOp::single(GateKind::kX, 1), Radians::pi_times(2)},
      {GateOp::single(GateKind::kY, 1), Radians::pi_times(3, 2)},
      {GateOp::single(GateKind::kZ, 1), Radians::pi_times(1)},
      {GateOp::single(GateKind::kH, 1), Radians::pi_times(13, 4)},
      {GateOp::single(GateKind::kHAlt, 1), Radians::pi_times(9, 4)},
      {GateOp::single(GateKind::kT, 1), Radians::pi_times(7, 4)},
      {GateOp::cnot(1, 2), Radians::pi_times(2)},
      {GateOp::toffoli(1, 2, 3), Radians::pi_times(2)},
  };
  for (const auto& [op, want] : durations) {
    const Radians got = compile_gate(op, 3).total_duration();
    t.expect(got.exact() && got == want, mnemonic(op.kind) + " duration " + got.to_string());
  }
  return t;
}

Tally legacy_suite() {
  Tally t;
  std::mt19937_64 rng(103);
  const Schedule lx = compile_gate_legacy(GateOp::single(GateKind::kX, 1));
  const Schedule ly = compile_gate_legacy(GateOp::single(GateKind::kY, 1));
  const Schedule lz = compile_gate_legacy(GateOp::single(GateKind::kZ, 1));
  const Schedule lc = compile_gate_legacy(GateOp::cnot(1, 2));
  for (int draw = 0; draw < 200; ++draw) {
    const Amplitudes c = random_unit_vector(rng, 8);
    Amplitudes y(8);
    y << -kI * c[1], kI * c[0], -kI * c[2], -kI * c[3], -kI * c[4], kI * c[5], kI * c[6], kI * c[7];
    t.within(dev(evolve_schedule(ly, StateVector(c)).amplitudes(), y), 1e-10, "legacy y");
    Amplitudes z(8);
    z << c[0], -c[1], c[2], -c[3], c[4], -c[5], c[6], -c[7];
    t.within(dev(evolve_schedule(lz, StateVector(c)).amplitudes(), z), 1e-10, "legacy z");

    const Amplitudes c2 = random_unit_vector(rng, 2);
    Amplitudes x(2);
    x << c2[1], c2[0];
    t.within(dev(evolve_schedule(lx, StateVector(c2)).amplitudes(), x), 1e-10, "legacy x");

    const Amplitudes c4 = random_unit_vector(rng, 4);
    t.within(dev(evolve_schedule(lc, StateVector(c4)).amplitudes(), controlled_x({1}, 2, 2) * c4), 1e-10,
             "legacy cnot");

    for (GateKind kind : {GateKind::kY, GateKind::kZ}) {
      Amplitudes zero_anc = Amplitudes::Zero(8);
      zero_anc.head(2) = random_unit_vector(rng, 2);
      const StateVector out = evolve_schedule(kind == GateKind::kY ? ly : lz, StateVector(zero_anc));
      for (Vertex v : legacy_ancillas(kind)) t.within(std::abs(out[v]), 1e-10, "ancilla " + std::to_string(v));
    }
  }
  t.within(dev(gate_unitary(lz), embed(textbook(GateKind::kZ), 3, 3)), 1e-9, "legacy z unitary");
  return t;
}

Tally demo_circuit() {
  Tally t;
  Circuit c;
  c.n_qubits = 3;
  c.ops = {GateOp::single(GateKind::kH, 1), GateOp::single(GateKind::kX, 2),
           GateOp::single(GateKind::kH, 3), GateOp::cnot(1, 2),
           GateOp::single(GateKind::kY, 1), GateOp::single(GateKind::kT, 2),
           GateOp::single(GateKind::kZ, 3), GateOp::cnot(3, 2)};
  c.layer_marks = {3, 4, 7};
  const Schedule s = compile_circuit(c);

  const std::vector<Radians> times = {Radians::pi_times(17, 2), Radians::pi_times(21, 2),
                                      Radians::pi_times(59, 4), Radians::pi_times(67, 4)};
  const std::vector<std::vector<int>> support = {
      {0b010, 0b011, 0b110, 0b111}, {0b010, 0b011, 0b100, 0b101},
      {0b000, 0b001, 0b110, 0b111}, {0b000, 0b011, 0b101, 0b110}};

  // Layer states written out from the analytic calculation.
  const Complex e = std::polar(1.0, 3 * pi / 4);
  std::vector<Amplitudes> layers(4, Amplitudes::Zero(8));
  for (int v : support[0]) layers[0][v] = 0.5;
  for (int v : support[1]) layers[1][v] = 0.5;
  layers[2][0b000] = -0.5 * kI;
  layers[2][0b001] = 0.5 * kI;
  layers[2][0b110] = 0.5 * e;
  layers[2][0b111] = -0.5 * e;
  layers[3][0b000] = -0.5 * kI;
  layers[3][0b011] = 0.5 * kI;
  layers[3][0b101] = -0.5 * e;
  layers[3][0b110] = 0.5 * e;

  // The same states from textbook matrices.
  Amplitudes psi = Amplitudes::Zero(8);
  psi[0] = 1.0;
  std::vector<Amplitudes> matrix_layers;
  psi = embed(textbook(GateKind::kH), 1, 3) * embed(textbook(GateKind::kX), 2, 3) *
        embed(textbook(GateKind::kH), 3, 3) * psi;
  matrix_layers.push_back(psi);
  psi = controlled_x({1}, 2, 3) * psi;
  matrix_layers.push_back(psi);
  psi = embed(textbook(GateKind::kY), 1, 3) * embed(textbook(GateKind::kT), 2, 3) *
        embed(textbook(GateKind::kZ), 3, 3) * psi;
  matrix_layers.push_back(psi);
  psi = controlled_x({3}, 2, 3) * psi;
  matrix_layers.push_back(psi);

  t.expect(s.checkpoints().size() == 4, "expected four checkpoints");
  for (std::size_t k = 0; k < s.checkpoints().size() && k < 4; ++k) {
    t.expect(s.checkpoints()[k].time == times[k], "checkpoint " + std::to_string(k + 1) + " time");
  }

  const WalkTrace trace = trace_schedule(s, StateVector::basis(8, 0));
  std::vector<double> at;
  for (const auto& r : times) at.push_back(r.value());
  const auto states = sample_schedule(s, StateVector::basis(8, 0), at);
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string name = "layer" + std::to_string(k + 1);
    t.within(dev(layers[k], matrix_layers[k]), 1e-12, name + " analytic vs matrices");
    t.within(dev(states[k].amplitudes(), layers[k]), 1e-9, name + " amplitudes");

    const auto row = std::find(trace.times.begin(), trace.times.end(), at[k]);
    t.expect(row != trace.times.end(), name + " missing from trace");
    if (row == trace.times.end()) continue;
    const auto& probs = trace.probabilities[row - trace.times.begin()];
    for (int v = 0; v < 8; ++v) {
      const bool in = std::find(support[k].begin(), support[k].end(), v) != support[k].end();
      t.within(std::abs(probs[v] - (in ? 0.25 : 0.0)), 1e-9, name + " probability");
    }
  }
  return t;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  const Eigen::MatrixXd a = qwalk::testing::random_adjacency(rng, n);
  std::vector<Edge> edges;
  std::vector<Vertex> loops;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) == 1.0) loops.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) == 1.0) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges, loops);
}

Tally properties() {
  Tally t;
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> time(0.0, 20.0);
  for (int draw = 0; draw < 10000; ++draw) {
    const Graph g = random_graph(rng, size(rng));
    const StateVector in(random_unit_vector(rng, g.n()));
    const StateVector out = evolve_segment(g, in, time(rng));
    t.within(std::abs(out.amplitudes().norm() - 1.0), 1e-12, "norm drift");
  }

  for (int draw = 0; draw < 500; ++draw) {
    const Graph g = random_graph(rng, size(rng));
    const StateVector in(random_unit_vector(rng, g.n()));
    const double a = time(rng) / 4, b = time(rng) / 4;
    const StateVector two = evolve_segment(g, evolve_segment(g, in, a), b);
    t.within(dev(two.amplitudes(), evolve_segment(g, in, a + b).amplitudes()), 1e-10, "semigroup");
  }

  for (int draw = 0; draw < 200; ++draw) {
    for (auto [tag, period] : {std::pair{Tag::kLoopedIsolated, 2 * pi}, std::pair{Tag::kPath2, 2 * pi},
                               std::pair{Tag::kCycle4, pi}}) {
      const Graph g = shape(tag);
      const StateVector in(random_unit_vector(rng, g.n()));
      t.within(dev(evolve_segment(g, in, period).amplitudes(), in.amplitudes()), 1e-10,
               "period of " + to_string(tag));
    }
  }

  auto u = [](GateKind k) { return gate_unitary(compile_gate(GateOp::single(k, 1), 1)); };
  const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd tg = u(GateKind::kT), sg = u(GateKind::kS), zg = u(GateKind::kZ);
  Eigen::MatrixXcd t8 = id2;
  for (int k = 0; k < 8; ++k) t8 = tg * t8;
  t.within(dev(t8, id2), 1e-9, "T^8");
  t.within(dev(tg * tg, sg), 1e-9, "T^2");
  t.within(dev(sg * sg, zg), 1e-9, "S^2");
  t.within(dev(zg * zg, id2), 1e-9, "Z^2");

  for (IdentityForm form : {IdentityForm::kAllLooped, IdentityForm::kPairedPaths, IdentityForm::kCycleGroups}) {
    for (int n = 2; n <= 3; ++n) {
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
      t.within(dev(gate_unitary(compile_identity(form, n)), id), 1e-9, "identity construction");
    }
  }
  return t;
}

Tally round_trips() {
  Tally t;
  std::mt19937_64 rng(105);
  for (int draw = 0; draw < 100; ++draw) {
    const Circuit c = qwalk::testing::random_circuit(rng);
    const std::string text = serialize_circuit(c);
    t.expect(parse_circuit(text) == c, "circuit round trip:\n" + text);

    const Schedule s = qwalk::testing::random_schedule(rng);
    const std::string stext = serialize_schedule(s);
    const Schedule back = parse_schedule(stext);
    t.expect(back == s, "schedule round trip:\n" + stext);
    for (std::size_t k = 0; k < s.segments().size() && k < back.segments().size(); ++k) {
      const Radians& d = s.segments()[k].duration;
      const Radians& e = back.segments()[k].duration;
      if (d.exact()) {
        t.expect(e.exact() && e.pi_num() == d.pi_num() && e.pi_den() == d.pi_den(),
                 "exact duration lost: " + d.to_string());
      }
    }
  }
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Tally()>> criteria[] = {
      {"closed-form component evolutions", closed_forms},
      {"gate suite unitaries and exact durations", gate_suite},
      {"legacy constructions", legacy_suite},
      {"layered circuit reproduction", demo_circuit},
      {"walk and gate properties", properties},
      {"text format round trips", round_trips},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Tally t;
    try {
      t = run();
    } catch (const std::exception& e) {
      t.first_failure = std::string("exception: ") + e.what();
    }
    std::cout << (t.ok() ? "PASS" : "FAIL") << "  criterion " << index << ": " << name << " ("
              << t.checks << " checks, worst deviation " << t.worst << ")";
    if (!t.ok()) {
      std::cout << "  " << t.first_failure;
      ++failures;
    }
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
