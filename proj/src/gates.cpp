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

#include "qwalk/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qwalk/errors.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kMinDuration = 1e-12;
constexpr Complex kI{0.0, 1.0};

// Bit position of a 1-based qubit index; qubit 1 is the most significant bit.
int bit_of(int qubit, int n_qubits) { return n_qubits - qubit; }

/**
 * One static graph of a per-pair pattern: either every pair joined as a P2,
 * or both members isolated with the given loop choice.
 */
struct PairStep {
  Radians duration;
  bool path = false;
  bool loop_low = false;
  bool loop_high = false;
};

PairStep path_step(Radians d) { return {d, true, false, false}; }
PairStep loops_step(Radians d, bool low, bool high) { return {d, false, low, high}; }

std::vector<PairStep> pair_pattern(const GateOp& op) {
  const auto pi = [](std::int64_t num, std::int64_t den = 1) { return Radians::pi_times(num, den); };
  switch (op.kind) {
    case GateKind::kX:
    case GateKind::kCnot:
    case GateKind::kToffoli:
      return {path_step(pi(1, 2)), loops_step(pi(3, 2), true, true)};
    case GateKind::kY:
      return {path_step(pi(1, 2)), loops_step(pi(1), false, true)};
    case GateKind::kZ:
      return {loops_step(pi(1), false, true)};
    case GateKind::kH:
      return {loops_step(pi(3, 2), false, true), path_step(pi(1, 4)),
              loops_step(pi(3, 2), false, true)};
    case GateKind::kHAlt:
      return {loops_step(pi(1, 2), true, false), path_step(pi(1, 4)),
              loops_step(pi(1), true, true), loops_step(pi(1, 2), true, false)};
    case GateKind::kT:
      return {loops_step(pi(7, 4), false, true)};
    case GateKind::kS:
    case GateKind::kPhase: {
      const Radians theta = op.kind == GateKind::kS ? pi(1, 2) : op.theta;
      if (theta.is_zero()) return {};
      // e^{-i(2pi - theta)} = e^{i theta}; theta in (0, 2pi) keeps this positive.
      const Radians duration = pi(2) - theta;
      if (duration.value() < kMinDuration) return {};
      return {loops_step(duration, false, true)};
    }
    case GateKind::kI:
      return {};
  }
  return {};
}

Schedule pair_schedule(int n_vertices, const std::vector<Edge>& pairs,
                       const std::vector<PairStep>& steps) {
  std::vector<Segment> segments;
  for (const auto& step : steps) {
    std::vector<Edge> edges;
    std::vector<Vertex> loops;
    for (const auto& [low, high] : pairs) {
      if (step.path) {
        edges.emplace_back(low, high);
        continue;
      }
      if (step.loop_low) loops.push_back(low);
      if (step.loop_high) loops.push_back(high);
    }
    segments.push_back({Graph(n_vertices, std::move(edges), std::move(loops)), step.duration});
  }
  return Schedule(n_vertices, std::move(segments));
}

// Pairs (v, v | target) over vertices whose control bits are set and target bit clear.
std::vector<Edge> target_pairs(const GateOp& op, int n_qubits) {
  const int n_vertices = 1 << n_qubits;
  const int target_mask = 1 << bit_of(op.target(), n_qubits);
  int control_mask = 0;
  for (std::size_t i = 0; i + 1 < op.qubits.size(); ++i) {
    control_mask |= 1 << bit_of(op.qubits[i], n_qubits);
  }
  std::vector<Edge> pairs;
  for (int v = 0; v < n_vertices; ++v) {
    if ((v & target_mask) == 0 && (v & control_mask) == control_mask) {
      pairs.emplace_back(v, v | target_mask);
    }
  }
  return pairs;
}

Eigen::Matrix2cd single_qubit_matrix(const GateOp& op) {
  Eigen::Matrix2cd m;
  const double r = 1.0 / std::numbers::sqrt2;
  switch (op.kind) {
    case GateKind::kX:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::kY:
      m << 0.0, -kI, kI, 0.0;
      break;
    case GateKind::kZ:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case GateKind::kH:
    case GateKind::kHAlt:
      m << r, r, r, -r;
      break;
    case GateKind::kT:
      m << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0);
      break;
    case GateKind::kS:
      m << 1.0, 0.0, 0.0, kI;
      break;
    case GateKind::kPhase:
      m << 1.0, 0.0, 0.0, std::polar(1.0, op.theta.value());
      break;
    default:
      m.setIdentity();
      break;
  }
  return m;
}

bool is_controlled(GateKind kind) { return kind == GateKind::kCnot || kind == GateKind::kToffoli; }

Schedule concatenate(int n_vertices, const Circuit& circuit,
                     const std::vector<Schedule>& pieces) {
  Schedule out(n_vertices);
  std::vector<Radians> starts;
  for (const auto& piece : pieces) {
    starts.push_back(out.total_duration());
    out = out.then(piece);
  }
  starts.push_back(out.total_duration());

  int layer = 0;
  for (std::size_t mark : circuit.layer_marks) {
    out = out.with_checkpoint("layer" + std::to_string(++layer), starts[mark]);
  }
  if (!circuit.layer_marks.empty() && circuit.layer_marks.back() != circuit.ops.size()) {
    out = out.with_checkpoint("layer" + std::to_string(++layer), starts.back());
  }
  return out;
}

}  // namespace

std::string mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "x";
    case GateKind::kY: return "y";
    case GateKind::kZ: return "z";
    case GateKind::kI: return "i";
    case GateKind::kH: return "h";
    case GateKind::kHAlt: return "halt";
    case GateKind::kT: return "t";
    case GateKind::kS: return "s";
    case GateKind::kPhase: return "phase";
    case GateKind::kCnot: return "cnot";
    case GateKind::kToffoli: return "toffoli";
  }
  return "?";
}

GateOp GateOp::single(GateKind kind, int qubit) {
  if (is_controlled(kind)) throw ArgumentError(mnemonic(kind) + " is not a single-qubit gate");
  if (kind == GateKind::kPhase) throw ArgumentError("use GateOp::phase for phase gates");
  return GateOp{kind, {qubit}, {}};
}

GateOp GateOp::phase(Radians theta, int qubit) {
  return GateOp{GateKind::kPhase, {qubit}, theta.normalized_angle()};
}

GateOp GateOp::cnot(int control, int target) { return GateOp{GateKind::kCnot, {control, target}, {}}; }

GateOp GateOp::toffoli(int control1, int control2, int target) {
  return GateOp{GateKind::kToffoli, {control1, control2, target}, {}};
}

void validate_gate(const GateOp& op, int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ArgumentError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  std::size_t arity = 1;
  if (op.kind == GateKind::kCnot) arity = 2;
  if (op.kind == GateKind::kToffoli) arity = 3;
  if (op.qubits.size() != arity) {
    throw ArgumentError(mnemonic(op.kind) + " takes " + std::to_string(arity) + " qubit(s)");
  }
  if (static_cast<int>(arity) > n_qubits) {
    throw ArgumentError(mnemonic(op.kind) + " needs at least " + std::to_string(arity) +
                        " qubits, circuit has " + std::to_string(n_qubits));
  }
  for (int q : op.qubits) {
    if (q < 1 || q > n_qubits) {
      throw ArgumentError("qubit " + std::to_string(q) + " out of range [1, " +
                          std::to_string(n_qubits) + "]");
    }
  }
  std::set<int> distinct(op.qubits.begin(), op.qubits.end());
  if (distinct.size() != op.qubits.size()) {
    throw ArgumentError(mnemonic(op.kind) + " qubits must be distinct");
  }
  if (op.kind == GateKind::kPhase) {
    const double v = op.theta.value();
    if (op.theta.is_negative() || v >= 2.0 * std::numbers::pi) {
      throw ArgumentError("phase angle must be normalised into [0, 2pi)");
    }
  }
}

void Circuit::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ArgumentError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  for (const auto& op : ops) validate_gate(op, n_qubits);
  std::size_t previous = 0;
  for (std::size_t mark : layer_marks) {
    if (mark < previous || mark > ops.size()) throw ArgumentError("layer marks out of order");
    previous = mark;
  }
}

Schedule compile_gate(const GateOp& op, int n_qubits) {
  validate_gate(op, n_qubits);
  return pair_schedule(1 << n_qubits, target_pairs(op, n_qubits), pair_pattern(op));
}

Schedule compile_gate_legacy(const GateOp& op) {
  const auto pi = [](std::int64_t num, std::int64_t den = 1) { return Radians::pi_times(num, den); };
  switch (op.kind) {
    case GateKind::kX:
      validate_gate(op, 1);
      return compile_gate(op, 1);
    case GateKind::kY: {
      validate_gate(op, 1);
      // |000>,|001> swap as a P2 while the ancillas pick up -i; then |000>
      // sits in a C4 with ancillas |010>,|011>,|100> (identity at pi) while
      // everything else is negated.
      Graph swap(8, {{0, 1}}, {2, 3, 4, 5, 6, 7});
      Graph hold(8, {{0, 2}, {2, 3}, {3, 4}, {4, 0}}, {1, 5, 6, 7});
      return Schedule(8, {{swap, pi(1, 2)}, {hold, pi(1)}});
    }
    case GateKind::kZ: {
      validate_gate(op, 1);
      Graph hold(8, {{0, 2}, {2, 6}, {6, 4}, {4, 0}}, {1, 3, 5, 7});
      return Schedule(8, {{hold, pi(1)}});
    }
    case GateKind::kCnot: {
      validate_gate(op, 2);
      if (op.qubits != std::vector<int>{1, 2}) {
        throw ArgumentError("legacy cnot is defined for control 1 and target 2 only");
      }
      Graph phase(4, {}, {0, 1, 2, 3});
      Graph swap(4, {{2, 3}}, {0, 1});
      return Schedule(4, {{phase, pi(3, 2)}, {swap, pi(1, 2)}});
    }
    default:
      throw UnsupportedGate("legacy form not prose-specified for gate '" + mnemonic(op.kind) + "'");
  }
}

std::vector<Vertex> legacy_ancillas(GateKind kind) {
  if (kind == GateKind::kY || kind == GateKind::kZ) return {2, 3, 4, 5, 6, 7};
  return {};
}

Schedule compile_identity(IdentityForm form, int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ArgumentError("qubit count " + std::to_string(n_qubits) + " out of range");
  }
  const int n = 1 << n_qubits;
  switch (form) {
    case IdentityForm::kEmpty:
      return Schedule(n);
    case IdentityForm::kAllLooped: {
      std::vector<Vertex> loops(n);
      for (int v = 0; v < n; ++v) loops[v] = v;
      return Schedule(n, {{Graph(n, {}, std::move(loops)), Radians::pi_times(2)}});
    }
    case IdentityForm::kPairedPaths: {
      std::vector<Edge> edges;
      for (int v = 0; v < n; v += 2) edges.emplace_back(v, v + 1);
      return Schedule(n, {{Graph(n, std::move(edges)), Radians::pi_times(2)}});
    }
    case IdentityForm::kCycleGroups: {
      if (n_qubits < 2) throw ArgumentError("C4 identity needs at least two qubits");
      std::vector<Edge> edges;
      for (int v = 0; v < n; v += 4) {
        edges.insert(edges.end(), {{v, v + 1}, {v + 1, v + 3}, {v + 3, v + 2}, {v + 2, v}});
      }
      return Schedule(n, {{Graph(n, std::move(edges)), Radians::pi_times(1)}});
    }
  }
  return Schedule(n);
}

Schedule compile_circuit(const Circuit& circuit) {
  circuit.validate();
  std::vector<Schedule> pieces;
  for (const auto& op : circuit.ops) pieces.push_back(compile_gate(op, circuit.n_qubits));
  return concatenate(1 << circuit.n_qubits, circuit, pieces);
}

Schedule compile_circuit_legacy(const Circuit& circuit) {
  circuit.validate();
  std::vector<Schedule> pieces;
  int n_vertices = 0;
  for (const auto& op : circuit.ops) {
    pieces.push_back(compile_gate_legacy(op));
    const int n = pieces.back().n();
    if (n_vertices != 0 && n != n_vertices) {
      throw ArgumentError("legacy gates in one circuit must share a vertex count (" +
                          std::to_string(n_vertices) + " vs " + std::to_string(n) + ")");
    }
    n_vertices = n;
  }
  if (n_vertices == 0) n_vertices = 1 << circuit.n_qubits;
  return concatenate(n_vertices, circuit, pieces);
}

Eigen::MatrixXcd gate_unitary(const Schedule& s) {
  const int n = s.n();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& seg : s.segments()) {
    const SegmentPropagator prop(seg.graph);
    const double t = seg.duration.value();
    for (int j = 0; j < n; ++j) u.col(j) = prop.apply(Amplitudes(u.col(j)), t);
  }
  const double defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw EngineError("schedule unitary deviates from unitarity by " + std::to_string(defect));
  }
  return u;
}

Eigen::MatrixXcd reference_unitary(const GateOp& op, int n_qubits) {
  validate_gate(op, n_qubits);
  const int n = 1 << n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  const int target_bit = bit_of(op.target(), n_qubits);

  if (is_controlled(op.kind)) {
    int control_mask = 0;
    for (std::size_t i = 0; i + 1 < op.qubits.size(); ++i) {
      control_mask |= 1 << bit_of(op.qubits[i], n_qubits);
    }
    for (int col = 0; col < n; ++col) {
      const int row = (col & control_mask) == control_mask ? col ^ (1 << target_bit) : col;
      u(row, col) = 1.0;
    }
    return u;
  }

  const Eigen::Matrix2cd m = single_qubit_matrix(op);
  const int rest = ~(1 << target_bit);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if ((row & rest) != (col & rest)) continue;
      u(row, col) = m((row >> target_bit) & 1, (col >> target_bit) & 1);
    }
  }
  return u;
}

PhaseComparison equal_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                         double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw ArgumentError("cannot compare " + std::to_string(u.rows()) + "x" +
                        std::to_string(u.cols()) + " with " + std::to_string(v.rows()) + "x" +
                        std::to_string(v.cols()));
  }
  PhaseComparison out;
  if (v.size() > 0) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    const double peak = v.cwiseAbs().maxCoeff(&r, &c);
    if (peak > 0.0) {
      const Complex ratio = u(r, c) / v(r, c);
      if (std::abs(ratio) > 0.0) out.phase = ratio / std::abs(ratio);
    }
    out.max_deviation = (u - out.phase * v).cwiseAbs().maxCoeff();
  }
  out.equal = out.max_deviation <= tol;
  return out;
}

}  // namespace qwalk
