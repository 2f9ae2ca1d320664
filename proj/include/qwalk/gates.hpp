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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/radians.hpp"

namespace qwalk {

/** Largest supported register; schedules have 2^n vertices. */
inline constexpr int kMaxQubits = 20;

enum class GateKind { kX, kY, kZ, kI, kH, kHAlt, kT, kS, kPhase, kCnot, kToffoli };

/** Lowercase DSL mnemonic ("x", "halt", "phase", "cnot", ...). */
std::string mnemonic(GateKind kind);

/**
 * One gate application. Qubits are 1-based with qubit 1 the leftmost (most
 * significant) bit of a vertex label. For controlled gates the controls come
 * first and the target last.
 */
struct GateOp {
  GateKind kind = GateKind::kI;
  std::vector<int> qubits;
  Radians theta;  // Phase only, normalised into [0, 2pi)

  static GateOp single(GateKind kind, int qubit);
  static GateOp phase(Radians theta, int qubit);
  static GateOp cnot(int control, int target);
  static GateOp toffoli(int control1, int control2, int target);

  int target() const { return qubits.back(); }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/**
 * Throws ArgumentError unless op's qubits are distinct, lie in [1, n_qubits],
 * and the gate fits (CNOT needs two qubits, Toffoli three).
 */
void validate_gate(const GateOp& op, int n_qubits);

/**
 * An ordered gate list. layer_marks[k] is the number of ops that precede the
 * k-th layer boundary, so marks are nondecreasing and at most ops.size().
 */
struct Circuit {
  int n_qubits = 1;
  std::vector<GateOp> ops;
  std::vector<std::size_t> layer_marks;

  /** Throws ArgumentError if any op or mark is invalid. */
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/**
 * Lower one gate to a dynamic graph on 2^n_qubits vertices.
 *
 * Single-qubit gates act on every pair of vertices that differ only in the
 * target bit, all pairs in parallel. CNOT and Toffoli act on the pairs whose
 * control bits are all 1 and leave every other vertex as a loopless isolated
 * vertex. The identity compiles to the empty schedule.
 */
Schedule compile_gate(const GateOp& op, int n_qubits);

/**
 * The all-looped constructions for X, Y, Z and CNOT on fixed vertex counts
 * (2, 8, 8 and 4). Y and Z act on the {|000>, |001>} subspace and use ancilla
 * vertices. H and T throw UnsupportedGate.
 */
Schedule compile_gate_legacy(const GateOp& op);

/** Vertices a legacy schedule reserves as ancillas (empty for X and CNOT). */
std::vector<Vertex> legacy_ancillas(GateKind kind);

enum class IdentityForm { kEmpty, kAllLooped, kPairedPaths, kCycleGroups };

/**
 * Identity on 2^n_qubits vertices: empty, all looped for 2pi, P2 pairs on
 * the last qubit for 2pi, or C4 groups on the last two qubits for pi (needs
 * n_qubits >= 2).
 */
Schedule compile_identity(IdentityForm form, int n_qubits);

/**
 * Concatenate compile_gate over the ops. Each layer mark becomes a checkpoint
 * `layer<k>` (k from 1); when marks are present and the last one is not at
 * the end, a final checkpoint closes the last layer.
 */
Schedule compile_circuit(const Circuit& circuit);

/** compile_circuit with compile_gate_legacy; all ops must agree on vertex count. */
Schedule compile_circuit_legacy(const Circuit& circuit);

/** Column j is the schedule applied to basis state |j>. */
Eigen::MatrixXcd gate_unitary(const Schedule& s);

/** The textbook matrix of op embedded on n_qubits qubits. */
Eigen::MatrixXcd reference_unitary(const GateOp& op, int n_qubits);

struct PhaseComparison {
  bool equal = false;
  std::complex<double> phase{1.0, 0.0};
  double max_deviation = 0.0;
};

/**
 * Whether u = phase * v elementwise within tol, with the unit-modulus phase
 * read off the largest-magnitude entry of v. Throws ArgumentError on a shape
 * mismatch.
 */
PhaseComparison equal_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                         double tol);

}  // namespace qwalk
