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

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwalk/gates.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Circuit text, one op per line:
//
//   qubits <n>
//   x|y|z|i|h|halt|t|s <q>
//   phase(<angle>) <q>
//   cnot <control> <target>
//   toffoli <control> <control> <target>
//   layer
//
// Qubits are 1-based, qubit 1 leftmost. Angles are decimals or [p]pi[/q].
// `#` starts a comment. Errors throw ParseError with the 1-based line.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

/** A single-qubit op from its mnemonic (`h`, `halt`, `phase(pi/3)`, ...). Throws ArgumentError. */
GateOp parse_single_qubit_gate(std::string_view mnemonic, int qubit);

// Schedule text:
//
//   vertices <n>
//   segment <duration>
//   edge <u> <v>
//   loop <v>
//   end
//   checkpoint <label> <cumulative-time>
//
// Vertices are 0-based. Durations that are exact multiples of pi are written
// as [p]pi[/q] and read back exactly.
Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& schedule);

/** An initial state: `basis:<bits>` or `amps:<re>,<im>;<re>,<im>;...`. */
struct StateSpec {
  std::variant<std::string, std::vector<Complex>> value;

  /** Throws ArgumentError on malformed text. */
  static StateSpec parse(std::string_view text);

  /**
   * Materialise on n vertices. A bit string needs n == 2^length; an explicit
   * list needs n entries with norm 1 within 1e-9 (it is then rescaled to
   * exactly unit norm).
   */
  StateVector to_state(int n) const;

  std::string to_string() const;
};

/** Header `t,p0,...,p{n-1}`, then one row per sample, 17 significant digits. */
void write_trace_csv(std::ostream& out, const WalkTrace& trace);

struct TraceTable {
  std::vector<double> times;
  std::vector<std::vector<double>> probabilities;
};

TraceTable parse_trace_csv(std::string_view text);

/** One `re,im` line per amplitude, 15 significant digits. */
void write_amplitudes(std::ostream& out, const StateVector& state);

/** printf-style %.<digits>g without locale dependence. */
std::string format_real(double v, int digits);

}  // namespace qwalk
