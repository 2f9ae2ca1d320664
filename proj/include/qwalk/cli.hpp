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
#include <optional>
#include <string>
#include <vector>

#include "qwalk/gates.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string input;
  std::optional<std::string> out;
  double dt = kDefaultTraceStep;
  double tol = 1e-9;
  bool legacy = false;
  std::optional<std::string> init;

  // verify
  std::string gate;
  std::string targets;
  int n_qubits = 1;
};

int cmd_compile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_demo_layers(const RunConfig& config, std::ostream& out, std::ostream& err);

/**
 * Build a GateOp from a gate name (`h`, `phase(pi/3)`, `toffoli`, ...) and a
 * target spec: `q`, `c->t` or `(c1,c2)->t`. Throws ArgumentError.
 */
GateOp parse_gate_spec(const std::string& gate, const std::string& targets);

/** H q1, X q2, H q3 | CNOT 1->2 | Y q1, T q2, Z q3 | CNOT 3->2. */
Circuit layered_demo_circuit();

/** The exact state after each of the four demo layers, starting from |000>. */
std::vector<Amplitudes> layered_demo_expected();

}  // namespace qwalk::cli
