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

#include "qwalk/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"

namespace qwalk::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ArgumentError("failed writing '" + path + "'");
}

void check_config(const RunConfig& config) {
  if (!(config.dt > 0.0)) throw ArgumentError("--dt must be positive");
  if (!(config.tol > 0.0)) throw ArgumentError("--tol must be positive");
}

// Runs body, mapping library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnsupportedGate& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
  } catch (const EngineError& e) {
    err << "engine error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

std::string format_complex(Complex c) {
  return format_real(c.real(), 15) + "," + format_real(c.imag(), 15);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ArgumentError("malformed qubit index '" + token + "'");
    }
    if (used != token.size()) throw ArgumentError("malformed qubit index '" + token + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError("missing qubit index");
  return out;
}

// Legacy constructions are compared on the subspace they claim to act on.
std::vector<int> legacy_subspace(const GateOp& op, int n_vertices) {
  if (op.kind == GateKind::kY || op.kind == GateKind::kZ) return {0, 1};
  std::vector<int> all(n_vertices);
  for (int i = 0; i < n_vertices; ++i) all[i] = i;
  return all;
}

}  // namespace

GateOp parse_gate_spec(const std::string& gate, const std::string& targets) {
  std::vector<int> controls;
  std::string target_text = targets;
  if (auto arrow = targets.find("->"); arrow != std::string::npos) {
    std::string lhs = targets.substr(0, arrow);
    if (lhs.size() >= 2 && lhs.front() == '(' && lhs.back() == ')') lhs = lhs.substr(1, lhs.size() - 2);
    controls = parse_int_list(lhs);
    target_text = targets.substr(arrow + 2);
  }
  auto target = parse_int_list(target_text);
  if (target.size() != 1) throw ArgumentError("exactly one target qubit expected");

  if (gate == "cnot" || gate == "toffoli") {
    const std::size_t want = gate == "cnot" ? 1 : 2;
    if (controls.size() != want) {
      throw ArgumentError(gate + " needs " + std::to_string(want) + " control(s), e.g. " +
                          (want == 1 ? "1->2" : "(1,2)->3"));
    }
    return want == 1 ? GateOp::cnot(controls[0], target[0])
                     : GateOp::toffoli(controls[0], controls[1], target[0]);
  }
  if (!controls.empty()) throw ArgumentError(gate + " takes no control qubits");

  return parse_single_qubit_gate(gate, target[0]);
}

Circuit layered_demo_circuit() {
  Circuit c;
  c.n_qubits = 3;
  c.ops = {GateOp::single(GateKind::kH, 1), GateOp::single(GateKind::kX, 2),
           GateOp::single(GateKind::kH, 3), GateOp::cnot(1, 2),
           GateOp::single(GateKind::kY, 1), GateOp::single(GateKind::kT, 2),
           GateOp::single(GateKind::kZ, 3), GateOp::cnot(3, 2)};
  c.layer_marks = {3, 4, 7};
  return c;
}

std::vector<Amplitudes> layered_demo_expected() {
  const Complex i{0.0, 1.0};
  const Complex e = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
  std::vector<Amplitudes> states(4, Amplitudes::Zero(8));
  states[0][0b010] = states[0][0b011] = states[0][0b110] = states[0][0b111] = 0.5;
  states[1][0b010] = states[1][0b011] = states[1][0b100] = states[1][0b101] = 0.5;
  states[2][0b000] = -0.5 * i;
  states[2][0b001] = 0.5 * i;
  states[2][0b110] = 0.5 * e;
  states[2][0b111] = -0.5 * e;
  states[3][0b000] = -0.5 * i;
  states[3][0b011] = 0.5 * i;
  states[3][0b101] = -0.5 * e;
  states[3][0b110] = 0.5 * e;
  return states;
}

int cmd_compile(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Circuit circuit = parse_circuit(read_file(config.input));
    const Schedule schedule =
        config.legacy ? compile_circuit_legacy(circuit) : compile_circuit(circuit);
    const std::string text = serialize_schedule(schedule);
    const std::string duration = schedule.total_duration().to_string();
    if (config.out) {
      write_file(*config.out, text);
      out << "total duration " << duration << '\n';
    } else {
      out << text;
      err << "total duration " << duration << '\n';
    }
    return kExitOk;
  });
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config);
    const Schedule schedule = parse_schedule(read_file(config.input));
    const StateVector initial = config.init ? StateSpec::parse(*config.init).to_state(schedule.n())
                                            : StateVector::basis(schedule.n(), 0);
    const WalkTrace trace = trace_schedule(schedule, initial, config.dt);
    if (config.out) {
      std::ostringstream csv;
      write_trace_csv(csv, trace);
      write_file(*config.out, csv.str());
    }
    write_amplitudes(out, trace.final_state);
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config);
    const GateOp op = parse_gate_spec(config.gate, config.targets);

    Eigen::MatrixXcd actual;
    Eigen::MatrixXcd expected;
    if (config.legacy) {
      const Schedule s = compile_gate_legacy(op);
      const Eigen::MatrixXcd full = gate_unitary(s);
      const auto sub = legacy_subspace(op, s.n());
      const int n_qubits = op.kind == GateKind::kCnot ? 2 : 1;
      expected = reference_unitary(op, n_qubits);
      actual.resize(static_cast<Eigen::Index>(sub.size()), static_cast<Eigen::Index>(sub.size()));
      for (std::size_t r = 0; r < sub.size(); ++r) {
        for (std::size_t c = 0; c < sub.size(); ++c) actual(r, c) = full(sub[r], sub[c]);
      }
    } else {
      actual = gate_unitary(compile_gate(op, config.n_qubits));
      expected = reference_unitary(op, config.n_qubits);
    }

    const double deviation = (actual - expected).cwiseAbs().maxCoeff();
    const PhaseComparison phase = equal_up_to_global_phase(actual, expected, config.tol);
    const bool pass = deviation <= config.tol;
    out << (pass ? "pass" : "FAIL") << ' ' << config.gate << ' ' << config.targets
        << " n=" << config.n_qubits << (config.legacy ? " legacy" : "")
        << " max_deviation=" << format_real(deviation, 3)
        << " global_phase=" << format_complex(phase.phase) << '\n';
    return pass ? kExitOk : kExitFailed;
  });
}

int cmd_demo_layers(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_config(config);
    const Schedule schedule = compile_circuit(layered_demo_circuit());
    const StateVector initial = StateVector::basis(schedule.n(), 0);
    const WalkTrace trace = trace_schedule(schedule, initial, config.dt);
    if (config.out) {
      std::ostringstream csv;
      write_trace_csv(csv, trace);
      write_file(*config.out, csv.str());
    }

    std::vector<double> times;
    for (const auto& cp : schedule.checkpoints()) times.push_back(cp.time.value());
    const auto states = sample_schedule(schedule, initial, times);
    const auto expected = layered_demo_expected();

    bool all_pass = true;
    for (std::size_t k = 0; k < states.size(); ++k) {
      const auto& cp = schedule.checkpoints()[k];
      const double deviation = (states[k].amplitudes() - expected[k]).cwiseAbs().maxCoeff();
      const bool pass = deviation <= config.tol;
      all_pass = all_pass && pass;
      out << cp.label << " t=" << cp.time.to_string() << ' ' << (pass ? "pass" : "FAIL")
          << " max_deviation=" << format_real(deviation, 3) << '\n';
      for (int v = 0; v < states[k].size(); ++v) {
        out << "  |";
        for (int b = 2; b >= 0; --b) out << ((v >> b) & 1);
        out << "> " << format_complex(states[k][v]) << "  expected "
            << format_complex(expected[k][v]) << '\n';
      }
    }
    out << "total duration " << schedule.total_duration().to_string() << '\n';
    return all_pass ? kExitOk : kExitFailed;
  });
}

}  // namespace qwalk::cli
