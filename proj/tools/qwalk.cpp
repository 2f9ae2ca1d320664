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

#include <CLI11.hpp>
#include <iostream>

#include "qwalk/cli.hpp"

int main(int argc, char** argv) {
  using namespace qwalk::cli;

  CLI::App app{"qwalk: compile circuits to dynamic graphs and simulate quantum walks on them"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  std::string init;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file");
    sub->add_option("--dt", config.dt, "Trace sampling step (default pi/100)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", config.tol, "Verification tolerance")->check(CLI::PositiveNumber);
  };

  auto* compile = app.add_subcommand("compile", "Lower a circuit file to a schedule file");
  compile->add_option("circuit", config.input, "Circuit file")->required();
  compile->add_flag("--legacy", config.legacy, "Use the all-looped constructions");
  add_common(compile);

  auto* simulate = app.add_subcommand("simulate", "Run a schedule and write a probability trace");
  simulate->add_option("schedule", config.input, "Schedule file")->required();
  simulate->add_option("--init", init, "basis:<bits> or amps:<re>,<im>;...");
  add_common(simulate);

  auto* verify = app.add_subcommand("verify", "Compare a compiled gate with its textbook unitary");
  verify->add_option("gate", config.gate, "Gate mnemonic, e.g. h, t, phase(pi/3), cnot")->required();
  verify->add_option("targets", config.targets, "q, c->t or (c1,c2)->t")->required();
  verify->add_option("n_qubits", config.n_qubits, "Number of qubits (ignored with --legacy)")->default_val(1);
  verify->add_flag("--legacy", config.legacy, "Check the all-looped construction");
  add_common(verify);

  auto* demo = app.add_subcommand("demo-layers", "Simulate the four-layer three-qubit demo circuit");
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!out_path.empty()) config.out = out_path;
  if (!init.empty()) config.init = init;

  if (compile->parsed()) return cmd_compile(config, std::cout, std::cerr);
  if (simulate->parsed()) return cmd_simulate(config, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(config, std::cout, std::cerr);
  return cmd_demo_layers(config, std::cout, std::cerr);
}
