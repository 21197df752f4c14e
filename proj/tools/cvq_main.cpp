// Copyright 2026 The cvqsim Authors
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

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cvq/runner.hpp"
#include "cvq/scenario.hpp"

namespace {

using cvq::KeyValues;

/// Registers a string option whose value lands in the key/value overlay.
void kv_option(CLI::App* app, const std::string& flag, const std::string& key,
               KeyValues& overlay, const std::string& description) {
  app->add_option_function<std::string>(
      flag,
      [&overlay, key](const std::string& value) { overlay[key] = value; },
      description);
}

void kv_flag(CLI::App* app, const std::string& flag, const std::string& key,
             KeyValues& overlay, const std::string& description) {
  app->add_flag_function(
      flag,
      [&overlay, key](std::int64_t count) {
        if (count > 0) overlay[key] = "true";
      },
      description);
}

void add_teleport_options(CLI::App* sub, KeyValues& overlay,
                          bool with_ranges) {
  const std::string range_hint =
      with_ranges ? " (accepts start:stop:steps)" : "";
  kv_option(sub, "--squeezing-db", "squeezing_db", overlay,
            "EPR squeezing in dB" + range_hint);
  kv_option(sub, "--squeezing-r", "squeezing_r", overlay,
            "EPR squeeze parameter r" + range_hint);
  kv_option(sub, "--gain", "gain", overlay,
            "classical feedforward gain" + range_hint);
  kv_option(sub, "--loss-alice", "loss_alice", overlay,
            "lost fraction on Alice's arm" + range_hint);
  kv_option(sub, "--loss-bob", "loss_bob", overlay,
            "lost fraction on Bob's arm" + range_hint);
  kv_option(sub, "--input-x", "input_x", overlay, "input coherent mean X");
  kv_option(sub, "--input-y", "input_y", overlay, "input coherent mean Y");
  kv_flag(sub, "--eve", "eve", overlay, "Eve taps Bob's arm");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cvq: Gaussian quantum optics toolbox for cloning machines, EPR "
      "teleportation and eavesdropping analysis"};
  app.require_subcommand(0, 1);

  std::string scenario_path;
  KeyValues overlay;

  app.add_option("--scenario", scenario_path,
                 "scenario file with 'key = value' lines (flags override)");
  kv_option(&app, "--seed", "seed", overlay, "master seed (64-bit)");
  kv_option(&app, "--samples", "samples", overlay,
            "Monte Carlo shots (0 = analytic only)");
  kv_option(&app, "--n0", "n0", overlay, "vacuum noise unit N0");
  kv_option(&app, "--output", "output", overlay, "CSV output path");
  kv_option(&app, "--format", "format", overlay, "output format (csv)");

  CLI::App* clone = app.add_subcommand("clone", "build and report a cloner");
  kv_option(clone, "--copies", "copies", overlay, "number of copies M");
  kv_option(clone, "--amplifier-gain", "amplifier_gain", overlay,
            "asymmetric cloner amplifier gain G");
  kv_option(clone, "--transmittance", "transmittance", overlay,
            "asymmetric cloner splitter transmittance t");

  CLI::App* teleport =
      app.add_subcommand("teleport", "run the EPR teleportation protocol");
  add_teleport_options(teleport, overlay, false);
  kv_option(teleport, "--dump-samples", "dump_samples", overlay,
            "write per-shot outcomes to this CSV (with --samples)");

  CLI::App* attack = app.add_subcommand(
      "attack", "adversaries: Eve on a lossy arm, or cheating Alice");
  kv_option(attack, "--squeezing-db", "squeezing_db", overlay,
            "EPR squeezing in dB");
  kv_option(attack, "--squeezing-r", "squeezing_r", overlay,
            "EPR squeeze parameter r");
  kv_option(attack, "--eta", "eta", overlay, "Bob-arm efficiency Eve taps");
  kv_option(attack, "--bob-fidelity", "bob_fidelity", overlay,
            "cheating-Alice target fidelity for Bob, in (1/2, 2/3]");

  CLI::App* conditional = app.add_subcommand(
      "conditional", "conditional variance of one EPR arm given the other");
  kv_option(conditional, "--squeezing-db", "squeezing_db", overlay,
            "EPR squeezing in dB");
  kv_option(conditional, "--squeezing-r", "squeezing_r", overlay,
            "EPR squeeze parameter r");
  kv_option(conditional, "--eta", "eta", overlay, "per-beam efficiency");

  CLI::App* scan =
      app.add_subcommand("scan", "sweep one parameter of teleport or attack");
  kv_option(scan, "--command", "scan_command", overlay,
            "command to sweep: teleport or attack");
  kv_option(scan, "--eta", "eta", overlay,
            "Bob-arm efficiency (accepts start:stop:steps)");
  add_teleport_options(scan, overlay, true);

  app.add_subcommand("verify",
                     "run the full verification suite (exit 0 iff green)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    KeyValues kv;
    if (!scenario_path.empty()) kv = cvq::read_scenario_file(scenario_path);
    for (const auto& [key, value] : overlay) kv[key] = value;
    for (const CLI::App* sub : app.get_subcommands()) {
      kv["command"] = sub->get_name();
    }
    const cvq::Scenario scenario = cvq::parse_scenario(kv);
    return cvq::run_scenario(scenario, std::cout, std::cerr);
  } catch (const cvq::ScenarioError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
