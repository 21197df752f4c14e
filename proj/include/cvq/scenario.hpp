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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvq {

enum class Command { Clone, Teleport, Attack, Conditional, Scan, Verify };

std::string command_name(Command command);

/// Scenario validation failure; carries the offending key so the CLI can
/// name it (exit code 2).
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message
                                       : key + ": " + message),
        key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// start:stop:steps sweep; steps is the point count (inclusive endpoints).
struct SweepRange {
  double start;
  double stop;
  int steps;

  std::vector<double> expand() const;
};

/// Raw key/value view of a run: scenario-file lines and CLI flags funnel
/// into the same map (flags override file entries).
using KeyValues = std::map<std::string, std::string>;

/// Reads a line-oriented `key = value` scenario file; '#' starts a comment.
KeyValues read_scenario_file(const std::string& path);

/// A validated, typed run description.
struct Scenario {
  Command command = Command::Verify;

  // clone
  int copies = 2;
  std::optional<double> amplifier_gain;  // asymmetric two-copy cloner
  std::optional<double> transmittance;

  // teleport / attack / conditional
  double squeeze = 0.0;  // resolved EPR parameter r
  double gain = 1.0;
  double loss_alice = 0.0;  // lost fraction, arm efficiency = 1 - loss
  double loss_bob = 0.0;
  bool eve = false;
  std::optional<double> eta;           // attack/conditional efficiency
  std::optional<double> bob_fidelity;  // cheating-Alice target
  double input_x = 0.0;
  double input_y = 0.0;

  // scan
  std::optional<Command> scan_command;
  std::string sweep_key;
  std::optional<SweepRange> sweep;

  // globals
  std::uint64_t seed = 42;
  std::int64_t samples = 0;
  double n0 = 1.0;
  std::string output;
  std::string format = "csv";
  std::optional<std::string> dump_samples;

  std::vector<std::string> warnings;
  KeyValues raw;
};

/// Validates and types a key/value set. Throws ScenarioError naming the
/// offending key on unknown keys, type mismatches and range violations.
Scenario parse_scenario(const KeyValues& kv);

}  // namespace cvq
