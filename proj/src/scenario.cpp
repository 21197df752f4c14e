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

#include "cvq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace cvq {

namespace {

const std::set<std::string> kKnownKeys = {
    "command",      "copies",        "amplifier_gain", "transmittance",
    "squeezing_r",  "squeezing_db",  "gain",           "loss_alice",
    "loss_bob",     "eve",           "eta",            "bob_fidelity",
    "input_x",      "input_y",       "scan_command",   "samples",
    "seed",         "n0",            "output",         "format",
    "dump_samples",
};

// Keys a scan may sweep with a start:stop:steps range.
const std::set<std::string> kSweepableKeys = {
    "eta", "squeezing_r", "squeezing_db", "gain", "loss_alice", "loss_bob",
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t consumed = 0;
    const double parsed = std::stod(value, &consumed);
    if (consumed != value.size() || !std::isfinite(parsed)) {
      throw std::invalid_argument(value);
    }
    return parsed;
  } catch (const std::exception&) {
    throw ScenarioError(key, "expected a number, got '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    size_t consumed = 0;
    const std::int64_t parsed = std::stoll(value, &consumed);
    if (consumed != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ScenarioError(key, "expected an integer, got '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    size_t consumed = 0;
    const std::uint64_t parsed = std::stoull(value, &consumed);
    if (consumed != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ScenarioError(key, "expected an unsigned integer, got '" + value +
                                 "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ScenarioError(key, "expected a boolean, got '" + value + "'");
}

bool is_range(const std::string& value) {
  return std::count(value.begin(), value.end(), ':') == 2;
}

SweepRange parse_range(const std::string& key, const std::string& value) {
  const auto first = value.find(':');
  const auto second = value.find(':', first + 1);
  SweepRange range{
      parse_double(key, value.substr(0, first)),
      parse_double(key, value.substr(first + 1, second - first - 1)),
      static_cast<int>(parse_int(key, value.substr(second + 1))),
  };
  if (range.steps < 1) {
    throw ScenarioError(key, "sweep needs at least 1 step");
  }
  return range;
}

Command parse_command(const std::string& key, const std::string& value) {
  if (value == "clone") return Command::Clone;
  if (value == "teleport") return Command::Teleport;
  if (value == "attack") return Command::Attack;
  if (value == "conditional") return Command::Conditional;
  if (value == "scan") return Command::Scan;
  if (value == "verify") return Command::Verify;
  throw ScenarioError(key, "unknown command '" + value + "'");
}

double db_to_squeeze(double db) { return db * std::log(10.0) / 20.0; }

}  // namespace

std::string command_name(Command command) {
  switch (command) {
    case Command::Clone:
      return "clone";
    case Command::Teleport:
      return "teleport";
    case Command::Attack:
      return "attack";
    case Command::Conditional:
      return "conditional";
    case Command::Scan:
      return "scan";
    case Command::Verify:
      return "verify";
  }
  throw std::logic_error("unknown command");
}

std::vector<double> SweepRange::expand() const {
  std::vector<double> values(steps);
  if (steps == 1) {
    values[0] = start;
    return values;
  }
  for (int i = 0; i < steps; ++i) {
    values[i] = start + (stop - start) * static_cast<double>(i) /
                            static_cast<double>(steps - 1);
  }
  return values;
}

KeyValues read_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("", "cannot open scenario file: " + path);
  KeyValues kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError("", "line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

Scenario parse_scenario(const KeyValues& kv) {
  Scenario s;
  s.raw = kv;

  for (const auto& [key, value] : kv) {
    if (!kKnownKeys.count(key)) {
      throw ScenarioError(key, "unknown key");
    }
    if (is_range(value)) {
      if (!kSweepableKeys.count(key)) {
        throw ScenarioError(key, "ranges are not allowed for this key");
      }
      continue;  // resolved below, only valid under scan
    }
    if (key == "command") {
      s.command = parse_command(key, value);
    } else if (key == "copies") {
      const auto copies = parse_int(key, value);
      if (copies < 1) throw ScenarioError(key, "copies must be >= 1");
      s.copies = static_cast<int>(copies);
    } else if (key == "amplifier_gain") {
      const double g = parse_double(key, value);
      if (g < 1.0) throw ScenarioError(key, "amplifier gain must be >= 1");
      s.amplifier_gain = g;
    } else if (key == "transmittance") {
      const double t = parse_double(key, value);
      if (t <= 0.0 || t >= 1.0) {
        throw ScenarioError(key, "transmittance must be in (0, 1)");
      }
      s.transmittance = t;
    } else if (key == "squeezing_r" || key == "squeezing_db") {
      const double v = parse_double(key, value);
      // resolved jointly after the loop
      if (key == "squeezing_r" && v < 0.0) {
        throw ScenarioError(key, "squeeze parameter must be >= 0");
      }
      if (key == "squeezing_db" && v < 0.0) {
        throw ScenarioError(key, "squeezing in dB must be >= 0");
      }
    } else if (key == "gain") {
      const double g = parse_double(key, value);
      if (g <= 0.0) throw ScenarioError(key, "gain must be > 0");
      s.gain = g;
    } else if (key == "loss_alice" || key == "loss_bob") {
      const double l = parse_double(key, value);
      if (l < 0.0 || l > 1.0) {
        throw ScenarioError(key, "loss fraction must be in [0, 1]");
      }
      (key == "loss_alice" ? s.loss_alice : s.loss_bob) = l;
    } else if (key == "eve") {
      s.eve = parse_bool(key, value);
    } else if (key == "eta") {
      const double eta = parse_double(key, value);
      if (eta < 0.0 || eta > 1.0) {
        throw ScenarioError(key, "efficiency must be in [0, 1]");
      }
      s.eta = eta;
    } else if (key == "bob_fidelity") {
      const double f = parse_double(key, value);
      if (f <= 0.5 || f > 2.0 / 3.0) {
        throw ScenarioError(key, "target must be in (1/2, 2/3]");
      }
      s.bob_fidelity = f;
    } else if (key == "input_x") {
      s.input_x = parse_double(key, value);
    } else if (key == "input_y") {
      s.input_y = parse_double(key, value);
    } else if (key == "scan_command") {
      s.scan_command = parse_command(key, value);
    } else if (key == "samples") {
      const auto n = parse_int(key, value);
      if (n < 0) throw ScenarioError(key, "samples must be >= 0");
      s.samples = n;
    } else if (key == "seed") {
      s.seed = parse_uint(key, value);
    } else if (key == "n0") {
      const double n0 = parse_double(key, value);
      if (n0 <= 0.0) throw ScenarioError(key, "N0 must be > 0");
      s.n0 = n0;
    } else if (key == "output") {
      s.output = value;
    } else if (key == "format") {
      if (value != "csv") {
        throw ScenarioError(key, "only 'csv' is supported");
      }
      s.format = value;
    } else if (key == "dump_samples") {
      s.dump_samples = value;
    }
  }

  if (!kv.count("command")) {
    throw ScenarioError("command", "missing command");
  }

  // Squeezing: dB wins over r on conflict, with a warning.
  const auto r_it = kv.find("squeezing_r");
  const auto db_it = kv.find("squeezing_db");
  const bool r_scalar = r_it != kv.end() && !is_range(r_it->second);
  const bool db_scalar = db_it != kv.end() && !is_range(db_it->second);
  if (db_scalar) {
    s.squeeze = db_to_squeeze(parse_double("squeezing_db", db_it->second));
    if (r_scalar) {
      s.warnings.push_back(
          "both squeezing_db and squeezing_r given; using squeezing_db");
    }
  } else if (r_scalar) {
    s.squeeze = parse_double("squeezing_r", r_it->second);
  }

  // Sweep resolution.
  std::vector<std::string> range_keys;
  for (const auto& [key, value] : kv) {
    if (kSweepableKeys.count(key) && is_range(value)) {
      range_keys.push_back(key);
    }
  }
  if (s.command == Command::Scan) {
    if (!s.scan_command) {
      throw ScenarioError("scan_command", "scan needs a command to sweep");
    }
    if (*s.scan_command != Command::Teleport &&
        *s.scan_command != Command::Attack) {
      throw ScenarioError("scan_command",
                          "scan supports 'teleport' and 'attack'");
    }
    if (range_keys.empty()) {
      throw ScenarioError(
          "", "scan needs one start:stop:steps range (e.g. eta = 0:1:101)");
    }
    if (range_keys.size() > 1) {
      throw ScenarioError(range_keys[1],
                          "scan allows exactly one swept range");
    }
    s.sweep_key = range_keys[0];
    s.sweep = parse_range(s.sweep_key, kv.at(s.sweep_key));
  } else if (!range_keys.empty()) {
    throw ScenarioError(range_keys[0],
                        "ranges are only allowed under 'scan'");
  }

  // Per-command requirements.
  if (s.command == Command::Clone) {
    if (s.amplifier_gain.has_value() != s.transmittance.has_value()) {
      throw ScenarioError("amplifier_gain",
                          "asymmetric cloner needs both amplifier_gain and "
                          "transmittance");
    }
    if (s.amplifier_gain && s.copies != 2) {
      throw ScenarioError("copies",
                          "asymmetric cloner produces exactly 2 copies");
    }
  }
  if (s.command == Command::Attack && !s.bob_fidelity) {
    if (!s.eta) {
      throw ScenarioError("eta",
                          "attack needs eta (or bob_fidelity for the "
                          "cheating-Alice variant)");
    }
    if (s.squeeze <= 0.0) {
      throw ScenarioError("squeezing_r",
                          "eavesdropping attack needs squeezing > 0");
    }
  }
  if (s.command == Command::Conditional && !s.eta) {
    throw ScenarioError("eta", "conditional needs eta");
  }
  if (s.command == Command::Scan && *s.scan_command == Command::Attack &&
      s.squeeze <= 0.0 && s.sweep_key != "squeezing_r" &&
      s.sweep_key != "squeezing_db") {
    throw ScenarioError("squeezing_r",
                        "attack scan needs squeezing > 0");
  }
  return s;
}

}  // namespace cvq
