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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cvq/runner.hpp"
#include "cvq/scenario.hpp"

using namespace cvq;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("squeezing in dB converts to r") {
  const Scenario s = parse_scenario(
      {{"command", "teleport"}, {"squeezing_db", "3.0103"}, {"gain", "1"},
       {"loss_bob", "0"}});
  // 3.0103 dB of squeezing halves exp(-2r): r = ln(2)/2.
  CHECK(std::abs(s.squeeze - std::log(2.0) / 2.0) < 5e-5);
  CHECK(s.gain == 1.0);
  CHECK(s.loss_bob == 0.0);
}

TEST_CASE("dB wins over r with a warning") {
  const Scenario s = parse_scenario({{"command", "teleport"},
                                     {"squeezing_db", "10"},
                                     {"squeezing_r", "0.1"}});
  CHECK(std::abs(s.squeeze - 10.0 * std::log(10.0) / 20.0) < 1e-12);
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("squeezing_db") != std::string::npos);
}

TEST_CASE("missing command") {
  try {
    parse_scenario({});
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.key() == "command");
    CHECK(std::string(e.what()).find("missing command") !=
          std::string::npos);
  }
}

TEST_CASE("unknown keys and type mismatches name the key") {
  try {
    parse_scenario({{"command", "clone"}, {"copiez", "2"}});
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.key() == "copiez");
  }
  try {
    parse_scenario({{"command", "clone"}, {"copies", "two"}});
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.key() == "copies");
  }
  CHECK_THROWS_AS(parse_scenario({{"command", "warp"}}), ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario({{"command", "teleport"}, {"gain", "-1"}}),
      ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario({{"command", "attack"}, {"bob_fidelity", "0.7"}}),
      ScenarioError);
}

TEST_CASE("scan expands a range") {
  const Scenario s = parse_scenario({{"command", "scan"},
                                     {"scan_command", "attack"},
                                     {"eta", "0:1:101"},
                                     {"squeezing_db", "3"}});
  REQUIRE(s.sweep.has_value());
  CHECK(s.sweep_key == "eta");
  const std::vector<double> values = s.sweep->expand();
  REQUIRE(values.size() == 101);
  CHECK(values.front() == 0.0);
  CHECK(values.back() == 1.0);
  CHECK(std::abs(values[25] - 0.25) < 1e-15);

  CHECK(SweepRange{2.0, 9.0, 1}.expand() == std::vector<double>{2.0});
}

TEST_CASE("ranges are rejected outside scan") {
  CHECK_THROWS_AS(
      parse_scenario({{"command", "teleport"}, {"gain", "1:2:5"}}),
      ScenarioError);
  CHECK_THROWS_AS(parse_scenario({{"command", "scan"},
                                  {"scan_command", "attack"},
                                  {"squeezing_db", "3"}}),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario({{"command", "scan"},
                                  {"scan_command", "attack"},
                                  {"eta", "0:1:11"},
                                  {"gain", "1:2:5"},
                                  {"squeezing_db", "3"}}),
                  ScenarioError);
}

TEST_CASE("per-command requirements") {
  CHECK_THROWS_AS(parse_scenario({{"command", "attack"}}), ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario({{"command", "attack"}, {"eta", "0.5"}}),
      ScenarioError);  // needs squeezing > 0
  CHECK_THROWS_AS(parse_scenario({{"command", "conditional"},
                                  {"squeezing_r", "1"}}),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario({{"command", "clone"},
                                  {"amplifier_gain", "2"}}),
                  ScenarioError);
  CHECK_NOTHROW(parse_scenario({{"command", "clone"},
                                {"amplifier_gain", "2"},
                                {"transmittance", "0.3"}}));
  CHECK_NOTHROW(parse_scenario({{"command", "verify"}}));
}

TEST_CASE("scenario files parse key = value lines") {
  const std::string path = "scenario_test.cvq";
  {
    std::ofstream out(path);
    out << "# teleportation run\n"
        << "command = teleport\n"
        << "squeezing_r = 0.75   # natural units\n"
        << "\n"
        << "gain = 1.0\n";
  }
  const KeyValues kv = read_scenario_file(path);
  CHECK(kv.at("command") == "teleport");
  CHECK(kv.at("squeezing_r") == "0.75");
  const Scenario s = parse_scenario(kv);
  CHECK(s.squeeze == 0.75);
  std::remove(path.c_str());

  CHECK_THROWS_AS(read_scenario_file("missing_file.cvq"), ScenarioError);
}

TEST_CASE("runner: clone summary and CSV") {
  Scenario s = parse_scenario(
      {{"command", "clone"}, {"copies", "2"}, {"output", "clone_test.csv"}});
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_scenario(s, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("duplicator") != std::string::npos);
  CHECK(out.str().find("0.666666667") != std::string::npos);
  CHECK(out.str().find("saturates 1->2 bound") != std::string::npos);

  const std::string csv = read_file("clone_test.csv");
  CHECK(csv.find("output_index,gain_x,gain_y,noise_x,noise_y,corr_x,"
                 "corr_y") == 0);
  CHECK(csv.find("\n0,1,1,1,1,") != std::string::npos);

  // Re-running reproduces the bytes.
  std::ostringstream out2;
  run_scenario(s, out2, err);
  CHECK(read_file("clone_test.csv") == csv);
  CHECK(out2.str() == out.str());
  std::remove("clone_test.csv");
}

TEST_CASE("runner: attack point matches the crossing claim") {
  Scenario s = parse_scenario({{"command", "attack"},
                               {"squeezing_db", "10"},
                               {"eta", "0.5"},
                               {"output", "attack_test.csv"}});
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_scenario(s, out, err) == 0);
  const std::string csv = read_file("attack_test.csv");
  CHECK(csv.find("index,eta,") == 0);
  // At eta = 1/2 the bob and eve noise columns agree to 1e-6.
  std::istringstream lines(csv);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::vector<std::string> cells;
  std::istringstream cs(row);
  std::string cell;
  while (std::getline(cs, cell, ',')) cells.push_back(cell);
  REQUIRE(cells.size() == 9);
  CHECK(std::abs(std::stod(cells[2]) - std::stod(cells[5])) < 1e-6);
  std::remove("attack_test.csv");
}

TEST_CASE("runner: conditional and scan") {
  Scenario cond = parse_scenario({{"command", "conditional"},
                                  {"squeezing_r", "1"},
                                  {"eta", "0.6"},
                                  {"output", "cond_test.csv"}});
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_scenario(cond, out, err) == 0);
  CHECK(out.str().find("conditional squeezing") != std::string::npos);
  std::remove("cond_test.csv");

  Scenario scan = parse_scenario({{"command", "scan"},
                                  {"scan_command", "attack"},
                                  {"eta", "0:1:11"},
                                  {"squeezing_r", "0.5"},
                                  {"output", "scan_test.csv"}});
  std::ostringstream out2;
  CHECK(run_scenario(scan, out2, err) == 0);
  CHECK(out2.str().find("crossing at eta") != std::string::npos);
  const std::string csv = read_file("scan_test.csv");
  CHECK(csv.find("index,eta,bob_noise_x,bob_noise_y,bob_fidelity,"
                 "eve_noise_x,eve_noise_y,eve_fidelity,region") == 0);
  // Header plus 11 rows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
  std::remove("scan_test.csv");
}
