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

#include "cvq/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "cvq/cloning.hpp"
#include "cvq/config.hpp"
#include "cvq/io.hpp"
#include "cvq/metrics.hpp"
#include "cvq/sampling.hpp"
#include "cvq/teleportation.hpp"
#include "cvq/verification.hpp"

namespace cvq {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string default_output(const Scenario& s) {
  if (!s.output.empty()) return s.output;
  if (s.command == Command::Verify) return "verify_artifacts";
  return command_name(s.command) + ".csv";
}

TeleportConfig teleport_config(const Scenario& s) {
  TeleportConfig config;
  config.squeeze = s.squeeze;
  config.gain = s.gain;
  config.alice_arm_efficiency = 1.0 - s.loss_alice;
  config.bob_arm_efficiency = 1.0 - s.loss_bob;
  config.eve_taps_bob_arm = s.eve;
  return config;
}

void print_report_lines(const NoiseReport& report, std::ostream& out) {
  for (int i = 0; i < report.outputs(); ++i) {
    out << "  output " << i << ": gain_x " << format_g9(report.gain_x(i))
        << ", gain_y " << format_g9(report.gain_y(i)) << ", noise_x "
        << format_g9(report.noise_x(i)) << " N0, noise_y "
        << format_g9(report.noise_y(i)) << " N0\n";
  }
}

/// Monte Carlo cross-check printed next to the analytic numbers: noise per
/// quadrature of output 0 re-estimated from `samples` shots.
void print_mc_noise(const GaussianChannel& channel, const NoiseReport& report,
                    std::int64_t samples, std::uint64_t seed,
                    std::ostream& out) {
  const double n0 = vacuum_noise();
  const GaussianState output = apply(channel, coherent(0.0, 0.0));
  const SampleBatch batch =
      sample_state(output, samples, derive_stream(seed, 0), "cli mc");
  const EmpiricalMoments mom = empirical_covariance(batch);
  out << "  monte carlo (" << samples << " shots):\n";
  for (int i = 0; i < report.outputs(); ++i) {
    const double gx2 = report.gain_x(i) * report.gain_x(i);
    const double gy2 = report.gain_y(i) * report.gain_y(i);
    const double est_x = (mom.cov(2 * i, 2 * i) / gx2 - n0) / n0;
    const double est_y =
        (mom.cov(2 * i + 1, 2 * i + 1) / gy2 - n0) / n0;
    const double se_x =
        variance_standard_error(mom.cov(2 * i, 2 * i), samples) / (gx2 * n0);
    const double se_y =
        variance_standard_error(mom.cov(2 * i + 1, 2 * i + 1), samples) /
        (gy2 * n0);
    out << "    output " << i << ": noise_x " << format_g9(est_x) << " +- "
        << format_g9(se_x) << ", noise_y " << format_g9(est_y) << " +- "
        << format_g9(se_y) << '\n';
  }
}

void write_clone_csv(const std::string& path, const NoiseReport& report) {
  CsvTable table({"output_index", "gain_x", "gain_y", "noise_x", "noise_y",
                  "corr_x", "corr_y"});
  const int m = report.outputs();
  for (int i = 0; i < m; ++i) {
    const double corr_x = m > 1 ? report.corr_x.row(i).sum() / (m - 1) : 0.0;
    const double corr_y = m > 1 ? report.corr_y.row(i).sum() / (m - 1) : 0.0;
    table.add_row({CsvTable::num(static_cast<std::int64_t>(i)),
                   CsvTable::num(report.gain_x(i)),
                   CsvTable::num(report.gain_y(i)),
                   CsvTable::num(report.noise_x(i)),
                   CsvTable::num(report.noise_y(i)), CsvTable::num(corr_x),
                   CsvTable::num(corr_y)});
  }
  table.write_file(path);
}

int run_clone(const Scenario& s, std::ostream& out) {
  const ClonerCircuit circuit =
      s.amplifier_gain
          ? amplifier_split_cloner(*s.amplifier_gain, *s.transmittance)
          : cloner_1_to_M(s.copies);
  const NoiseReport report =
      equivalent_noise(circuit, ProbeEnsemble::standard());
  write_clone_csv(default_output(s), report);

  out << circuit.label << '\n';
  print_report_lines(report, out);
  if (report.symmetric()) {
    const double fid =
        fidelity_unity_gain(report.noise_x.mean(), report.noise_y.mean());
    out << "  fidelity (unity gain): " << format_g9(fid) << " ("
        << region_name(classify(fid).region) << ")\n";
  }
  if (circuit.copies == 2) {
    const BoundCheck bound = check_duplication_bound(report);
    out << "  1->2 bound margin: " << format_g9(bound.margin) << " N0^2";
    if (std::abs(bound.margin) <= 1e-9) {
      out << " (saturates 1->" << circuit.copies << " bound)";
    }
    out << '\n';
  }
  if (report.symmetric()) {
    const BoundCheck bound = check_1_to_M_bound(report, circuit.copies);
    out << "  1->" << circuit.copies
        << " bound margin: " << format_g9(bound.margin) << " N0^2";
    if (std::abs(bound.margin) <= 1e-9) {
      out << " (saturates 1->" << circuit.copies << " bound)";
    }
    out << '\n';
    out << "  verdict: "
        << (std::abs(bound.margin) <= 1e-9
                ? "saturates 1->" + std::to_string(circuit.copies) + " bound"
                : "above the 1->" + std::to_string(circuit.copies) +
                      " bound")
        << '\n';
  }
  if (s.samples > 0) {
    print_mc_noise(circuit.channel, report, s.samples, s.seed, out);
  }
  out << "csv: " << default_output(s) << '\n';
  return 0;
}

struct ScanRow {
  double value;
  double bob_noise_x = kNan;
  double bob_noise_y = kNan;
  double bob_fidelity = kNan;
  double eve_noise_x = kNan;
  double eve_noise_y = kNan;
  double eve_fidelity = kNan;
};

ScanRow teleport_row(const Scenario& s, double swept_value) {
  const TeleportConfig config =
      s.command == Command::Attack
          ? [&] {
              TeleportConfig c;
              c.squeeze = s.squeeze;
              c.gain = s.gain;
              c.bob_arm_efficiency = *s.eta;
              c.eve_taps_bob_arm = true;
              return c;
            }()
          : teleport_config(s);
  const TeleportOutcome outcome =
      bk_teleport(coherent(s.input_x, s.input_y), config);
  ScanRow row;
  row.value = swept_value;
  row.bob_noise_x = outcome.bob_report.noise_x(0);
  row.bob_noise_y = outcome.bob_report.noise_y(0);
  row.bob_fidelity = outcome.fidelity_bob;
  if (outcome.eve_report) {
    row.eve_noise_x = outcome.eve_report->noise_x(0);
    row.eve_noise_y = outcome.eve_report->noise_y(0);
    row.eve_fidelity = outcome.fidelity_eve;
  }
  return row;
}

void write_scan_csv(const std::string& path, const std::string& key,
                    const std::vector<ScanRow>& rows) {
  CsvTable table({"index", key, "bob_noise_x", "bob_noise_y", "bob_fidelity",
                  "eve_noise_x", "eve_noise_y", "eve_fidelity", "region"});
  std::int64_t index = 0;
  for (const ScanRow& r : rows) {
    table.add_row({CsvTable::num(index++), CsvTable::num(r.value),
                   CsvTable::num(r.bob_noise_x), CsvTable::num(r.bob_noise_y),
                   CsvTable::num(r.bob_fidelity), CsvTable::num(r.eve_noise_x),
                   CsvTable::num(r.eve_noise_y), CsvTable::num(r.eve_fidelity),
                   region_name(classify(r.bob_fidelity).region)});
  }
  table.write_file(path);
}

int run_teleport(const Scenario& s, std::ostream& out) {
  const TeleportConfig config = teleport_config(s);
  const GaussianState input = coherent(s.input_x, s.input_y);
  const TeleportOutcome outcome = bk_teleport(input, config);

  out << "teleportation: r = " << format_g9(config.squeeze) << ", gain = "
      << format_g9(config.gain) << ", eta_a = "
      << format_g9(config.alice_arm_efficiency) << ", eta_b = "
      << format_g9(config.bob_arm_efficiency) << '\n';
  out << "  bob: noise_x " << format_g9(outcome.bob_report.noise_x(0))
      << " N0, noise_y " << format_g9(outcome.bob_report.noise_y(0))
      << " N0, fidelity " << format_g9(outcome.fidelity_bob) << " ("
      << region_name(classify(outcome.fidelity_bob).region) << ")\n";
  if (outcome.eve_report) {
    out << "  eve: noise_x " << format_g9(outcome.eve_report->noise_x(0))
        << " N0, noise_y " << format_g9(outcome.eve_report->noise_y(0))
        << " N0, fidelity " << format_g9(outcome.fidelity_eve) << '\n';
  }

  std::vector<ScanRow> rows = {teleport_row(s, s.squeeze)};
  write_scan_csv(default_output(s), "squeezing_r", rows);

  if (s.samples > 0) {
    const SampleBatch batch = shotwise_teleport(
        input, config, s.samples, derive_stream(s.seed, 0));
    const EmpiricalMoments mom = empirical_covariance(batch);
    const double n0 = vacuum_noise();
    const double g2 = config.gain * config.gain;
    out << "  monte carlo (" << s.samples
        << " shots): bob noise_x "
        << format_g9((mom.cov(0, 0) / g2 - n0) / n0) << " +- "
        << format_g9(variance_standard_error(mom.cov(0, 0), s.samples) /
                     (g2 * n0))
        << ", mean_x " << format_g9(mom.mean(0)) << '\n';
    if (s.dump_samples) {
      std::ofstream dump(*s.dump_samples, std::ios::binary);
      write_csv(batch, dump);
      out << "  samples: " << *s.dump_samples << '\n';
    }
  }
  out << "csv: " << default_output(s) << '\n';
  return 0;
}

int run_attack_cheat(const Scenario& s, std::ostream& out) {
  const CheatOutcome cheat =
      cheating_alice(coherent(s.input_x, s.input_y), *s.bob_fidelity);
  CsvTable table({"party", "gain", "noise", "fidelity", "region"});
  table.add_row({"alice", CsvTable::num(1.0),
                 CsvTable::num(cheat.alice_report.noise_x(0)),
                 CsvTable::num(cheat.fidelity_alice),
                 region_name(classify(cheat.fidelity_alice).region)});
  table.add_row({"bob", CsvTable::num(1.0),
                 CsvTable::num(cheat.bob_report.noise_x(0)),
                 CsvTable::num(cheat.fidelity_bob),
                 region_name(classify(cheat.fidelity_bob).region)});
  table.write_file(default_output(s));

  out << "cheating alice (duplicate, keep the better copy)\n";
  out << "  bob:   noise " << format_g9(cheat.bob_report.noise_x(0))
      << " N0, fidelity " << format_g9(cheat.fidelity_bob) << " ("
      << region_name(classify(cheat.fidelity_bob).region) << ")\n";
  out << "  alice: noise " << format_g9(cheat.alice_report.noise_x(0))
      << " N0, fidelity " << format_g9(cheat.fidelity_alice) << " ("
      << region_name(classify(cheat.fidelity_alice).region) << ")\n";
  out << "csv: " << default_output(s) << '\n';
  return 0;
}

int run_attack(const Scenario& s, std::ostream& out) {
  if (s.bob_fidelity) return run_attack_cheat(s, out);
  const ScanRow row = teleport_row(s, *s.eta);
  write_scan_csv(default_output(s), "eta", {row});
  out << "eavesdropping attack: r = " << format_g9(s.squeeze)
      << ", eta = " << format_g9(*s.eta) << '\n';
  out << "  bob: noise_x " << format_g9(row.bob_noise_x) << " N0, fidelity "
      << format_g9(row.bob_fidelity) << '\n';
  out << "  eve: noise_x " << format_g9(row.eve_noise_x) << " N0, fidelity "
      << format_g9(row.eve_fidelity) << '\n';
  out << "  advantage: "
      << (row.eve_noise_x < row.bob_noise_x ? "eve" : "bob") << '\n';
  out << "csv: " << default_output(s) << '\n';
  return 0;
}

int run_conditional(const Scenario& s, std::ostream& out) {
  const double v = conditional_squeezing(s.squeeze, *s.eta);
  CsvTable table({"index", "squeezing_r", "eta", "conditional_variance"});
  table.add_row({CsvTable::num(static_cast<std::int64_t>(0)),
                 CsvTable::num(s.squeeze), CsvTable::num(*s.eta),
                 CsvTable::num(v)});
  table.write_file(default_output(s));
  out << "conditional variance V(X_b|X_a) at r = " << format_g9(s.squeeze)
      << ", eta = " << format_g9(*s.eta) << ": " << format_g9(v) << " N0 ("
      << (v < 1.0 ? "conditional squeezing" : "no conditional squeezing")
      << ")\n";
  out << "csv: " << default_output(s) << '\n';
  return 0;
}

int run_scan(const Scenario& s, std::ostream& out) {
  const std::vector<double> values = s.sweep->expand();
  std::vector<ScanRow> rows;
  rows.reserve(values.size());

  // Attack scans over eta reuse the dedicated scan (it also reports the
  // noise-crossing efficiency).
  if (*s.scan_command == Command::Attack && s.sweep_key == "eta") {
    const AttackScan scan = eve_vs_bob_scan(s.squeeze, values);
    for (const AttackPoint& p : scan.points) {
      rows.push_back({p.efficiency, p.bob_noise_x, p.bob_noise_y,
                      p.bob_fidelity, p.eve_noise_x, p.eve_noise_y,
                      p.eve_fidelity});
    }
    out << "attack scan: r = " << format_g9(s.squeeze) << ", "
        << values.size() << " points, bob/eve noise crossing at eta = "
        << format_g9(scan.crossing_efficiency) << '\n';
  } else {
    for (double v : values) {
      KeyValues kv = s.raw;
      kv["command"] = command_name(*s.scan_command);
      kv.erase("scan_command");
      char buffer[40];
      std::snprintf(buffer, sizeof(buffer), "%.17g", v);
      kv[s.sweep_key] = buffer;
      const Scenario point = parse_scenario(kv);
      rows.push_back(teleport_row(point, v));
    }
    out << command_name(*s.scan_command) << " scan over " << s.sweep_key
        << ": " << values.size() << " points\n";
  }
  write_scan_csv(default_output(s), s.sweep_key, rows);
  out << "csv: " << default_output(s) << '\n';
  return 0;
}

int run_verify(const Scenario& s, std::ostream& out) {
  VerifyOptions options;
  options.seed = s.seed;
  options.samples = s.samples > 0 ? s.samples : 1'000'000;
  options.artifact_dir = default_output(s);
  const VerifyReport report = run_acceptance(options);
  print_report(report, out);
  out << "artifacts: " << options.artifact_dir << '\n';
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_scenario(const Scenario& scenario, std::ostream& out,
                 std::ostream& err) {
  set_vacuum_noise(scenario.n0);
  for (const std::string& warning : scenario.warnings) {
    err << "warning: " << warning << '\n';
  }
  switch (scenario.command) {
    case Command::Clone:
      return run_clone(scenario, out);
    case Command::Teleport:
      return run_teleport(scenario, out);
    case Command::Attack:
      return run_attack(scenario, out);
    case Command::Conditional:
      return run_conditional(scenario, out);
    case Command::Scan:
      return run_scan(scenario, out);
    case Command::Verify:
      return run_verify(scenario, out);
  }
  throw std::logic_error("unknown command");
}

}  // namespace cvq
