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

#include "cvq/verification.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cvq/cloning.hpp"
#include "cvq/components.hpp"
#include "cvq/config.hpp"
#include "cvq/io.hpp"
#include "cvq/metrics.hpp"
#include "cvq/sampling.hpp"
#include "cvq/teleportation.hpp"

namespace cvq {

namespace {

namespace fs = std::filesystem;

constexpr double kTight = 1e-9;
constexpr double kMcSigmas = 5.0;
const std::vector<double> kAttackSqueezes = {0.2, 0.5, 1.0};

/// One Monte Carlo agreement gate: estimate vs analytic value within 5
/// standard errors.
struct McGate {
  std::string name;
  double analytic;
  double estimate;
  double std_error;

  double sigmas() const { return std::abs(estimate - analytic) / std_error; }
  bool pass() const { return std::isfinite(sigmas()) && sigmas() <= kMcSigmas; }
};

struct AttackScanCase {
  double squeeze;
  AttackScan scan;
};

/// Everything one artifact pass computes; the pass runs twice (second time
/// into a "recheck" directory) for the byte-determinism criterion.
struct ArtifactData {
  std::optional<NoiseReport> duplicator_report;
  double duplicator_fidelity = 0.0;
  std::vector<NoiseReport> family_reports;  // copies = 1..10
  std::vector<BoundCheck> family_bounds;
  int bound_property_failures = 0;
  bool negative_fixture_fails = false;
  std::vector<AttackScanCase> attack_scans;
  std::map<std::string, double> conditional;  // "r|eta" -> V
  std::optional<TeleportOutcome> teleport_classical;
  std::optional<TeleportOutcome> teleport_threshold;
  std::optional<CheatOutcome> cheat;
  std::vector<McGate> mc;
  std::vector<std::string> files;  // artifact names, relative to the dir
};

std::vector<double> linspace(double start, double stop, int steps) {
  std::vector<double> values(steps);
  for (int i = 0; i < steps; ++i) {
    values[i] = start + (stop - start) * static_cast<double>(i) /
                            static_cast<double>(steps - 1);
  }
  return values;
}

std::string conditional_key(double squeeze, double eta) {
  return format_g9(squeeze) + "|" + format_g9(eta);
}

double report_fidelity(const NoiseReport& report) {
  return fidelity_unity_gain(std::max(report.noise_x.mean(), 0.0),
                             std::max(report.noise_y.mean(), 0.0));
}

// ---------------------------------------------------------------------------
// Monte Carlo estimators
// ---------------------------------------------------------------------------

/// Re-derives a cloner's noise report from sampled output states: gains from
/// the empirical probe means (shots/4 each), noises and correlations from an
/// empirical covariance at the full shot count. Appends one gate per
/// reported quantity.
void mc_noise_gates(const std::string& label, const ClonerCircuit& circuit,
                    const NoiseReport& analytic, std::int64_t shots,
                    std::uint64_t master, std::uint64_t& stream,
                    std::vector<McGate>& gates) {
  const double n0 = vacuum_noise();
  const ProbeEnsemble probes = ProbeEnsemble::standard();
  const int m = circuit.copies;
  const int dim = 2 * m;
  const std::int64_t gain_shots = std::max<std::int64_t>(shots / 4, 2);

  Eigen::MatrixXd design(4, 3);
  Eigen::MatrixXd responses(4, dim);
  for (int p = 0; p < 4; ++p) {
    const Eigen::Vector2d& mu = probes.means[p];
    design.row(p) << mu(0), mu(1), 1.0;
    const GaussianState out =
        apply(circuit.channel, coherent(mu(0), mu(1)));
    const SampleBatch batch = sample_state(
        out, gain_shots, derive_stream(master, stream++), label + " gains");
    responses.row(p) = empirical_covariance(batch).mean.transpose();
  }
  const Eigen::MatrixXd coeffs =
      design.colPivHouseholderQr().solve(responses);
  const Eigen::Matrix3d fit_cov =
      (design.transpose() * design).inverse();

  const Eigen::MatrixXd out_cov =
      circuit.channel.transform() * n0 *
          circuit.channel.transform().transpose() +
      circuit.channel.added_noise();

  Eigen::VectorXd gain_x(m), gain_y(m);
  for (int i = 0; i < m; ++i) {
    gain_x(i) = coeffs(0, 2 * i);
    gain_y(i) = coeffs(1, 2 * i + 1);
    const double se_x = std::sqrt(fit_cov(0, 0) * out_cov(2 * i, 2 * i) /
                                  static_cast<double>(gain_shots));
    const double se_y =
        std::sqrt(fit_cov(1, 1) * out_cov(2 * i + 1, 2 * i + 1) /
                  static_cast<double>(gain_shots));
    gates.push_back({label + " gain_x[" + std::to_string(i) + "]",
                     analytic.gain_x(i), gain_x(i), se_x});
    gates.push_back({label + " gain_y[" + std::to_string(i) + "]",
                     analytic.gain_y(i), gain_y(i), se_y});
  }

  const GaussianState out0 = apply(circuit.channel, coherent(0.0, 0.0));
  const SampleBatch batch =
      sample_state(out0, shots, derive_stream(master, stream++),
                   label + " covariance");
  const EmpiricalMoments mom = empirical_covariance(batch);
  for (int i = 0; i < m; ++i) {
    const double gx2 = gain_x(i) * gain_x(i);
    const double gy2 = gain_y(i) * gain_y(i);
    gates.push_back(
        {label + " noise_x[" + std::to_string(i) + "]", analytic.noise_x(i),
         (mom.cov(2 * i, 2 * i) / gx2 - n0) / n0,
         variance_standard_error(mom.cov(2 * i, 2 * i), shots) / (gx2 * n0)});
    gates.push_back(
        {label + " noise_y[" + std::to_string(i) + "]", analytic.noise_y(i),
         (mom.cov(2 * i + 1, 2 * i + 1) / gy2 - n0) / n0,
         variance_standard_error(mom.cov(2 * i + 1, 2 * i + 1), shots) /
             (gy2 * n0)});
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const std::string pair =
          "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      gates.push_back(
          {label + " corr_x" + pair, analytic.corr_x(i, j),
           (mom.cov(2 * i, 2 * j) - gain_x(i) * gain_x(j) * n0) / n0,
           covariance_standard_error(mom.cov(2 * i, 2 * i),
                                     mom.cov(2 * j, 2 * j),
                                     mom.cov(2 * i, 2 * j), shots) /
               n0});
      gates.push_back(
          {label + " corr_y" + pair, analytic.corr_y(i, j),
           (mom.cov(2 * i + 1, 2 * j + 1) - gain_y(i) * gain_y(j) * n0) / n0,
           covariance_standard_error(mom.cov(2 * i + 1, 2 * i + 1),
                                     mom.cov(2 * j + 1, 2 * j + 1),
                                     mom.cov(2 * i + 1, 2 * j + 1), shots) /
               n0});
    }
  }
}

/// Monte Carlo fidelity between a coherent input and a sampled output state
/// through the phase-space overlap: F = E[4*pi*N0*W_in(sample)].
McGate mc_fidelity_gate(const std::string& name, const GaussianState& input,
                        const GaussianState& output, double analytic,
                        std::int64_t shots, std::uint64_t seed) {
  const double n0 = vacuum_noise();
  const SampleBatch batch = sample_state(output, shots, seed, name);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double dx = batch.values(s, 0) - input.mean()(0);
    const double dy = batch.values(s, 1) - input.mean()(1);
    const double f = 2.0 * std::exp(-(dx * dx + dy * dy) / (2.0 * n0));
    sum += f;
    sum_sq += f * f;
  }
  const double n = static_cast<double>(shots);
  const double est = sum / n;
  const double se = std::sqrt((sum_sq / n - est * est) / n);
  return {name, analytic, est, se};
}

/// Compares the shotwise protocol statistics (explicit homodyne outcomes,
/// explicit displacements) to the analytic unconditional output.
void mc_teleport_gates(const std::string& label, const GaussianState& input,
                       const TeleportConfig& config,
                       const TeleportOutcome& analytic, std::int64_t shots,
                       std::uint64_t seed, std::vector<McGate>& gates) {
  const SampleBatch batch = shotwise_teleport(input, config, shots, seed);
  const EmpiricalMoments mom = empirical_covariance(batch);
  auto party = [&](const std::string& who, int col,
                   const GaussianState& state) {
    gates.push_back({label + " " + who + " var_x", state.cov()(0, 0),
                     mom.cov(col, col),
                     variance_standard_error(mom.cov(col, col), shots)});
    gates.push_back(
        {label + " " + who + " var_y", state.cov()(1, 1),
         mom.cov(col + 1, col + 1),
         variance_standard_error(mom.cov(col + 1, col + 1), shots)});
    gates.push_back(
        {label + " " + who + " cov_xy", state.cov()(0, 1),
         mom.cov(col, col + 1),
         covariance_standard_error(mom.cov(col, col),
                                   mom.cov(col + 1, col + 1),
                                   mom.cov(col, col + 1), shots)});
    gates.push_back({label + " " + who + " mean_x", state.mean()(0),
                     mom.mean(col),
                     std::sqrt(mom.cov(col, col) / static_cast<double>(shots))});
    gates.push_back(
        {label + " " + who + " mean_y", state.mean()(1), mom.mean(col + 1),
         std::sqrt(mom.cov(col + 1, col + 1) / static_cast<double>(shots))});
  };
  party("bob", 0, analytic.bob_state);
  if (analytic.eve_state) {
    party("eve", 2, *analytic.eve_state);
  }
}

/// Conditional variance re-derived from samples as the residual variance of
/// the optimal linear predictor of X_b from X_a.
McGate mc_conditional_gate(double squeeze, double eta, double analytic,
                           std::int64_t shots, std::uint64_t seed) {
  GaussianState state = epr_source(squeeze);
  state = apply(loss(eta), state, {0});
  state = apply(loss(eta), state, {1});
  const SampleBatch batch = sample_state(state, shots, seed, "conditional");
  const EmpiricalMoments mom = empirical_covariance(batch);
  const double v_est =
      (mom.cov(2, 2) - mom.cov(0, 2) * mom.cov(0, 2) / mom.cov(0, 0)) /
      vacuum_noise();
  return {"conditional V(r=" + format_g9(squeeze) + ",eta=" + format_g9(eta) +
              ")",
          analytic, v_est,
          variance_standard_error(v_est, shots)};
}

// ---------------------------------------------------------------------------
// Artifact writers
// ---------------------------------------------------------------------------

void write_clone_csv(const fs::path& path, const NoiseReport& report) {
  CsvTable table({"output_index", "gain_x", "gain_y", "noise_x", "noise_y",
                  "corr_x", "corr_y"});
  const int m = report.outputs();
  for (int i = 0; i < m; ++i) {
    double corr_x = 0.0;
    double corr_y = 0.0;
    if (m > 1) {
      corr_x = (report.corr_x.row(i).sum()) / (m - 1);
      corr_y = (report.corr_y.row(i).sum()) / (m - 1);
    }
    table.add_row({CsvTable::num(static_cast<std::int64_t>(i)),
                   CsvTable::num(report.gain_x(i)),
                   CsvTable::num(report.gain_y(i)),
                   CsvTable::num(report.noise_x(i)),
                   CsvTable::num(report.noise_y(i)), CsvTable::num(corr_x),
                   CsvTable::num(corr_y)});
  }
  table.write_file(path.string());
}

void write_attack_scan_csv(const fs::path& path, const AttackScan& scan) {
  CsvTable table({"index", "eta", "bob_noise_x", "bob_noise_y",
                  "bob_fidelity", "eve_noise_x", "eve_noise_y",
                  "eve_fidelity", "region"});
  std::int64_t index = 0;
  for (const AttackPoint& p : scan.points) {
    table.add_row({CsvTable::num(index++), CsvTable::num(p.efficiency),
                   CsvTable::num(p.bob_noise_x), CsvTable::num(p.bob_noise_y),
                   CsvTable::num(p.bob_fidelity), CsvTable::num(p.eve_noise_x),
                   CsvTable::num(p.eve_noise_y), CsvTable::num(p.eve_fidelity),
                   region_name(classify(p.bob_fidelity).region)});
  }
  table.write_file(path.string());
}

// ---------------------------------------------------------------------------
// The artifact pass
// ---------------------------------------------------------------------------

ArtifactData run_artifacts(const VerifyOptions& options, const fs::path& dir) {
  fs::create_directories(dir);
  ArtifactData data;
  const std::int64_t shots = options.samples;
  const std::uint64_t master = options.seed;
  std::uint64_t stream = 0;
  const double threshold_squeeze = std::log(2.0) / 2.0;

  auto record = [&](const std::string& name) {
    data.files.push_back(name);
    return dir / name;
  };

  // Duplicator (criterion 1).
  const ClonerCircuit dup = duplicator();
  data.duplicator_report = equivalent_noise(dup, ProbeEnsemble::standard());
  data.duplicator_fidelity = report_fidelity(*data.duplicator_report);
  write_clone_csv(record("clone_duplicator.csv"), *data.duplicator_report);
  mc_noise_gates("duplicator", dup, *data.duplicator_report, shots, master,
                 stream, data.mc);
  {
    const GaussianState in = coherent(1.0, -2.0);
    const GaussianState copy =
        partial_state(apply(dup.channel, in, {0}), {0});
    data.mc.push_back(mc_fidelity_gate(
        "duplicator copy fidelity", in, copy, gaussian_fidelity(in, copy),
        shots, derive_stream(master, stream++)));
  }

  // 1->M family (criterion 2), with Monte Carlo re-derivation for every M.
  {
    CsvTable family({"copies", "noise_x", "noise_y", "fidelity",
                     "limit_noise", "limit_fidelity", "bound_margin"});
    for (int m = 1; m <= 10; ++m) {
      const ClonerCircuit circuit = cloner_1_to_M(m);
      NoiseReport report =
          equivalent_noise(circuit, ProbeEnsemble::standard());
      const BoundCheck bound = check_1_to_M_bound(report, m);
      const CloningLimit limit = cloning_limit(m);
      family.add_row({CsvTable::num(static_cast<std::int64_t>(m)),
                      CsvTable::num(report.noise_x.mean()),
                      CsvTable::num(report.noise_y.mean()),
                      CsvTable::num(report_fidelity(report)),
                      CsvTable::num(limit.noise),
                      CsvTable::num(limit.fidelity),
                      CsvTable::num(bound.margin)});
      mc_noise_gates("cloner M=" + std::to_string(m), circuit, report, shots,
                     master, stream, data.mc);
      data.family_reports.push_back(std::move(report));
      data.family_bounds.push_back(bound);
    }
    family.write_file(record("cloner_family.csv").string());
  }

  // Randomized duplication-bound property (criterion 3), with Monte Carlo
  // spot checks on three of the instances.
  {
    SplitMix64 rng(derive_stream(master, stream++));
    for (int i = 0; i < 1000; ++i) {
      const double gain = 1.0 + 9.0 * rng.next_unit();
      const double t = 0.999998 * rng.next_unit() + 1e-6;
      const ClonerCircuit circuit = amplifier_split_cloner(gain, t);
      const NoiseReport report =
          equivalent_noise(circuit, ProbeEnsemble::standard());
      if (!check_duplication_bound(report).pass) {
        ++data.bound_property_failures;
      }
      if (i < 3) {
        mc_noise_gates("amp-split " + std::to_string(i), circuit, report,
                       shots / 4, master, stream, data.mc);
      }
    }
    data.negative_fixture_fails =
        !check_duplication_bound(NoiseReport::symmetric_unity(2, 0.0)).pass;
  }

  // Teleportation reference points (criteria 4 and 5).
  {
    const GaussianState in = coherent(1.5, -0.7);
    CsvTable points({"index", "squeezing_r", "bob_noise_x", "bob_noise_y",
                     "bob_fidelity", "region"});
    std::int64_t index = 0;
    for (double r : {0.0, threshold_squeeze, 5.0}) {
      TeleportConfig config;
      config.squeeze = r;
      TeleportOutcome out = bk_teleport(in, config);
      points.add_row({CsvTable::num(index++), CsvTable::num(r),
                      CsvTable::num(out.bob_report.noise_x(0)),
                      CsvTable::num(out.bob_report.noise_y(0)),
                      CsvTable::num(out.fidelity_bob),
                      region_name(classify(out.fidelity_bob).region)});
      if (r == 0.0 || r == threshold_squeeze) {
        const std::string label =
            "teleport r=" + format_g9(r);
        mc_teleport_gates(label, in, config, out, shots,
                          derive_stream(master, stream++), data.mc);
        data.mc.push_back(mc_fidelity_gate(
            label + " fidelity", in, out.bob_state, out.fidelity_bob, shots,
            derive_stream(master, stream++)));
      }
      if (r == 0.0) data.teleport_classical = out;
      if (r == threshold_squeeze) data.teleport_threshold = std::move(out);
    }
    points.write_file(record("teleport_points.csv").string());
  }

  // Cheating Alice (criterion 6) with Monte Carlo overlap checks.
  {
    const GaussianState in = coherent(0.9, 0.4);
    data.cheat = cheating_alice(in, 0.58);
    auto copy_state = [&](double noise) {
      return GaussianState(
          in.mean(), (1.0 + noise) * vacuum_noise() *
                         Eigen::Matrix2d::Identity());
    };
    data.mc.push_back(mc_fidelity_gate(
        "cheat bob fidelity", in, copy_state(data.cheat->bob_report.noise_x(0)),
        data.cheat->fidelity_bob, shots, derive_stream(master, stream++)));
    data.mc.push_back(mc_fidelity_gate(
        "cheat alice fidelity", in,
        copy_state(data.cheat->alice_report.noise_x(0)),
        data.cheat->fidelity_alice, shots, derive_stream(master, stream++)));
  }

  // Eve vs Bob scans (criterion 7), plus shotwise cross-checks.
  {
    CsvTable crossings({"squeezing_r", "crossing_efficiency"});
    for (double r : kAttackSqueezes) {
      AttackScanCase scan_case{r, eve_vs_bob_scan(r, linspace(0.0, 1.0, 101))};
      write_attack_scan_csv(record("attack_scan_r" + format_g9(r) + ".csv"),
                            scan_case.scan);
      crossings.add_row(
          {CsvTable::num(r), CsvTable::num(scan_case.scan.crossing_efficiency)});
      for (double eta : {0.25, 0.5}) {
        TeleportConfig config;
        config.squeeze = r;
        config.bob_arm_efficiency = eta;
        config.eve_taps_bob_arm = true;
        const GaussianState in = coherent(0.0, 0.0);
        const TeleportOutcome out = bk_teleport(in, config);
        mc_teleport_gates(
            "attack r=" + format_g9(r) + " eta=" + format_g9(eta), in, config,
            out, shots, derive_stream(master, stream++), data.mc);
      }
      data.attack_scans.push_back(std::move(scan_case));
    }
    crossings.write_file(record("attack_crossings.csv").string());
  }

  // Conditional squeezing (criterion 8) and its Monte Carlo counterpart.
  {
    CsvTable sweep({"index", "eta", "conditional_variance"});
    std::int64_t index = 0;
    for (double eta : linspace(0.0, 1.0, 41)) {
      sweep.add_row({CsvTable::num(index++), CsvTable::num(eta),
                     CsvTable::num(conditional_squeezing(1.0, eta))});
    }
    sweep.write_file(record("conditional_sweep.csv").string());

    const std::vector<std::pair<double, double>> cases = {
        {0.5, 0.5}, {1.0, 0.5}, {2.0, 0.5}, {1.0, 0.6}, {1.0, 0.4}};
    for (const auto& [r, eta] : cases) {
      const double v = conditional_squeezing(r, eta);
      data.conditional[conditional_key(r, eta)] = v;
      data.mc.push_back(mc_conditional_gate(r, eta, v, shots,
                                            derive_stream(master, stream++)));
    }
  }

  // Monte Carlo agreement table (criterion 10).
  {
    CsvTable table(
        {"name", "analytic", "estimate", "std_error", "sigmas", "pass"});
    for (const McGate& gate : data.mc) {
      table.add_row({gate.name, CsvTable::num(gate.analytic),
                     CsvTable::num(gate.estimate),
                     CsvTable::num(gate.std_error),
                     CsvTable::num(gate.sigmas()),
                     gate.pass() ? "yes" : "no"});
    }
    table.write_file(record("mc_agreement.csv").string());
  }

  return data;
}

// ---------------------------------------------------------------------------
// Criteria evaluation
// ---------------------------------------------------------------------------

std::string read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CriterionResult evaluate_mc(const ArtifactData& data) {
  double worst = 0.0;
  std::string worst_name = "-";
  int failures = 0;
  for (const McGate& gate : data.mc) {
    if (!gate.pass()) ++failures;
    if (gate.sigmas() > worst) {
      worst = gate.sigmas();
      worst_name = gate.name;
    }
  }
  std::ostringstream detail;
  detail << data.mc.size() << " gates at 5 SE; worst |z| = "
         << format_g9(worst) << " (" << worst_name << ")";
  if (failures > 0) detail << "; " << failures << " FAILED";
  return {10, "oracle equivalence (Monte Carlo, 5 SE)", failures == 0,
          detail.str()};
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const CriterionResult& c : criteria) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyReport run_acceptance(const VerifyOptions& options) {
  VerifyReport report;
  const fs::path dir(options.artifact_dir);
  const ArtifactData data = run_artifacts(options, dir);
  const double threshold = 2.0 / 3.0;

  {  // 1. Duplicator limit.
    const NoiseReport& rep = *data.duplicator_report;
    bool pass = true;
    for (int i = 0; i < 2; ++i) {
      pass = pass && std::abs(rep.noise_x(i) - 1.0) <= kTight &&
             std::abs(rep.noise_y(i) - 1.0) <= kTight;
    }
    pass = pass && std::abs(data.duplicator_fidelity - threshold) <= kTight;
    report.criteria.push_back(
        {1, "duplicator noise N0 and fidelity 2/3",
         pass,
         "noise_x=" + format_g9(rep.noise_x(0)) +
             ", fidelity=" + format_g9(data.duplicator_fidelity)});
  }

  {  // 2. 1->M saturation.
    bool pass = true;
    double worst = 0.0;
    for (int m = 1; m <= 10; ++m) {
      const NoiseReport& rep = data.family_reports[m - 1];
      const CloningLimit limit = cloning_limit(m);
      const double fidelity = report_fidelity(rep);
      for (int i = 0; i < m; ++i) {
        worst = std::max({worst, std::abs(rep.noise_x(i) - limit.noise),
                          std::abs(rep.noise_y(i) - limit.noise)});
      }
      worst = std::max(worst, std::abs(fidelity - limit.fidelity));
      worst = std::max(worst, std::abs(data.family_bounds[m - 1].margin));
      pass = pass && worst <= kTight;
    }
    report.criteria.push_back(
        {2, "1->M cloners saturate 2(M-1)/M noise and M/(2M-1) fidelity",
         pass, "M=1..10, worst deviation " + format_g9(worst)});
  }

  {  // 3. Randomized duplication bound property.
    const bool pass =
        data.bound_property_failures == 0 && data.negative_fixture_fails;
    report.criteria.push_back(
        {3, "random amplifier-split cloners obey the two-copy bound", pass,
         std::to_string(1000 - data.bound_property_failures) +
             "/1000 passed; zero-noise fixture rejected: " +
             (data.negative_fixture_fails ? "yes" : "no")});
  }

  {  // 4. Classical limit at r = 0.
    const TeleportOutcome& out = *data.teleport_classical;
    const bool pass =
        std::abs(out.bob_report.noise_x(0) - 2.0) <= kTight &&
        std::abs(out.bob_report.noise_y(0) - 2.0) <= kTight &&
        std::abs(out.fidelity_bob - 0.5) <= kTight;
    report.criteria.push_back(
        {4, "r=0 teleportation gives noise 2N0 and fidelity 1/2", pass,
         "noise_x=" + format_g9(out.bob_report.noise_x(0)) +
             ", fidelity=" + format_g9(out.fidelity_bob)});
  }

  {  // 5. No-cloning threshold at r = ln(2)/2.
    const TeleportOutcome& out = *data.teleport_threshold;
    const bool boundary =
        classify(threshold).region == Region::QuantumFax &&
        classify(threshold + 1e-6).region == Region::Teleportation;
    const bool pass =
        std::abs(out.fidelity_bob - threshold) <= kTight && boundary;
    report.criteria.push_back(
        {5, "r=ln(2)/2 teleportation reaches fidelity 2/3; boundary strict",
         pass, "fidelity=" + format_g9(out.fidelity_bob)});
  }

  {  // 6. Cheating-Alice numbers.
    const double nb = noise_from_fidelity(0.58);
    const CheatOutcome& cheat = *data.cheat;
    const bool pass = std::abs(nb - 1.448) <= 1e-3 &&
                      std::abs(cheat.fidelity_alice - 0.743) <= 1e-3;
    report.criteria.push_back(
        {6, "cheating Alice: N_b = 1.448 N0, kept-copy fidelity 0.743", pass,
         "N_b=" + format_g9(nb) +
             ", F_a=" + format_g9(cheat.fidelity_alice)});
  }

  {  // 7. Eve crossing at eta = 1/2.
    bool pass = true;
    std::ostringstream detail;
    for (const AttackScanCase& c : data.attack_scans) {
      pass = pass && std::abs(c.scan.crossing_efficiency - 0.5) <= 1e-6;
      const AttackPoint& quarter = c.scan.points[25];  // eta = 0.25
      pass = pass && quarter.eve_fidelity > quarter.bob_fidelity;
      detail << "r=" << format_g9(c.squeeze) << ": crossing "
             << format_g9(c.scan.crossing_efficiency) << "; ";
    }
    report.criteria.push_back(
        {7, "Eve/Bob noise crossing at eta = 1/2; Eve ahead at eta = 1/4",
         pass, detail.str()});
  }

  {  // 8. Conditional squeezing boundary.
    bool pass = true;
    for (double r : {0.5, 1.0, 2.0}) {
      pass = pass &&
             std::abs(data.conditional.at(conditional_key(r, 0.5)) - 1.0) <=
                 kTight;
    }
    const double below = data.conditional.at(conditional_key(1.0, 0.6));
    const double above = data.conditional.at(conditional_key(1.0, 0.4));
    pass = pass && below < 1.0 && above > 1.0;
    report.criteria.push_back(
        {8, "conditional variance: N0 at eta=1/2, squeezed only above", pass,
         "V(eta=0.5)=" +
             format_g9(data.conditional.at(conditional_key(1.0, 0.5))) +
             ", V(0.6)=" + format_g9(below) + ", V(0.4)=" + format_g9(above)});
  }

  {  // 9. Region classification.
    const bool pass = classify(0.58).region == Region::QuantumFax &&
                      classify(0.74).region == Region::Teleportation &&
                      classify(0.5).region == Region::Classical;
    report.criteria.push_back(
        {9, "classify: 0.58 quantum fax, 0.74 teleportation, 0.5 classical",
         pass,
         "0.58->" + region_name(classify(0.58).region) + ", 0.74->" +
             region_name(classify(0.74).region) + ", 0.5->" +
             region_name(classify(0.5).region)});
  }

  report.criteria.push_back(evaluate_mc(data));

  {  // 11. Artifact determinism.
    const fs::path recheck_dir = dir / "recheck";
    const ArtifactData again = run_artifacts(options, recheck_dir);
    bool pass = again.files == data.files;
    std::string mismatch;
    for (const std::string& name : data.files) {
      if (read_file_bytes(dir / name) !=
          read_file_bytes(recheck_dir / name)) {
        pass = false;
        mismatch += (mismatch.empty() ? "" : ", ") + name;
      }
    }
    report.criteria.push_back(
        {11, "re-running the suite reproduces byte-identical artifacts", pass,
         pass ? std::to_string(data.files.size()) + " files identical"
              : "mismatch: " + mismatch});
  }

  // Summary table (written once, after evaluation; not part of the
  // determinism comparison set).
  {
    CsvTable summary({"index", "name", "pass", "detail"});
    for (const CriterionResult& c : report.criteria) {
      summary.add_row({CsvTable::num(static_cast<std::int64_t>(c.index)),
                       c.name, c.pass ? "yes" : "no", c.detail});
    }
    summary.write_file((dir / "criteria_summary.csv").string());
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& os) {
  for (const CriterionResult& c : report.criteria) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.index << ": " << c.name
       << " - " << c.detail << '\n';
  }
  os << (report.all_passed() ? "verification passed"
                             : "VERIFICATION FAILED")
     << " (" << report.criteria.size() << " criteria)\n";
}

}  // namespace cvq
