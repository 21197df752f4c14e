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

#include "cvq/teleportation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cvq/components.hpp"
#include "cvq/config.hpp"
#include "cvq/metrics.hpp"

namespace cvq {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool is_coherent(const GaussianState& state) {
  const double n0 = vacuum_noise();
  return state.n_modes() == 1 &&
         (state.cov() - n0 * Eigen::Matrix2d::Identity())
                 .cwiseAbs()
                 .maxCoeff() <= 1e-9 * n0;
}

/// Readout rows for a receiver holding `mode` who displaces by
/// feedforward * (x_outcome of mode 0, y_outcome of mode 1).
Eigen::MatrixXd receiver_rows(const ProtocolLayout& layout, int mode) {
  const int dim = 2 * layout.pre_measurement.n_modes();
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(2, dim);
  rows(0, 2 * mode) = 1.0;
  rows(0, 0) = layout.feedforward;  // X of the X-measured port
  rows(1, 2 * mode + 1) = 1.0;
  rows(1, 3) = layout.feedforward;  // Y of the Y-measured port
  return rows;
}

GaussianState readout_state(const ProtocolLayout& layout, int mode) {
  const Eigen::MatrixXd rows = receiver_rows(layout, mode);
  Eigen::VectorXd mean = rows * layout.pre_measurement.mean();
  Eigen::MatrixXd cov =
      rows * layout.pre_measurement.cov() * rows.transpose();
  return GaussianState(std::move(mean), std::move(cov));
}

NoiseReport single_output_report(const GaussianChannel& channel,
                                 const std::string& label) {
  return equivalent_noise(make_cloner(1, channel, label),
                          ProbeEnsemble::standard());
}

}  // namespace

void TeleportConfig::validate() const {
  if (!std::isfinite(squeeze) || squeeze < 0.0) {
    throw std::invalid_argument("squeeze parameter must be >= 0");
  }
  if (!std::isfinite(gain) || gain <= 0.0) {
    throw std::invalid_argument("classical gain must be > 0");
  }
  for (double eta : {alice_arm_efficiency, bob_arm_efficiency}) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
      throw std::invalid_argument("arm efficiency must be in [0, 1]");
    }
  }
}

ProtocolLayout build_protocol(const GaussianState& input,
                              const TeleportConfig& config) {
  config.validate();
  if (input.n_modes() != 1) {
    throw std::invalid_argument("teleportation input must be a single mode");
  }
  // Modes: 0 = input, 1 = EPR arm A (Alice), 2 = EPR arm B (Bob).
  GaussianState state = tensor(input, epr_source(config.squeeze));
  state = apply(loss(config.alice_arm_efficiency), state, {1});
  if (config.eve_taps_bob_arm) {
    // Tap with the fresh vacuum on the beamsplitter's first port so Bob
    // keeps sqrt(eta_b) of his arm while Eve's mode 3 carries the
    // reflected sqrt(1 - eta_b) share with a positive sign.
    state = tensor(state, vacuum(1));
    state = apply(beamsplitter(config.bob_arm_efficiency), state, {3, 2});
  } else {
    state = apply(loss(config.bob_arm_efficiency), state, {2});
  }
  // Alice mixes arm A with the input; mode 0 becomes the X-measured port
  // (input - A)/sqrt(2), mode 1 the Y-measured port (A + input)/sqrt(2).
  state = apply(beamsplitter(0.5), state, {1, 0});
  return ProtocolLayout{std::move(state), config.gain * std::sqrt(2.0),
                        config.eve_taps_bob_arm};
}

GaussianChannel protocol_channel(const TeleportConfig& config) {
  config.validate();
  const double n0 = vacuum_noise();
  const int out_modes = config.eve_taps_bob_arm ? 2 : 1;
  const int dout = 2 * out_modes;

  auto run = [&](const GaussianState& input) -> std::pair<Eigen::VectorXd,
                                                          Eigen::MatrixXd> {
    ProtocolLayout layout = build_protocol(input, config);
    Eigen::MatrixXd rows(dout, 2 * layout.pre_measurement.n_modes());
    rows.topRows(2) = receiver_rows(layout, 2);
    if (config.eve_taps_bob_arm) {
      rows.bottomRows(2) = receiver_rows(layout, 3);
    }
    return {rows * layout.pre_measurement.mean(),
            rows * layout.pre_measurement.cov() * rows.transpose()};
  };

  // The protocol is exactly linear in the input, so two basis runs fix the
  // transform and a vacuum run fixes the added noise.
  Eigen::MatrixXd transform(dout, 2);
  transform.col(0) = run(coherent(1.0, 0.0)).first;
  transform.col(1) = run(coherent(0.0, 1.0)).first;
  const Eigen::MatrixXd vac_cov = run(vacuum(1)).second;
  Eigen::MatrixXd noise = vac_cov - n0 * transform * transform.transpose();
  return GaussianChannel(1, out_modes, std::move(transform),
                         std::move(noise));
}

TeleportOutcome bk_teleport(const GaussianState& input,
                            const TeleportConfig& config) {
  ProtocolLayout layout = build_protocol(input, config);
  GaussianState bob_state = readout_state(layout, 2);

  const GaussianChannel channel = protocol_channel(config);
  NoiseReport bob_report =
      config.eve_taps_bob_arm
          ? single_output_report(restrict_outputs(channel, {0}), "bob")
          : single_output_report(channel, "bob");

  const bool coherent_input = is_coherent(input);
  double fidelity_bob =
      coherent_input ? gaussian_fidelity(input, bob_state) : kNan;

  std::optional<GaussianState> eve_state;
  std::optional<NoiseReport> eve_report;
  double fidelity_eve = kNan;
  if (config.eve_taps_bob_arm) {
    eve_state = readout_state(layout, 3);
    eve_report = single_output_report(restrict_outputs(channel, {1}), "eve");
    if (coherent_input) {
      fidelity_eve = gaussian_fidelity(input, *eve_state);
    }
  }
  return TeleportOutcome{std::move(bob_state),    std::move(eve_state),
                         std::move(bob_report),   std::move(eve_report),
                         fidelity_bob,            fidelity_eve};
}

CheatOutcome cheating_alice(const GaussianState& input,
                            double bob_fidelity_target) {
  if (input.n_modes() != 1) {
    throw std::invalid_argument("cheating_alice input must be a single mode");
  }
  if (!std::isfinite(bob_fidelity_target) || bob_fidelity_target <= 0.5 ||
      bob_fidelity_target > 2.0 / 3.0) {
    throw std::invalid_argument(
        "bob fidelity target must lie in (1/2, 2/3]: below, keeping a copy "
        "needs no cheat; above, no better copy can exist");
  }
  const double noise_bob = noise_from_fidelity(bob_fidelity_target);
  const double noise_alice = 1.0 / noise_bob;  // two-copy product boundary
  CheatOutcome outcome{
      NoiseReport::symmetric_unity(1, noise_alice),
      NoiseReport::symmetric_unity(1, noise_bob),
      fidelity_unity_gain(noise_alice, noise_alice),
      fidelity_unity_gain(noise_bob, noise_bob),
  };
  return outcome;
}

AttackScan eve_vs_bob_scan(double squeeze,
                           const std::vector<double>& efficiencies) {
  if (!std::isfinite(squeeze) || squeeze <= 0.0) {
    throw std::invalid_argument("attack scan needs squeeze > 0");
  }
  auto point_at = [&](double eta) {
    TeleportConfig config;
    config.squeeze = squeeze;
    config.bob_arm_efficiency = eta;
    config.eve_taps_bob_arm = true;
    TeleportOutcome out = bk_teleport(coherent(0.0, 0.0), config);
    return AttackPoint{eta,
                       out.bob_report.noise_x(0),
                       out.bob_report.noise_y(0),
                       out.fidelity_bob,
                       out.eve_report->noise_x(0),
                       out.eve_report->noise_y(0),
                       out.fidelity_eve};
  };

  AttackScan scan;
  scan.points.reserve(efficiencies.size());
  for (double eta : efficiencies) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
      throw std::invalid_argument("efficiencies must be in [0, 1]");
    }
    scan.points.push_back(point_at(eta));
  }

  auto gap = [](const AttackPoint& p) { return p.bob_noise_x - p.eve_noise_x; };
  scan.crossing_efficiency = kNan;
  for (size_t i = 0; i + 1 < scan.points.size(); ++i) {
    const double f0 = gap(scan.points[i]);
    const double f1 = gap(scan.points[i + 1]);
    if (f0 == 0.0) {
      scan.crossing_efficiency = scan.points[i].efficiency;
      break;
    }
    if (f0 * f1 > 0.0) continue;
    double lo = scan.points[i].efficiency;
    double hi = scan.points[i + 1].efficiency;
    double flo = f0;
    for (int iter = 0; iter < 80 && hi - lo > 1e-12; ++iter) {
      const double mid = (lo + hi) / 2.0;
      const double fmid = gap(point_at(mid));
      if (fmid == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fmid < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fmid;
      }
    }
    scan.crossing_efficiency = (lo + hi) / 2.0;
    break;
  }
  if (!scan.points.empty() && std::isnan(scan.crossing_efficiency)) {
    const AttackPoint& last = scan.points.back();
    if (gap(last) == 0.0) scan.crossing_efficiency = last.efficiency;
  }
  return scan;
}

double conditional_squeezing(double squeeze, double per_beam_efficiency) {
  if (!std::isfinite(squeeze) || squeeze < 0.0) {
    throw std::invalid_argument("squeeze parameter must be >= 0");
  }
  if (!std::isfinite(per_beam_efficiency) || per_beam_efficiency < 0.0 ||
      per_beam_efficiency > 1.0) {
    throw std::invalid_argument("per-beam efficiency must be in [0, 1]");
  }
  GaussianState state = epr_source(squeeze);
  state = apply(loss(per_beam_efficiency), state, {0});
  state = apply(loss(per_beam_efficiency), state, {1});
  GaussianState conditioned =
      homodyne_condition(state, QuadratureIndex{0, Axis::X}, 0.0);
  return conditioned.cov()(0, 0) / vacuum_noise();
}

}  // namespace cvq
