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

#include <optional>
#include <vector>

#include "cvq/cloning.hpp"
#include "cvq/gaussian_state.hpp"

namespace cvq {

/// Parameters of an EPR-based teleportation run. Efficiencies are
/// transmissions (1 = lossless arm).
struct TeleportConfig {
  double squeeze = 0.0;            // EPR squeeze parameter r >= 0
  double gain = 1.0;               // classical feedforward gain, > 0
  double alice_arm_efficiency = 1.0;  // eta_a in [0, 1]
  double bob_arm_efficiency = 1.0;    // eta_b in [0, 1]
  bool eve_taps_bob_arm = false;

  void validate() const;
};

struct TeleportOutcome {
  GaussianState bob_state;
  std::optional<GaussianState> eve_state;
  NoiseReport bob_report;
  std::optional<NoiseReport> eve_report;
  double fidelity_bob;  // NaN when the input is not coherent
  double fidelity_eve;  // NaN unless Eve taps (and input coherent)
};

/// Joint state right before Alice's homodyne detections, plus the
/// feedforward coefficient. Mode layout:
///   0: Alice's X-measured port, 1: Alice's Y-measured port,
///   2: Bob's arm, 3: Eve's tapped mode (when present).
/// The receivers displace by feedforward * (x_outcome, y_outcome).
struct ProtocolLayout {
  GaussianState pre_measurement;
  double feedforward;
  bool has_eve;
};

ProtocolLayout build_protocol(const GaussianState& input,
                              const TeleportConfig& config);

/// The whole protocol, measurement-averaged, as a Gaussian channel from the
/// input mode to Bob's output (and Eve's as a second mode when she taps).
GaussianChannel protocol_channel(const TeleportConfig& config);

/// Runs the teleporter on a single-mode input. Unconditional (measurement-
/// averaged) outputs are computed analytically; noise reports come from
/// probing the protocol channel. When Eve taps, she builds her own
/// teleported copy from her tapped mode and the same classical record, at
/// the same feedforward gain.
TeleportOutcome bk_teleport(const GaussianState& input,
                            const TeleportConfig& config);

/// Alice duplicates the input, keeps one copy on the two-copy noise-product
/// boundary and teleports the other to Bob through a perfect channel.
/// bob_fidelity_target must lie in (1/2, 2/3]: below, the cheat gains
/// nothing; above, no-cloning forbids Bob's copy to be that good while a
/// better one exists, so the request is refused.
struct CheatOutcome {
  NoiseReport alice_report;
  NoiseReport bob_report;
  double fidelity_alice;
  double fidelity_bob;
};
CheatOutcome cheating_alice(const GaussianState& input,
                            double bob_fidelity_target);

/// One row of an eavesdropping scan (noises in N0 units).
struct AttackPoint {
  double efficiency;
  double bob_noise_x;
  double bob_noise_y;
  double bob_fidelity;
  double eve_noise_x;
  double eve_noise_y;
  double eve_fidelity;
};

struct AttackScan {
  std::vector<AttackPoint> points;
  /// Efficiency where Bob's and Eve's noises cross, refined by bisection
  /// from the first sign change on the grid; NaN when the grid shows none.
  double crossing_efficiency;
};

/// Runs the Eve-taps-Bob's-arm scenario (eta_a = 1, g = 1) across the given
/// Bob-arm efficiencies.
AttackScan eve_vs_bob_scan(double squeeze,
                           const std::vector<double>& efficiencies);

/// Conditional variance V(X_b | X_a) of one EPR arm given an X homodyne on
/// the other, with loss `per_beam_efficiency` applied to both arms first.
/// Returned in N0 units; values below 1 certify conditional squeezing.
double conditional_squeezing(double squeeze, double per_beam_efficiency);

}  // namespace cvq
