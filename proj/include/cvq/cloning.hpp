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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvq/gaussian_channel.hpp"

namespace cvq {

/// Equivalent-noise signature of a 1->M device.
///
/// Per output i: fitted gains gain_x/gain_y and equivalent input noises
/// noise_x/noise_y = Var(added)/(gain^2 * N0) - 1 referred to a coherent
/// input, in N0 units. corr_x/corr_y hold the pairwise added-noise
/// cross-covariances <B_i B_j> between outputs (N0 units, zero diagonal).
///
/// Plain value type: reports can also be assembled by hand, e.g. as
/// unphysical fixtures for bound tests.
struct NoiseReport {
  Eigen::VectorXd gain_x;
  Eigen::VectorXd gain_y;
  Eigen::VectorXd noise_x;
  Eigen::VectorXd noise_y;
  Eigen::MatrixXd corr_x;
  Eigen::MatrixXd corr_y;

  int outputs() const { return static_cast<int>(noise_x.size()); }

  /// True when gains and noises agree across outputs within tol.
  bool symmetric(double tol = 1e-9) const;

  /// Convenience constructor for symmetric unity-gain reports.
  static NoiseReport symmetric_unity(int outputs, double noise,
                                     double corr = 0.0);
};

/// A 1->M cloning machine realized as a single Gaussian channel.
struct ClonerCircuit {
  int copies;
  GaussianChannel channel;
  std::string label;
};

ClonerCircuit make_cloner(int copies, GaussianChannel channel,
                          std::string label);

/// Coherent probe states used to fit a circuit's gains. At least three
/// non-collinear means are required.
struct ProbeEnsemble {
  std::vector<Eigen::Vector2d> means;

  /// Four probes at (0,0), (d,0), (0,d), (d,d) with d = 10*sqrt(N0).
  static ProbeEnsemble standard();
};

/// Symmetric 1->2 cloner: amplifier G=2 followed by a balanced splitter.
/// Both copies have unity gain and equivalent noise N0.
ClonerCircuit duplicator();

/// Symmetric 1->M cloner: amplifier G=M followed by a balanced fan-out
/// (cascade peeling fractions 1/M, 1/(M-1), ...). Every copy has unity
/// gain and equivalent noise 2(M-1)/M * N0. M=1 is the identity.
ClonerCircuit cloner_1_to_M(int copies);

/// Asymmetric two-copy cloner: amplifier G then a splitter keeping fraction
/// t for the first copy. Output gains are sqrt(G*t) and sqrt(G*(1-t)).
ClonerCircuit amplifier_split_cloner(double gain, double transmittance);

/// Gains fitted from the probes' mean responses; noises and correlations
/// from the output covariance minus the gain-scaled input covariance.
NoiseReport equivalent_noise(const ClonerCircuit& circuit,
                             const ProbeEnsemble& probes);

struct BoundCheck {
  bool pass;
  double margin;  // min cross product minus the bound, in N0^2 units
};

/// Two-copy no-cloning bound: noise_x(a)*noise_y(b) >= N0^2 for both output
/// pairings. Requires a 2-output report.
BoundCheck check_duplication_bound(const NoiseReport& report);

/// Symmetric 1->M bound: N_X * N_Y >= (2(M-1)/M)^2 * N0^2. The report must
/// be symmetric across its M outputs.
BoundCheck check_1_to_M_bound(const NoiseReport& report, int copies);

}  // namespace cvq
