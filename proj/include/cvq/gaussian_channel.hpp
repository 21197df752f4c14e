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

#include <Eigen/Dense>
#include <vector>

#include "cvq/gaussian_state.hpp"

namespace cvq {

/// Deterministic Gaussian channel acting on quadratures:
///   mean -> transform * mean + displacement
///   cov  -> transform * cov * transform^T + added_noise
///
/// transform is 2*out_modes x 2*in_modes (dimensionless linearized gains),
/// added_noise is 2*out_modes x 2*out_modes symmetric PSD (units N0), and
/// displacement is an optional constant offset of length 2*out_modes.
///
/// Construction rejects unphysical channels: added_noise must dominate the
/// commutator deficit, i.e.
///   added_noise + i*N0*(Omega_out - transform*Omega_in*transform^T) >= 0,
/// checked through the eigenvalues of that Hermitian matrix. Quantum-limited
/// devices (amplifier, loss) saturate this with a zero eigenvalue.
class GaussianChannel {
 public:
  GaussianChannel(int in_modes, int out_modes, Eigen::MatrixXd transform,
                  Eigen::MatrixXd added_noise);
  GaussianChannel(int in_modes, int out_modes, Eigen::MatrixXd transform,
                  Eigen::MatrixXd added_noise, Eigen::VectorXd displacement);

  static GaussianChannel identity(int n_modes);

  int in_modes() const { return in_modes_; }
  int out_modes() const { return out_modes_; }
  const Eigen::MatrixXd& transform() const { return transform_; }
  const Eigen::MatrixXd& added_noise() const { return added_noise_; }
  const Eigen::VectorXd& displacement() const { return displacement_; }

 private:
  int in_modes_;
  int out_modes_;
  Eigen::MatrixXd transform_;
  Eigen::MatrixXd added_noise_;
  Eigen::VectorXd displacement_;
};

/// Channel composition: outer after inner. Dimensions must chain.
GaussianChannel compose(const GaussianChannel& outer,
                        const GaussianChannel& inner);

/// Independent channels side by side (block direct sum).
GaussianChannel tensor_product(const GaussianChannel& a,
                               const GaussianChannel& b);

/// Keeps only the listed output modes of a channel (traces out the rest).
GaussianChannel restrict_outputs(const GaussianChannel& channel,
                                 const std::vector<int>& keep_outputs);

/// Applies a channel to the targeted modes of a state; spectator modes are
/// untouched, including their correlations with the transformed block.
///
/// target_modes must be distinct, in range, and match channel.in_modes();
/// channel port p is bound to target_modes[p]. When the channel preserves
/// the mode count its outputs replace the targets in place; otherwise the
/// channel outputs become modes 0..out-1 and the spectators follow in their
/// original order.
GaussianState apply(const GaussianChannel& channel, const GaussianState& state,
                    const std::vector<int>& target_modes);

/// Applies a channel spanning the whole state (targets 0..n-1).
GaussianState apply(const GaussianChannel& channel,
                    const GaussianState& state);

}  // namespace cvq
