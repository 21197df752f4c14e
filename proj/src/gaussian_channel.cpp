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

#include "cvq/gaussian_channel.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <utility>

#include "cvq/config.hpp"

namespace cvq {

namespace {

constexpr double kNoiseSymmetryTol = 1e-12;
constexpr double kNoisePsdTol = 1e-12;
constexpr double kChannelPhysicalityTol = 1e-9;

}  // namespace

GaussianChannel::GaussianChannel(int in_modes, int out_modes,
                                 Eigen::MatrixXd transform,
                                 Eigen::MatrixXd added_noise)
    : GaussianChannel(in_modes, out_modes, std::move(transform),
                      std::move(added_noise),
                      Eigen::VectorXd::Zero(2 * std::max(out_modes, 0))) {}

GaussianChannel::GaussianChannel(int in_modes, int out_modes,
                                 Eigen::MatrixXd transform,
                                 Eigen::MatrixXd added_noise,
                                 Eigen::VectorXd displacement)
    : in_modes_(in_modes),
      out_modes_(out_modes),
      transform_(std::move(transform)),
      added_noise_(std::move(added_noise)),
      displacement_(std::move(displacement)) {
  if (in_modes_ < 1 || out_modes_ < 1) {
    throw std::invalid_argument("channel mode counts must be >= 1");
  }
  const int din = 2 * in_modes_;
  const int dout = 2 * out_modes_;
  if (transform_.rows() != dout || transform_.cols() != din) {
    throw std::invalid_argument("transform dimensions disagree with modes");
  }
  if (added_noise_.rows() != dout || added_noise_.cols() != dout) {
    throw std::invalid_argument("added_noise dimensions disagree with modes");
  }
  if (displacement_.size() != dout) {
    throw std::invalid_argument("displacement length disagrees with modes");
  }
  if (!transform_.allFinite() || !added_noise_.allFinite() ||
      !displacement_.allFinite()) {
    throw std::invalid_argument("channel entries must be finite");
  }
  const double n0 = vacuum_noise();
  const double noise_scale =
      std::max(added_noise_.cwiseAbs().maxCoeff(), n0);
  if ((added_noise_ - added_noise_.transpose()).cwiseAbs().maxCoeff() >
      kNoiseSymmetryTol * noise_scale) {
    throw std::invalid_argument("added_noise is not symmetric");
  }
  added_noise_ = ((added_noise_ + added_noise_.transpose()) / 2.0).eval();
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(added_noise_);
    if (es.eigenvalues().minCoeff() < -kNoisePsdTol * noise_scale) {
      throw std::invalid_argument("added_noise is not positive semidefinite");
    }
  }
  // Channel physicality: added_noise + i*N0*(Omega_out - T Omega_in T^T) >= 0.
  const Eigen::MatrixXd deficit =
      symplectic_form(out_modes_) -
      transform_ * symplectic_form(in_modes_) * transform_.transpose();
  Eigen::MatrixXcd h =
      added_noise_.cast<std::complex<double>>() +
      std::complex<double>(0.0, n0) * deficit.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const double h_scale = std::max(h.cwiseAbs().maxCoeff(), n0);
  if (es.eigenvalues().minCoeff() < -kChannelPhysicalityTol * h_scale) {
    throw std::invalid_argument(
        "channel is unphysical: added_noise does not cover the commutator "
        "deficit");
  }
}

GaussianChannel GaussianChannel::identity(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  const int d = 2 * n_modes;
  return GaussianChannel(n_modes, n_modes, Eigen::MatrixXd::Identity(d, d),
                         Eigen::MatrixXd::Zero(d, d));
}

GaussianChannel compose(const GaussianChannel& outer,
                        const GaussianChannel& inner) {
  if (outer.in_modes() != inner.out_modes()) {
    throw std::invalid_argument("compose: channel dimensions do not chain");
  }
  Eigen::MatrixXd transform = outer.transform() * inner.transform();
  Eigen::MatrixXd noise =
      outer.transform() * inner.added_noise() * outer.transform().transpose() +
      outer.added_noise();
  Eigen::VectorXd displacement =
      outer.transform() * inner.displacement() + outer.displacement();
  return GaussianChannel(inner.in_modes(), outer.out_modes(),
                         std::move(transform), std::move(noise),
                         std::move(displacement));
}

GaussianChannel tensor_product(const GaussianChannel& a,
                               const GaussianChannel& b) {
  const int din_a = 2 * a.in_modes();
  const int din_b = 2 * b.in_modes();
  const int dout_a = 2 * a.out_modes();
  const int dout_b = 2 * b.out_modes();
  Eigen::MatrixXd transform =
      Eigen::MatrixXd::Zero(dout_a + dout_b, din_a + din_b);
  transform.topLeftCorner(dout_a, din_a) = a.transform();
  transform.bottomRightCorner(dout_b, din_b) = b.transform();
  Eigen::MatrixXd noise =
      Eigen::MatrixXd::Zero(dout_a + dout_b, dout_a + dout_b);
  noise.topLeftCorner(dout_a, dout_a) = a.added_noise();
  noise.bottomRightCorner(dout_b, dout_b) = b.added_noise();
  Eigen::VectorXd displacement(dout_a + dout_b);
  displacement.head(dout_a) = a.displacement();
  displacement.tail(dout_b) = b.displacement();
  return GaussianChannel(a.in_modes() + b.in_modes(),
                         a.out_modes() + b.out_modes(), std::move(transform),
                         std::move(noise), std::move(displacement));
}

GaussianChannel restrict_outputs(const GaussianChannel& channel,
                                 const std::vector<int>& keep_outputs) {
  if (keep_outputs.empty()) {
    throw std::invalid_argument("keep_outputs must not be empty");
  }
  std::vector<int> quads;
  std::vector<bool> seen(channel.out_modes(), false);
  for (int m : keep_outputs) {
    if (m < 0 || m >= channel.out_modes()) {
      throw std::invalid_argument("keep_outputs index out of range");
    }
    if (seen[m]) throw std::invalid_argument("keep_outputs must be distinct");
    seen[m] = true;
    quads.push_back(2 * m);
    quads.push_back(2 * m + 1);
  }
  return GaussianChannel(channel.in_modes(),
                         static_cast<int>(keep_outputs.size()),
                         channel.transform()(quads, Eigen::all),
                         channel.added_noise()(quads, quads),
                         channel.displacement()(quads));
}

GaussianState apply(const GaussianChannel& channel, const GaussianState& state,
                    const std::vector<int>& target_modes) {
  const int n = state.n_modes();
  const int k = channel.in_modes();
  const int m = channel.out_modes();
  if (static_cast<int>(target_modes.size()) != k) {
    throw std::invalid_argument(
        "target_modes count disagrees with channel inputs");
  }
  std::vector<bool> is_target(n, false);
  for (int t : target_modes) {
    if (t < 0 || t >= n) {
      throw std::invalid_argument("target mode index out of range");
    }
    if (is_target[t]) {
      throw std::invalid_argument("target modes must be distinct");
    }
    is_target[t] = true;
  }
  std::vector<int> spectators;
  for (int mode = 0; mode < n; ++mode) {
    if (!is_target[mode]) spectators.push_back(mode);
  }
  const int n_out = n - k + m;
  const bool in_place = (m == k);

  // Output slot of channel port p, and of spectator j.
  auto port_slot = [&](int p) { return in_place ? target_modes[p] : p; };
  auto spec_slot = [&](int j) {
    return in_place ? spectators[j] : m + j;
  };

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(2 * n_out, 2 * n);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < k; ++q) {
      full.block<2, 2>(2 * port_slot(p), 2 * target_modes[q]) =
          channel.transform().block<2, 2>(2 * p, 2 * q);
    }
  }
  for (size_t j = 0; j < spectators.size(); ++j) {
    full.block<2, 2>(2 * spec_slot(static_cast<int>(j)), 2 * spectators[j]) =
        Eigen::Matrix2d::Identity();
  }
  Eigen::MatrixXd noise = Eigen::MatrixXd::Zero(2 * n_out, 2 * n_out);
  Eigen::VectorXd offset = Eigen::VectorXd::Zero(2 * n_out);
  for (int p = 0; p < m; ++p) {
    offset.segment<2>(2 * port_slot(p)) =
        channel.displacement().segment<2>(2 * p);
    for (int q = 0; q < m; ++q) {
      noise.block<2, 2>(2 * port_slot(p), 2 * port_slot(q)) =
          channel.added_noise().block<2, 2>(2 * p, 2 * q);
    }
  }
  Eigen::VectorXd mean = full * state.mean() + offset;
  Eigen::MatrixXd cov =
      full * state.cov() * full.transpose() + noise;
  return GaussianState(std::move(mean), std::move(cov));
}

GaussianState apply(const GaussianChannel& channel,
                    const GaussianState& state) {
  std::vector<int> all(state.n_modes());
  for (int i = 0; i < state.n_modes(); ++i) all[i] = i;
  return apply(channel, state, all);
}

}  // namespace cvq
