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

#include "cvq/components.hpp"

#include <cmath>
#include <stdexcept>

#include "cvq/config.hpp"

namespace cvq {

GaussianChannel beamsplitter(double transmittance) {
  if (!std::isfinite(transmittance) || transmittance < 0.0 ||
      transmittance > 1.0) {
    throw std::invalid_argument("beamsplitter transmittance must be in [0,1]");
  }
  const double ct = std::sqrt(transmittance);
  const double cr = std::sqrt(1.0 - transmittance);
  Eigen::MatrixXd transform = Eigen::MatrixXd::Zero(4, 4);
  transform.block<2, 2>(0, 0) = ct * Eigen::Matrix2d::Identity();
  transform.block<2, 2>(0, 2) = cr * Eigen::Matrix2d::Identity();
  transform.block<2, 2>(2, 0) = -cr * Eigen::Matrix2d::Identity();
  transform.block<2, 2>(2, 2) = ct * Eigen::Matrix2d::Identity();
  return GaussianChannel(2, 2, std::move(transform),
                         Eigen::MatrixXd::Zero(4, 4));
}

GaussianChannel amplifier(double gain) {
  if (!std::isfinite(gain) || gain < 1.0) {
    throw std::invalid_argument("amplifier intensity gain must be >= 1");
  }
  return GaussianChannel(
      1, 1, std::sqrt(gain) * Eigen::MatrixXd::Identity(2, 2),
      (gain - 1.0) * vacuum_noise() * Eigen::MatrixXd::Identity(2, 2));
}

GaussianChannel loss(double efficiency) {
  if (!std::isfinite(efficiency) || efficiency < 0.0 || efficiency > 1.0) {
    throw std::invalid_argument("loss efficiency must be in [0,1]");
  }
  return GaussianChannel(
      1, 1, std::sqrt(efficiency) * Eigen::MatrixXd::Identity(2, 2),
      (1.0 - efficiency) * vacuum_noise() * Eigen::MatrixXd::Identity(2, 2));
}

GaussianChannel displacement(double dx, double dy) {
  if (!std::isfinite(dx) || !std::isfinite(dy)) {
    throw std::invalid_argument("displacement must be finite");
  }
  Eigen::VectorXd offset(2);
  offset << dx, dy;
  return GaussianChannel(1, 1, Eigen::MatrixXd::Identity(2, 2),
                         Eigen::MatrixXd::Zero(2, 2), std::move(offset));
}

GaussianChannel two_mode_squeezer(double squeeze) {
  if (!std::isfinite(squeeze) || squeeze < 0.0) {
    throw std::invalid_argument("squeeze parameter must be >= 0");
  }
  const double ch = std::cosh(squeeze);
  const double sh = std::sinh(squeeze);
  Eigen::MatrixXd transform(4, 4);
  // X1' =  ch X1 + sh X2     Y1' = ch Y1 - sh Y2
  // X2' =  sh X1 + ch X2     Y2' = -sh Y1 + ch Y2
  transform << ch, 0, sh, 0,   //
      0, ch, 0, -sh,           //
      sh, 0, ch, 0,            //
      0, -sh, 0, ch;
  return GaussianChannel(2, 2, std::move(transform),
                         Eigen::MatrixXd::Zero(4, 4));
}

GaussianState epr_source(double squeeze) {
  return apply(two_mode_squeezer(squeeze), vacuum(2));
}

GaussianChannel make_channel(const ComponentSpec& spec) {
  return std::visit(
      [](const auto& s) -> GaussianChannel {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BeamsplitterSpec>) {
          return beamsplitter(s.transmittance);
        } else if constexpr (std::is_same_v<T, AmplifierSpec>) {
          return amplifier(s.gain);
        } else if constexpr (std::is_same_v<T, LossSpec>) {
          return loss(s.efficiency);
        } else if constexpr (std::is_same_v<T, TwoModeSqueezerSpec>) {
          return two_mode_squeezer(s.squeeze);
        } else {
          return displacement(s.dx, s.dy);
        }
      },
      spec);
}

}  // namespace cvq
