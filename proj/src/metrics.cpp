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

#include "cvq/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "cvq/config.hpp"

namespace cvq {

std::string region_name(Region region) {
  switch (region) {
    case Region::Classical:
      return "classical";
    case Region::QuantumFax:
      return "quantum_fax";
    case Region::Teleportation:
      return "teleportation";
  }
  throw std::logic_error("unknown region");
}

double fidelity_unity_gain(double noise_x, double noise_y) {
  if (!std::isfinite(noise_x) || !std::isfinite(noise_y) || noise_x < 0.0 ||
      noise_y < 0.0) {
    throw std::invalid_argument("equivalent noises must be >= 0");
  }
  return 2.0 / std::sqrt((2.0 + noise_x) * (2.0 + noise_y));
}

double noise_from_fidelity(double fidelity) {
  if (!std::isfinite(fidelity) || fidelity <= 0.0 || fidelity > 1.0) {
    throw std::invalid_argument("fidelity must be in (0, 1]");
  }
  return 2.0 / fidelity - 2.0;
}

double gaussian_fidelity(const GaussianState& coherent_input,
                         const GaussianState& output) {
  if (coherent_input.n_modes() != 1 || output.n_modes() != 1) {
    throw std::invalid_argument("gaussian_fidelity takes single-mode states");
  }
  const double n0 = vacuum_noise();
  if ((coherent_input.cov() - n0 * Eigen::Matrix2d::Identity())
          .cwiseAbs()
          .maxCoeff() > 1e-9 * n0) {
    throw std::invalid_argument("input state must be coherent (cov = N0*I)");
  }
  const Eigen::Matrix2d sum =
      output.cov() + n0 * Eigen::Matrix2d::Identity();
  const double det = sum.determinant();
  if (det <= 0.0) {
    throw std::runtime_error("degenerate covariance sum in fidelity");
  }
  const Eigen::Vector2d delta = output.mean() - coherent_input.mean();
  const double quad = delta.dot(sum.inverse() * delta);
  return 2.0 * n0 / std::sqrt(det) * std::exp(-0.5 * quad);
}

CloningLimit cloning_limit(int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  const double m = static_cast<double>(copies);
  return {2.0 * (m - 1.0) / m, m / (2.0 * m - 1.0)};
}

FidelityVerdict classify(double fidelity) {
  if (!std::isfinite(fidelity) || fidelity < 0.0 || fidelity > 1.0) {
    throw std::invalid_argument("fidelity must be in [0, 1]");
  }
  Region region = Region::Classical;
  if (fidelity > 2.0 / 3.0) {
    region = Region::Teleportation;
  } else if (fidelity > 0.5) {
    region = Region::QuantumFax;
  }
  return {fidelity, region};
}

}  // namespace cvq
