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

#include "cvq/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvq/config.hpp"

namespace cvq {

namespace {

constexpr double kSymmetryTol = 1e-12;    // relative, on cov entries
constexpr double kPhysicalityTol = 1e-9;  // relative, on symplectic spectrum

void check_quadrature(const GaussianState& state, QuadratureIndex q) {
  if (q.mode < 0 || q.mode >= state.n_modes()) {
    throw std::invalid_argument("quadrature mode index out of range");
  }
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int m = 0; m < n_modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  const auto dim = mean_.size();
  if (dim < 2 || dim % 2 != 0) {
    throw std::invalid_argument("mean length must be a positive even number");
  }
  if (cov_.rows() != dim || cov_.cols() != dim) {
    throw std::invalid_argument("cov dimensions disagree with mean");
  }
  if (!mean_.allFinite() || !cov_.allFinite()) {
    throw std::invalid_argument("state entries must be finite");
  }
  const double scale = std::max(cov_.cwiseAbs().maxCoeff(), vacuum_noise());
  const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) {
    throw std::invalid_argument("cov is not symmetric");
  }
  cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();
  const auto nu = symplectic_eigenvalues(cov_);
  if (nu.front() < vacuum_noise() * (1.0 - kPhysicalityTol)) {
    throw std::invalid_argument(
        "cov violates the uncertainty principle (symplectic eigenvalue "
        "below N0)");
  }
}

GaussianState vacuum(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  return GaussianState(
      Eigen::VectorXd::Zero(2 * n_modes),
      vacuum_noise() *
          Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState coherent(double x_mean, double y_mean) {
  if (!std::isfinite(x_mean) || !std::isfinite(y_mean)) {
    throw std::invalid_argument("coherent mean must be finite");
  }
  Eigen::VectorXd mean(2);
  mean << x_mean, y_mean;
  return GaussianState(mean,
                       vacuum_noise() * Eigen::MatrixXd::Identity(2, 2));
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
  const int da = 2 * a.n_modes();
  const int db = 2 * b.n_modes();
  Eigen::VectorXd mean(da + db);
  mean.head(da) = a.mean();
  mean.tail(db) = b.mean();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(da + db, da + db);
  cov.topLeftCorner(da, da) = a.cov();
  cov.bottomRightCorner(db, db) = b.cov();
  return GaussianState(std::move(mean), std::move(cov));
}

GaussianState partial_state(const GaussianState& state,
                            const std::vector<int>& keep_modes) {
  if (keep_modes.empty()) {
    throw std::invalid_argument("keep_modes must not be empty");
  }
  std::vector<int> quads;
  quads.reserve(2 * keep_modes.size());
  std::vector<bool> seen(state.n_modes(), false);
  for (int m : keep_modes) {
    if (m < 0 || m >= state.n_modes()) {
      throw std::invalid_argument("keep_modes index out of range");
    }
    if (seen[m]) throw std::invalid_argument("keep_modes must be distinct");
    seen[m] = true;
    quads.push_back(2 * m);
    quads.push_back(2 * m + 1);
  }
  return GaussianState(state.mean()(quads), state.cov()(quads, quads));
}

GaussianState homodyne_condition(const GaussianState& state,
                                 QuadratureIndex q, double outcome) {
  if (state.n_modes() < 2) {
    throw std::invalid_argument(
        "homodyne_condition needs at least two modes (the measured mode is "
        "destroyed)");
  }
  check_quadrature(state, q);
  if (!std::isfinite(outcome)) {
    throw std::invalid_argument("homodyne outcome must be finite");
  }
  const int mq = q.flat();
  const double v = state.cov()(mq, mq);
  if (v <= 0.0) {
    throw std::runtime_error(
        "measured quadrature has non-positive variance");
  }
  std::vector<int> kept;
  kept.reserve(2 * (state.n_modes() - 1));
  for (int m = 0; m < state.n_modes(); ++m) {
    if (m == q.mode) continue;
    kept.push_back(2 * m);
    kept.push_back(2 * m + 1);
  }
  const Eigen::VectorXd c = state.cov()(kept, std::vector<int>{mq});
  Eigen::VectorXd mean =
      state.mean()(kept) + c * ((outcome - state.mean()(mq)) / v);
  Eigen::MatrixXd cov =
      state.cov()(kept, kept) - (c * c.transpose()) / v;
  return GaussianState(std::move(mean), std::move(cov));
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov) {
  const int dim = static_cast<int>(cov.rows());
  const int n = dim / 2;
  // nu_j are the singular values (paired) of sqrt(cov) * Omega * sqrt(cov),
  // a real antisymmetric matrix similar to Omega*cov.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("covariance eigendecomposition failed");
  }
  const Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
  const Eigen::MatrixXd sqrt_cov = es.eigenvectors() *
                                   clamped.cwiseSqrt().asDiagonal() *
                                   es.eigenvectors().transpose();
  const Eigen::MatrixXd k = sqrt_cov * symplectic_form(n) * sqrt_cov;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(k);
  const Eigen::VectorXd sigma = svd.singularValues();  // descending
  std::vector<double> nu(n);
  for (int j = 0; j < n; ++j) {
    nu[n - 1 - j] = (sigma(2 * j) + sigma(2 * j + 1)) / 2.0;
  }
  return nu;
}

std::vector<double> symplectic_eigenvalues(const GaussianState& state) {
  return symplectic_eigenvalues(state.cov());
}

}  // namespace cvq
