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

namespace cvq {

/// Quadrature axis of an optical mode. X and Y are the two conjugate field
/// quadratures, [X, Y] = 2i*N0.
enum class Axis { X = 0, Y = 1 };

/// Addresses one quadrature of one mode inside a multimode state.
struct QuadratureIndex {
  int mode = 0;
  Axis axis = Axis::X;

  /// Flat index into mean/cov with the mode-major ordering X1,Y1,X2,Y2,...
  int flat() const { return 2 * mode + (axis == Axis::Y ? 1 : 0); }
};

/// Symplectic form Omega for n modes in X1,Y1,X2,Y2,... ordering:
/// block-diagonal copies of [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

/// Multimode Gaussian state: mean quadrature vector (units sqrt(N0)) and
/// symmetric covariance matrix (units N0), mode-major ordering.
///
/// Construction validates that cov is symmetric, that dimensions agree and
/// that the state is physical (every symplectic eigenvalue >= N0 up to a
/// 1e-9 relative tolerance, the covariance form of the uncertainty
/// principle). Instances are immutable values.
class GaussianState {
 public:
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  int n_modes() const { return static_cast<int>(mean_.size()) / 2; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  double mean_of(QuadratureIndex q) const { return mean_(q.flat()); }
  double variance_of(QuadratureIndex q) const {
    return cov_(q.flat(), q.flat());
  }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

/// n-mode vacuum: zero mean, cov = N0 * Identity. n_modes must be >= 1.
GaussianState vacuum(int n_modes);

/// Single-mode coherent state: displaced vacuum with mean (x, y).
GaussianState coherent(double x_mean, double y_mean);

/// Direct sum of two states; modes of b follow the modes of a.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// Restriction to the listed modes (partial trace over the rest).
/// keep_modes must be non-empty, distinct and in range; the result keeps
/// the listed order.
GaussianState partial_state(const GaussianState& state,
                            const std::vector<int>& keep_modes);

/// Gaussian conditioning on an ideal homodyne measurement of quadrature q
/// with result `outcome`. Returns the conditioned state of the remaining
/// modes; the measured mode is removed entirely (the conjugate quadrature
/// information is discarded). Mean and covariance follow the standard
/// Schur-complement update against the measured quadrature's variance.
GaussianState homodyne_condition(const GaussianState& state,
                                 QuadratureIndex q, double outcome);

/// Symplectic spectrum of a covariance matrix: the n distinct moduli of the
/// eigenvalues of i*Omega*cov, ascending. All >= N0 iff the state is
/// physical.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cov);
std::vector<double> symplectic_eigenvalues(const GaussianState& state);

}  // namespace cvq
