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

#include "cvq/sampling.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "cvq/config.hpp"
#include "cvq/io.hpp"

namespace cvq {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += kGoldenGamma);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_unit_positive() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

void SplitMix64::next_normal_pair(double& z0, double& z1) {
  const double u1 = next_unit_positive();
  const double u2 = next_unit();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  z0 = mag * std::cos(kTwoPi * u2);
  z1 = mag * std::sin(kTwoPi * u2);
}

std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t index) {
  SplitMix64 rng(master_seed + index * kGoldenGamma);
  return rng.next();
}

SampleBatch sample_state(const GaussianState& state, std::int64_t n_shots,
                         std::uint64_t seed, std::string provenance) {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be >= 1");
  const int dim = 2 * state.n_modes();
  const Eigen::MatrixXd regularized =
      state.cov() +
      1e-12 * vacuum_noise() * Eigen::MatrixXd::Identity(dim, dim);
  Eigen::LLT<Eigen::MatrixXd> llt(regularized);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(
        "covariance not positive definite after regularization");
  }
  const Eigen::MatrixXd chol = llt.matrixL();

  SampleBatch batch{n_shots, Eigen::MatrixXd(n_shots, dim), seed,
                    std::move(provenance)};
  SplitMix64 rng(seed);
  Eigen::VectorXd z(dim);
  Eigen::VectorXd row(dim);
  for (std::int64_t shot = 0; shot < n_shots; ++shot) {
    for (int k = 0; k < dim; k += 2) {
      rng.next_normal_pair(z(k), z(k + 1));
    }
    row.noalias() = chol * z;
    row += state.mean();
    batch.values.row(shot) = row.transpose();
  }
  return batch;
}

EmpiricalMoments empirical_covariance(const SampleBatch& batch) {
  if (batch.n_shots < 2) {
    throw std::invalid_argument("need at least 2 shots for a covariance");
  }
  EmpiricalMoments moments;
  moments.mean = batch.values.colwise().mean();
  const Eigen::MatrixXd centered =
      batch.values.rowwise() - moments.mean.transpose();
  moments.cov = (centered.transpose() * centered) /
                static_cast<double>(batch.n_shots - 1);
  return moments;
}

SampleBatch shotwise_teleport(const GaussianState& input,
                              const TeleportConfig& config,
                              std::int64_t n_shots, std::uint64_t seed) {
  ProtocolLayout layout = build_protocol(input, config);
  SampleBatch joint =
      sample_state(layout.pre_measurement, n_shots, seed, "pre-measurement");
  const int out_cols = layout.has_eve ? 4 : 2;
  SampleBatch batch{n_shots, Eigen::MatrixXd(n_shots, out_cols), seed,
                    "shotwise teleport"};
  const double ff = layout.feedforward;
  for (std::int64_t shot = 0; shot < n_shots; ++shot) {
    const double x_outcome = joint.values(shot, 0);  // X of mode 0
    const double y_outcome = joint.values(shot, 3);  // Y of mode 1
    batch.values(shot, 0) = joint.values(shot, 4) + ff * x_outcome;
    batch.values(shot, 1) = joint.values(shot, 5) + ff * y_outcome;
    if (layout.has_eve) {
      batch.values(shot, 2) = joint.values(shot, 6) + ff * x_outcome;
      batch.values(shot, 3) = joint.values(shot, 7) + ff * y_outcome;
    }
  }
  return batch;
}

void write_csv(const SampleBatch& batch, std::ostream& os) {
  const int dim = static_cast<int>(batch.values.cols());
  os << "shot";
  for (int k = 0; k < dim; ++k) {
    os << ',' << (k % 2 == 0 ? 'X' : 'Y') << (k / 2 + 1);
  }
  os << '\n';
  for (std::int64_t shot = 0; shot < batch.n_shots; ++shot) {
    os << shot;
    for (int k = 0; k < dim; ++k) {
      os << ',' << format_g9(batch.values(shot, k));
    }
    os << '\n';
  }
}

double variance_standard_error(double variance, std::int64_t n_shots) {
  return std::sqrt(2.0 / static_cast<double>(n_shots - 1)) * variance;
}

double covariance_standard_error(double var_a, double var_b, double cov_ab,
                                 std::int64_t n_shots) {
  return std::sqrt((var_a * var_b + cov_ab * cov_ab) /
                   static_cast<double>(n_shots - 1));
}

}  // namespace cvq
