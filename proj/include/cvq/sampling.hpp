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

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "cvq/gaussian_state.hpp"
#include "cvq/teleportation.hpp"

namespace cvq {

/// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
/// generators"): 64-bit state advanced by the golden-gamma increment
/// 0x9E3779B97F4A7C15 and finalized with two xor-shift multiplies
/// (0xBF58476D1CE4E5B9, 0x94D049BB133111EB). Chosen for reproducible,
/// cheaply derivable parallel streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit();

  /// Uniform double in (0, 1]; safe as a logarithm argument.
  double next_unit_positive();

  /// One standard-normal pair via the trigonometric Box-Muller transform.
  /// Consumption order is frozen: two uniforms per pair, pairs in sequence.
  void next_normal_pair(double& z0, double& z1);

 private:
  std::uint64_t state_;
};

/// Seed for parallel stream `index` derived from a master seed by seeding
/// SplitMix64 at master + index * golden gamma and drawing once.
std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t index);

/// Shot-by-shot joint quadrature outcomes (units sqrt(N0)); row = shot,
/// columns X1,Y1,X2,Y2,... Regenerating with the same seed reproduces the
/// values bit-exactly.
struct SampleBatch {
  std::int64_t n_shots;
  Eigen::MatrixXd values;
  std::uint64_t seed;
  std::string provenance;
};

/// Draws n_shots joint-quadrature samples from the state's Wigner function
/// (a proper density for Gaussian states): frozen lower-triangular Cholesky
/// of cov (+1e-12*N0 on the diagonal) times Box-Muller normals, shot-major.
SampleBatch sample_state(const GaussianState& state, std::int64_t n_shots,
                         std::uint64_t seed, std::string provenance = "");

struct EmpiricalMoments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;  // unbiased (n-1) estimator
};

EmpiricalMoments empirical_covariance(const SampleBatch& batch);

/// Per-shot teleportation: homodyne outcomes drawn explicitly from the
/// pre-measurement joint state, displacements applied shot by shot.
/// Columns are Bob's (X, Y), then Eve's (X, Y) when she taps.
SampleBatch shotwise_teleport(const GaussianState& input,
                              const TeleportConfig& config,
                              std::int64_t n_shots, std::uint64_t seed);

/// Writes a batch as CSV with header: shot, X1, Y1, ...
void write_csv(const SampleBatch& batch, std::ostream& os);

/// Standard error of an n-sample variance estimate: sqrt(2/(n-1)) * var.
double variance_standard_error(double variance, std::int64_t n_shots);

/// Standard error of an n-sample covariance estimate.
double covariance_standard_error(double var_a, double var_b, double cov_ab,
                                 std::int64_t n_shots);

}  // namespace cvq
