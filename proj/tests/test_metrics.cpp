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

#include <doctest.h>

#include <cmath>

#include "cvq/metrics.hpp"
#include "cvq/sampling.hpp"
#include "test_helpers.hpp"

using namespace cvq;
using namespace cvq::test;

namespace {

/// Brute-force fidelity oracle: the phase-space overlap
/// 4 pi N0 * integral of W_in * W_out, integrated on a trapezoid grid (the
/// integrand decays like a Gaussian, so the rule converges spectrally).
double overlap_integral(const GaussianState& a, const GaussianState& b) {
  const int n = 1601;
  const double lo = -16.0;
  const double hi = 16.0;
  const double h = (hi - lo) / (n - 1);
  const Eigen::Matrix2d ia = a.cov().inverse();
  const Eigen::Matrix2d ib = b.cov().inverse();
  const double norm_a =
      1.0 / (2.0 * M_PI * std::sqrt(a.cov().determinant()));
  const double norm_b =
      1.0 / (2.0 * M_PI * std::sqrt(b.cov().determinant()));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = lo + h * i;
    const double wx = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double y = lo + h * j;
      const double wy = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      Eigen::Vector2d da(x - a.mean()(0), y - a.mean()(1));
      Eigen::Vector2d db(x - b.mean()(0), y - b.mean()(1));
      const double wa = norm_a * std::exp(-0.5 * da.dot(ia * da));
      const double wb = norm_b * std::exp(-0.5 * db.dot(ib * db));
      sum += wx * wy * wa * wb;
    }
  }
  return 4.0 * M_PI * sum * h * h;
}

}  // namespace

TEST_CASE("unity-gain fidelity formula") {
  CHECK(fidelity_unity_gain(0.0, 0.0) == 1.0);
  CHECK(close(fidelity_unity_gain(1.0, 1.0), 2.0 / 3.0, 1e-15));
  CHECK(close(fidelity_unity_gain(2.0, 2.0), 0.5, 1e-15));
  CHECK(close(fidelity_unity_gain(1.0, 2.0), 2.0 / std::sqrt(12.0), 1e-15));
  CHECK_THROWS_AS(fidelity_unity_gain(-0.1, 0.0), std::invalid_argument);
}

TEST_CASE("noise from fidelity") {
  CHECK(close(noise_from_fidelity(0.58), 2.0 / 0.58 - 2.0, 1e-15));
  CHECK(close(noise_from_fidelity(0.58), 1.448, 1e-3));
  CHECK(close(noise_from_fidelity(0.74), 0.703, 1e-3));
  CHECK(noise_from_fidelity(1.0) == 0.0);
  CHECK_THROWS_AS(noise_from_fidelity(0.0), std::invalid_argument);
  CHECK_THROWS_AS(noise_from_fidelity(1.1), std::invalid_argument);

  // Exact inverse of the symmetric unity-gain formula.
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const double f = 0.05 + 0.95 * rng.next_unit();
    CHECK(close(fidelity_unity_gain(noise_from_fidelity(f),
                                    noise_from_fidelity(f)),
                f, 1e-12));
    const double noise = 5.0 * rng.next_unit();
    CHECK(close(noise_from_fidelity(fidelity_unity_gain(noise, noise)),
                noise, 1e-12));
  }
}

TEST_CASE("gaussian fidelity against the overlap oracle") {
  const GaussianState in = coherent(2.0, 0.0);
  CHECK(close(gaussian_fidelity(in, in), 1.0, 1e-12));

  // Unity-gain symmetric noisy copy reproduces the closed form.
  const GaussianState noisy(in.mean(), 2.0 * Eigen::Matrix2d::Identity());
  CHECK(close(gaussian_fidelity(in, noisy), 2.0 / 3.0, 1e-12));

  // Output = vacuum: overlap of two coherent states.
  const double f_vac = gaussian_fidelity(in, vacuum(1));
  CHECK(close(f_vac, std::exp(-1.0), 1e-12));
  CHECK(close(f_vac, overlap_integral(in, vacuum(1)), 1e-8));

  // Asymmetric, displaced output against the numeric integral.
  const GaussianState odd(Eigen::Vector2d(0.3, 0.2),
                          Eigen::Vector2d(1.5, 3.0).asDiagonal());
  const GaussianState in2 = coherent(1.0, -0.5);
  CHECK(close(gaussian_fidelity(in2, odd), overlap_integral(in2, odd), 1e-8));

  // Randomized symmetric unity-gain outputs agree with the formula path.
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const double nx = 5.0 * rng.next_unit();
    const double ny = 5.0 * rng.next_unit();
    const GaussianState out(
        in.mean(), Eigen::Vector2d(1.0 + nx, 1.0 + ny).asDiagonal());
    CHECK(close(gaussian_fidelity(in, out), fidelity_unity_gain(nx, ny),
                1e-10));
  }

  // The input must be coherent.
  const GaussianState thermal(Eigen::Vector2d::Zero(),
                              2.0 * Eigen::Matrix2d::Identity());
  CHECK_THROWS_AS(gaussian_fidelity(thermal, vacuum(1)),
                  std::invalid_argument);
}

TEST_CASE("cloning limits") {
  CHECK(cloning_limit(1).noise == 0.0);
  CHECK(cloning_limit(1).fidelity == 1.0);
  CHECK(close(cloning_limit(2).noise, 1.0, 0.0));
  CHECK(close(cloning_limit(2).fidelity, 2.0 / 3.0, 1e-15));
  CHECK(close(cloning_limit(1000000).noise, 2.0, 1e-5));
  CHECK(close(cloning_limit(1000000).fidelity, 0.5, 1e-6));
  CHECK_THROWS_AS(cloning_limit(0), std::invalid_argument);

  double previous = cloning_limit(1).fidelity;
  for (int m = 2; m <= 100; ++m) {
    const double fidelity = cloning_limit(m).fidelity;
    CHECK(fidelity < previous);
    CHECK(fidelity > 0.5);
    previous = fidelity;
  }
}

TEST_CASE("region classification") {
  CHECK(classify(0.58).region == Region::QuantumFax);
  CHECK(classify(0.74).region == Region::Teleportation);
  CHECK(classify(0.3).region == Region::Classical);
  CHECK(classify(0.5).region == Region::Classical);
  CHECK(classify(2.0 / 3.0).region == Region::QuantumFax);
  CHECK(classify(2.0 / 3.0 + 1e-6).region == Region::Teleportation);
  CHECK(classify(0.0).region == Region::Classical);
  CHECK(classify(1.0).region == Region::Teleportation);
  CHECK_THROWS_AS(classify(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(classify(1.1), std::invalid_argument);

  CHECK(region_name(Region::Classical) == "classical");
  CHECK(region_name(Region::QuantumFax) == "quantum_fax");
  CHECK(region_name(Region::Teleportation) == "teleportation");

  // Monotone: a higher fidelity never maps to a lower region.
  SplitMix64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    double f1 = rng.next_unit();
    double f2 = rng.next_unit();
    if (f1 > f2) std::swap(f1, f2);
    CHECK(static_cast<int>(classify(f1).region) <=
          static_cast<int>(classify(f2).region));
  }
}
