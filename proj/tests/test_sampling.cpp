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
#include <sstream>

#include "cvq/components.hpp"
#include "cvq/sampling.hpp"
#include "test_helpers.hpp"

using namespace cvq;
using namespace cvq::test;

TEST_CASE("splitmix64 reference sequence") {
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
  CHECK(rng.next() == 4593380528125082431ULL);
  CHECK(rng.next() == 16408922859458223821ULL);
}

TEST_CASE("derived streams are deterministic and distinct") {
  CHECK(derive_stream(42, 0) == derive_stream(42, 0));
  CHECK(derive_stream(42, 0) != derive_stream(42, 1));
  CHECK(derive_stream(42, 1) != derive_stream(43, 1));
}

TEST_CASE("sampling is bit-reproducible per seed") {
  const GaussianState state = epr_source(0.6);
  const SampleBatch a = sample_state(state, 500, 77, "repro");
  const SampleBatch b = sample_state(state, 500, 77, "repro");
  CHECK(a.values == b.values);
  const SampleBatch c = sample_state(state, 500, 78, "repro");
  CHECK(a.values != c.values);
  CHECK_THROWS_AS(sample_state(state, 0, 1), std::invalid_argument);
}

TEST_CASE("vacuum statistics at five standard errors") {
  const std::int64_t shots = 200000;
  const EmpiricalMoments mom =
      empirical_covariance(sample_state(vacuum(1), shots, 4242, "vacuum"));
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(mom.cov(k, k) - 1.0) <=
          5.0 * variance_standard_error(1.0, shots));
    CHECK(std::abs(mom.mean(k)) <= 5.0 * std::sqrt(1.0 / shots));
  }
}

TEST_CASE("coherent state sampling keeps vacuum-shaped noise") {
  const std::int64_t shots = 200000;
  const EmpiricalMoments mom = empirical_covariance(
      sample_state(coherent(5.0, 2.0), shots, 515, "coherent"));
  CHECK(std::abs(mom.mean(0) - 5.0) <= 5.0 * std::sqrt(1.0 / shots));
  CHECK(std::abs(mom.mean(1) - 2.0) <= 5.0 * std::sqrt(1.0 / shots));
  CHECK(std::abs(mom.cov(0, 0) - 1.0) <=
        5.0 * variance_standard_error(1.0, shots));
  CHECK(std::abs(mom.cov(1, 1) - 1.0) <=
        5.0 * variance_standard_error(1.0, shots));
}

TEST_CASE("EPR difference quadrature variance") {
  const std::int64_t shots = 200000;
  const SampleBatch batch =
      sample_state(epr_source(1.0), shots, 2718, "epr");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double diff = batch.values(s, 0) - batch.values(s, 2);
    sum += diff;
    sum_sq += diff * diff;
  }
  const double mean = sum / shots;
  const double var = (sum_sq - shots * mean * mean) / (shots - 1);
  const double expected = 2.0 * std::exp(-2.0);
  CHECK(std::abs(var - expected) <=
        5.0 * variance_standard_error(expected, shots));
}

TEST_CASE("empirical covariance estimator") {
  SampleBatch constant{4, Eigen::MatrixXd::Constant(4, 2, 3.5), 0, "const"};
  const EmpiricalMoments mom = empirical_covariance(constant);
  CHECK(mom.cov.isZero(1e-14));
  CHECK(close(mom.mean(0), 3.5, 0.0));

  SampleBatch tiny{1, Eigen::MatrixXd::Zero(1, 2), 0, "tiny"};
  CHECK_THROWS_AS(empirical_covariance(tiny), std::invalid_argument);

  // Symmetric output on real data.
  const EmpiricalMoments real = empirical_covariance(
      sample_state(epr_source(0.4), 2000, 5, "sym"));
  CHECK(matrix_close(real.cov, real.cov.transpose(), 1e-14));
}

TEST_CASE("shotwise teleportation, classical limit") {
  const std::int64_t shots = 200000;
  TeleportConfig config;  // r = 0, g = 1
  const GaussianState in = coherent(1.0, -0.5);
  const SampleBatch batch = shotwise_teleport(in, config, shots, 333);
  const EmpiricalMoments mom = empirical_covariance(batch);
  // Added noise per quadrature is 2 N0: total variance 3 N0.
  CHECK(std::abs(mom.cov(0, 0) - 3.0) <=
        5.0 * variance_standard_error(3.0, shots));
  CHECK(std::abs(mom.cov(1, 1) - 3.0) <=
        5.0 * variance_standard_error(3.0, shots));
  CHECK(std::abs(mom.mean(0) - 1.0) <= 5.0 * std::sqrt(3.0 / shots));
  CHECK(std::abs(mom.mean(1) + 0.5) <= 5.0 * std::sqrt(3.0 / shots));
}

TEST_CASE("shotwise teleportation reproduces the analytic output") {
  const std::int64_t shots = 200000;
  TeleportConfig config;
  config.squeeze = 0.5;
  config.bob_arm_efficiency = 0.7;
  config.eve_taps_bob_arm = true;
  const GaussianState in = coherent(0.8, 0.3);
  const TeleportOutcome analytic = bk_teleport(in, config);
  const EmpiricalMoments mom =
      empirical_covariance(shotwise_teleport(in, config, shots, 999));
  CHECK(std::abs(mom.cov(0, 0) - analytic.bob_state.cov()(0, 0)) <=
        5.0 * variance_standard_error(mom.cov(0, 0), shots));
  CHECK(std::abs(mom.cov(1, 1) - analytic.bob_state.cov()(1, 1)) <=
        5.0 * variance_standard_error(mom.cov(1, 1), shots));
  CHECK(std::abs(mom.cov(2, 2) - analytic.eve_state->cov()(0, 0)) <=
        5.0 * variance_standard_error(mom.cov(2, 2), shots));
  CHECK(std::abs(mom.cov(3, 3) - analytic.eve_state->cov()(1, 1)) <=
        5.0 * variance_standard_error(mom.cov(3, 3), shots));
}

TEST_CASE("shotwise fidelity at the threshold squeezing") {
  const std::int64_t shots = 200000;
  TeleportConfig config;
  config.squeeze = std::log(2.0) / 2.0;
  const GaussianState in = coherent(0.4, 1.2);
  const SampleBatch batch = shotwise_teleport(in, config, shots, 808);
  // Overlap estimator: F = E[4 pi N0 W_in] over output samples.
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double dx = batch.values(s, 0) - in.mean()(0);
    const double dy = batch.values(s, 1) - in.mean()(1);
    const double f = 2.0 * std::exp(-(dx * dx + dy * dy) / 2.0);
    sum += f;
    sum_sq += f * f;
  }
  const double estimate = sum / shots;
  const double se =
      std::sqrt((sum_sq / shots - estimate * estimate) / shots);
  CHECK(std::abs(estimate - 2.0 / 3.0) <= 5.0 * se);
  CHECK(std::abs(estimate - 2.0 / 3.0) <= 0.011);
}

TEST_CASE("batch CSV export") {
  SampleBatch batch{2, Eigen::MatrixXd(2, 4), 7, "csv"};
  batch.values << 0.5, -1.25, 2.0, 0.0,  //
      1.0, 0.333333333333, -2.5, 4.0;
  std::ostringstream os;
  write_csv(batch, os);
  CHECK(os.str() ==
        "shot,X1,Y1,X2,Y2\n"
        "0,0.5,-1.25,2,0\n"
        "1,1,0.333333333,-2.5,4\n");
}
