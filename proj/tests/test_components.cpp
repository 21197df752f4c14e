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
#include <complex>

#include "cvq/components.hpp"
#include "cvq/config.hpp"
#include "test_helpers.hpp"

using namespace cvq;
using namespace cvq::test;

namespace {

/// Smallest eigenvalue of the channel-physicality form
/// added_noise + i N0 (Omega_out - T Omega_in T^T).
double physicality_min_eigenvalue(const GaussianChannel& ch) {
  const Eigen::MatrixXd deficit =
      symplectic_form(ch.out_modes()) -
      ch.transform() * symplectic_form(ch.in_modes()) *
          ch.transform().transpose();
  const Eigen::MatrixXcd h =
      ch.added_noise().cast<std::complex<double>>() +
      std::complex<double>(0.0, vacuum_noise()) *
          deficit.cast<std::complex<double>>();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h)
      .eigenvalues()
      .minCoeff();
}

}  // namespace

TEST_CASE("beamsplitter") {
  const GaussianChannel full = beamsplitter(1.0);
  CHECK(matrix_close(full.transform(), Eigen::MatrixXd::Identity(4, 4), 0.0));

  // Balanced splitter leaves two vacua invariant.
  const GaussianState out = apply(beamsplitter(0.5), vacuum(2));
  CHECK(matrix_close(out.cov(), vacuum(2).cov(), 1e-12));

  // Mean map of the frozen sign convention.
  const GaussianState mixed =
      apply(beamsplitter(0.5), tensor(coherent(2.0, 0.0), vacuum(1)));
  CHECK(close(mixed.mean()(0), std::sqrt(2.0), 1e-12));
  CHECK(close(mixed.mean()(1), 0.0, 1e-12));
  CHECK(close(mixed.mean()(2), -std::sqrt(2.0), 1e-12));

  // Symplectic: zero added noise and T Omega T^T = Omega.
  for (double t : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    const GaussianChannel bs = beamsplitter(t);
    CHECK(bs.added_noise().isZero(0.0));
    CHECK(matrix_close(
        bs.transform() * symplectic_form(2) * bs.transform().transpose(),
        symplectic_form(2), 1e-12));
  }
  CHECK_THROWS_AS(beamsplitter(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(beamsplitter(1.1), std::invalid_argument);
}

TEST_CASE("amplifier is quantum limited") {
  CHECK(matrix_close(amplifier(1.0).transform(),
                     Eigen::MatrixXd::Identity(2, 2), 0.0));
  CHECK(amplifier(1.0).added_noise().isZero(0.0));

  const GaussianState out = apply(amplifier(2.0), vacuum(1));
  CHECK(matrix_close(out.cov(), 3.0 * Eigen::Matrix2d::Identity(), 1e-12));

  // Saturates the physicality bound with a zero eigenvalue.
  for (double g : {1.0, 2.0, 5.0}) {
    CHECK(close(physicality_min_eigenvalue(amplifier(g)), 0.0, 1e-9));
  }
  CHECK_THROWS_AS(amplifier(0.99), std::invalid_argument);
}

TEST_CASE("loss channel") {
  SplitMix64 rng(5);
  const GaussianState s = random_state(rng, 1);
  CHECK(bit_identical(apply(loss(1.0), s, {0}), s));

  const GaussianState dark = apply(loss(0.0), s, {0});
  CHECK(vector_close(dark.mean(), Eigen::Vector2d::Zero(), 1e-12));
  CHECK(matrix_close(dark.cov(), Eigen::Matrix2d::Identity(), 1e-12));

  // Semigroup: loss(a) after loss(b) = loss(a*b).
  const GaussianChannel chained = compose(loss(0.5), loss(0.5));
  CHECK(matrix_close(chained.transform(), loss(0.25).transform(), 1e-12));
  CHECK(matrix_close(chained.added_noise(), loss(0.25).added_noise(), 1e-12));

  for (double eta : {0.0, 0.3, 1.0}) {
    CHECK(close(physicality_min_eigenvalue(loss(eta)), 0.0, 1e-9));
  }
  CHECK_THROWS_AS(loss(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(loss(1.01), std::invalid_argument);
}

TEST_CASE("EPR source") {
  CHECK(matrix_close(epr_source(0.0).cov(), vacuum(2).cov(), 1e-15));

  const double r = std::log(2.0) / 2.0;
  const GaussianState epr = epr_source(r);
  // Var(X_a - X_b) = 2 exp(-2r) N0 = N0 at r = ln(2)/2.
  const double var_diff =
      epr.cov()(0, 0) + epr.cov()(2, 2) - 2.0 * epr.cov()(0, 2);
  CHECK(close(var_diff, 1.0, 1e-12));
  // Var(Y_a + Y_b) matches it.
  const double var_sum =
      epr.cov()(1, 1) + epr.cov()(3, 3) + 2.0 * epr.cov()(1, 3);
  CHECK(close(var_sum, 1.0, 1e-12));
  CHECK(close(epr.cov()(0, 0), std::cosh(2.0 * r), 1e-12));

  for (double rr : {0.0, 0.5, 2.0}) {
    for (double nu : symplectic_eigenvalues(epr_source(rr))) {
      CHECK(close(nu, 1.0, 1e-9));
    }
  }
  CHECK_THROWS_AS(epr_source(-0.1), std::invalid_argument);
}

TEST_CASE("displacement") {
  const GaussianChannel none = displacement(0.0, 0.0);
  CHECK(none.displacement().isZero(0.0));

  const GaussianChannel sum =
      compose(displacement(1.0, -2.0), displacement(2.5, 3.0));
  CHECK(vector_close(sum.displacement(), Eigen::Vector2d(3.5, 1.0), 1e-15));

  const GaussianState moved =
      apply(displacement(2.0, 3.0), coherent(1.0, 1.0));
  CHECK(bit_identical(moved, coherent(3.0, 4.0)));

  CHECK_THROWS_AS(displacement(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("two-mode squeezer is symplectic") {
  for (double r : {0.0, 0.7, 1.8}) {
    const GaussianChannel sq = two_mode_squeezer(r);
    CHECK(sq.added_noise().isZero(0.0));
    CHECK(matrix_close(
        sq.transform() * symplectic_form(2) * sq.transform().transpose(),
        symplectic_form(2), 1e-10));
  }
  CHECK_THROWS_AS(two_mode_squeezer(-1.0), std::invalid_argument);
}

TEST_CASE("compose validates and chains") {
  const GaussianChannel id = GaussianChannel::identity(1);
  const GaussianChannel amp = amplifier(1.5);
  const GaussianChannel left = compose(id, amp);
  CHECK(matrix_close(left.transform(), amp.transform(), 0.0));
  CHECK(matrix_close(left.added_noise(), amp.added_noise(), 0.0));
  CHECK_THROWS_AS(compose(beamsplitter(0.5), amplifier(2.0)),
                  std::invalid_argument);
}

TEST_CASE("unphysical channels are rejected at construction") {
  // Amplification without added noise breaks the commutator bound.
  CHECK_THROWS_AS(
      GaussianChannel(1, 1, std::sqrt(2.0) * Eigen::MatrixXd::Identity(2, 2),
                      Eigen::MatrixXd::Zero(2, 2)),
      std::invalid_argument);
  // Negative-definite noise is rejected before physicality.
  CHECK_THROWS_AS(
      GaussianChannel(1, 1, Eigen::MatrixXd::Identity(2, 2),
                      -0.1 * Eigen::MatrixXd::Identity(2, 2)),
      std::invalid_argument);
}

TEST_CASE("component specs construct validated channels") {
  const GaussianChannel bs = make_channel(BeamsplitterSpec{0.5});
  CHECK(bs.in_modes() == 2);
  const GaussianChannel amp = make_channel(AmplifierSpec{2.0});
  CHECK(close(amp.transform()(0, 0), std::sqrt(2.0), 0.0));
  CHECK(make_channel(LossSpec{0.7}).out_modes() == 1);
  CHECK(make_channel(TwoModeSqueezerSpec{0.4}).in_modes() == 2);
  CHECK(vector_close(make_channel(DisplacementSpec{1.0, 2.0}).displacement(),
                     Eigen::Vector2d(1.0, 2.0), 0.0));
  CHECK_THROWS_AS(make_channel(BeamsplitterSpec{1.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_channel(AmplifierSpec{0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_channel(LossSpec{-0.2}), std::invalid_argument);
}
