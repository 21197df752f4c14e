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

#include <cmath>

#include "cvq/components.hpp"
#include "cvq/gaussian_channel.hpp"
#include "cvq/gaussian_state.hpp"
#include "cvq/sampling.hpp"

namespace cvq::test {

inline bool close(double a, double b, double tol = 1e-10) {
  return std::abs(a - b) <= tol;
}

inline bool matrix_close(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                         double tol = 1e-10) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline bool vector_close(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                         double tol = 1e-10) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline bool bit_identical(const GaussianState& a, const GaussianState& b) {
  return a.mean() == b.mean() && a.cov() == b.cov();
}

/// Random physical state built by composing random components onto vacuum;
/// physical by construction.
inline GaussianState random_state(SplitMix64& rng, int n_modes,
                                  int rounds = 6) {
  GaussianState state = vacuum(n_modes);
  for (int round = 0; round < rounds; ++round) {
    const int mode = static_cast<int>(rng.next() % n_modes);
    switch (rng.next() % 5) {
      case 0:
        state = apply(loss(rng.next_unit()), state, {mode});
        break;
      case 1:
        state = apply(amplifier(1.0 + 2.0 * rng.next_unit()), state, {mode});
        break;
      case 2:
        state = apply(displacement(4.0 * rng.next_unit() - 2.0,
                                   4.0 * rng.next_unit() - 2.0),
                      state, {mode});
        break;
      case 3: {
        if (n_modes < 2) break;
        const int other = (mode + 1 + static_cast<int>(rng.next() %
                                                       (n_modes - 1))) %
                          n_modes;
        state = apply(two_mode_squeezer(rng.next_unit()), state,
                      {mode, other});
        break;
      }
      default: {
        if (n_modes < 2) break;
        const int other = (mode + 1 + static_cast<int>(rng.next() %
                                                       (n_modes - 1))) %
                          n_modes;
        state = apply(beamsplitter(rng.next_unit()), state, {mode, other});
        break;
      }
    }
  }
  return state;
}

/// Random single-mode channel from the component toolbox.
inline GaussianChannel random_single_mode_channel(SplitMix64& rng) {
  switch (rng.next() % 4) {
    case 0:
      return loss(rng.next_unit());
    case 1:
      return amplifier(1.0 + 3.0 * rng.next_unit());
    case 2:
      return displacement(2.0 * rng.next_unit() - 1.0,
                          2.0 * rng.next_unit() - 1.0);
    default:
      return compose(loss(0.5 + 0.5 * rng.next_unit()),
                     amplifier(1.0 + rng.next_unit()));
  }
}

}  // namespace cvq::test
