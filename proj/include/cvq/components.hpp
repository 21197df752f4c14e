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

#include <variant>

#include "cvq/gaussian_channel.hpp"
#include "cvq/gaussian_state.hpp"

namespace cvq {

// The optical toolbox every circuit in this library is assembled from.
// All constructors validate their parameter ranges and every returned
// channel passes the physicality check; amplifier and loss saturate it
// (quantum-limited devices).

/// Two-port beamsplitter with transmittance t in [0, 1]. Port convention
/// (frozen for regression tests):
///   out1 = sqrt(t)*u + sqrt(1-t)*v
///   out2 = -sqrt(1-t)*u + sqrt(t)*v
/// acting identically on X and Y. Symplectic, zero added noise.
GaussianChannel beamsplitter(double transmittance);

/// Phase-insensitive linear amplifier with intensity gain G >= 1:
/// transform = sqrt(G)*I, added_noise = (G-1)*N0*I.
GaussianChannel amplifier(double gain);

/// Pure transmission loss with efficiency eta in [0, 1]:
/// transform = sqrt(eta)*I, added_noise = (1-eta)*N0*I.
GaussianChannel loss(double efficiency);

/// Rigid phase-space displacement by (dx, dy); covariance untouched.
GaussianChannel displacement(double dx, double dy);

/// Two-mode squeezer with parameter r >= 0: correlates X quadratures and
/// anti-correlates Y quadratures of the two ports. Symplectic.
GaussianChannel two_mode_squeezer(double squeeze);

/// Two-mode squeezed vacuum (EPR pair): per-arm variance cosh(2r)*N0,
/// Var(X_a - X_b) = Var(Y_a + Y_b) = 2*exp(-2r)*N0. Pure for every r.
GaussianState epr_source(double squeeze);

/// Declarative description of a single component, for building circuits
/// from configuration. Parameter ranges are enforced by make_channel.
struct BeamsplitterSpec {
  double transmittance;
};
struct AmplifierSpec {
  double gain;
};
struct LossSpec {
  double efficiency;
};
struct TwoModeSqueezerSpec {
  double squeeze;
};
struct DisplacementSpec {
  double dx;
  double dy;
};

using ComponentSpec =
    std::variant<BeamsplitterSpec, AmplifierSpec, LossSpec,
                 TwoModeSqueezerSpec, DisplacementSpec>;

GaussianChannel make_channel(const ComponentSpec& spec);

}  // namespace cvq
