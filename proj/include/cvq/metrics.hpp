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

#include <string>

#include "cvq/gaussian_state.hpp"

namespace cvq {

/// Copy-quality regions for coherent-state transfer.
///   Classical:      F <= 1/2, reachable by measure-and-resend.
///   QuantumFax:     1/2 < F <= 2/3, entanglement helped but a better copy
///                   of the input may still exist elsewhere.
///   Teleportation:  F > 2/3, no better copy can remain anywhere.
enum class Region { Classical, QuantumFax, Teleportation };

std::string region_name(Region region);

struct FidelityVerdict {
  double fidelity;
  Region region;
};

/// Fidelity of a unity-gain symmetric copy of a coherent state with
/// phase-independent equivalent input noises (in N0 units):
///   F = 2 / sqrt((2 + noise_x) * (2 + noise_y)).
double fidelity_unity_gain(double noise_x, double noise_y);

/// Inverse of fidelity_unity_gain on the symmetric diagonal:
/// N = 2/F - 2 (N0 units), for F in (0, 1].
double noise_from_fidelity(double fidelity);

/// Fidelity between a coherent input and an arbitrary single-mode Gaussian
/// output:
///   F = 2*N0 / sqrt(det(V + N0*I)) * exp(-delta^T (V + N0*I)^-1 delta / 2),
/// where V is the output covariance and delta the mean difference. Reduces
/// to fidelity_unity_gain when the means match and V is diagonal.
double gaussian_fidelity(const GaussianState& coherent_input,
                         const GaussianState& output);

/// Symmetric 1->M coherent-state cloning limits: per-copy equivalent noise
/// 2(M-1)/M (N0 units) and fidelity M/(2M-1).
struct CloningLimit {
  double noise;
  double fidelity;
};
CloningLimit cloning_limit(int copies);

/// Region classification of a fidelity in [0, 1]; both boundaries are
/// resolved strictly (1/2 is Classical, 2/3 is QuantumFax).
FidelityVerdict classify(double fidelity);

}  // namespace cvq
