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

namespace cvq {

/// Vacuum quadrature noise variance N0, the shot-noise unit.
///
/// Every covariance in the library is expressed in multiples of this value
/// and quadrature means carry units of sqrt(N0). It is a process-wide
/// constant: set it once at startup (CLI flag --n0), before any state or
/// channel is constructed, and leave it alone afterwards.
double vacuum_noise();

/// Changes N0. Throws std::invalid_argument unless n0 is finite and > 0.
void set_vacuum_noise(double n0);

}  // namespace cvq
