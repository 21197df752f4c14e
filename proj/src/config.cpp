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

#include "cvq/config.hpp"

#include <cmath>
#include <stdexcept>

namespace cvq {

namespace {
double g_vacuum_noise = 1.0;
}

double vacuum_noise() { return g_vacuum_noise; }

void set_vacuum_noise(double n0) {
  if (!std::isfinite(n0) || n0 <= 0.0) {
    throw std::invalid_argument("vacuum noise N0 must be finite and > 0");
  }
  g_vacuum_noise = n0;
}

}  // namespace cvq
