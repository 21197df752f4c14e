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

#include <iosfwd>

#include "cvq/scenario.hpp"

namespace cvq {

/// Executes a validated scenario: writes CSV artifacts, prints a summary
/// block to `out` and warnings to `err`. Returns the process exit code:
/// 0 on success, 1 on verification failure.
int run_scenario(const Scenario& scenario, std::ostream& out,
                 std::ostream& err);

}  // namespace cvq
