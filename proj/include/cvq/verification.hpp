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
#include <vector>

namespace cvq {

/// One verification criterion outcome.
struct CriterionResult {
  int index;
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::int64_t samples = 1'000'000;
  std::string artifact_dir = "verify_artifacts";
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

/// Runs the full verification suite: analytic limits, bound properties,
/// Monte Carlo cross-checks at the configured shot count, and an artifact
/// determinism re-run. CSV artifacts land in options.artifact_dir (and a
/// byte-compared duplicate set under its "recheck" subdirectory).
VerifyReport run_acceptance(const VerifyOptions& options);

/// Prints one pass/fail line per criterion.
void print_report(const VerifyReport& report, std::ostream& os);

}  // namespace cvq
