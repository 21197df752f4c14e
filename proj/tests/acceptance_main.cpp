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

// Runs the full verification suite and prints one pass/fail line per
// criterion. Optional arguments: artifact directory and shot count.

#include <cstdlib>
#include <iostream>

#include "cvq/verification.hpp"

int main(int argc, char** argv) {
  cvq::VerifyOptions options;
  options.artifact_dir = "acceptance_artifacts";
  if (argc > 1) options.artifact_dir = argv[1];
  if (argc > 2) options.samples = std::atoll(argv[2]);
  const cvq::VerifyReport report = cvq::run_acceptance(options);
  cvq::print_report(report, std::cout);
  return report.all_passed() ? 0 : 1;
}
