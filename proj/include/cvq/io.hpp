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
#include <string>
#include <vector>

namespace cvq {

/// Number rendered with 9 significant digits ("%.9g"), the frozen format of
/// every CSV this tool emits. Byte-stable across runs of the same build.
std::string format_g9(double value);

/// Minimal header + rows CSV builder with the frozen number format.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);

  /// Cell helpers.
  static std::string num(double value) { return format_g9(value); }
  static std::string num(std::int64_t value) { return std::to_string(value); }

  std::string to_string() const;
  void write_file(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace cvq
