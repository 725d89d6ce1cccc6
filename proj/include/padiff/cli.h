// Copyright 2026 The padiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "padiff/json_io.h"

namespace padiff {

// Process exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitInternal = 4;

// Command line overrides; each one replaces the matching job field.
struct JobOverrides {
  std::optional<std::string> command;
  std::optional<uint64_t> seed;
  std::optional<size_t> order;
  std::optional<int> precision;
  std::optional<bool> fast_gcd;
};

struct JobOutcome {
  int exit_code = kExitOk;
  Json report;
};

// Runs one job. Never throws: failures are reported in `report["error"]`
// with the matching exit code.
JobOutcome RunJob(const Json& job);

// Parses `text`, applies `overrides` and runs the job.
JobOutcome RunJobText(std::string_view text, const JobOverrides& overrides);

// One-paragraph human readable digest of a report.
std::string Summarize(const Json& report);

}  // namespace padiff
