// Copyright 2026 The Polywaring Authors
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
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polywaring::suite {

enum class Profile { kQuick, kFull };

struct SuiteOptions {
  std::uint64_t seed = 42;
  Profile profile = Profile::kFull;
  // Empty selects every criterion.
  std::set<int> only;
  // Thread counts compared by the determinism criterion.
  std::vector<unsigned> determinism_threads = {1, 4, 8};
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  std::vector<std::string> details;
  // Wall time; excluded from the rendered text so that it stays reproducible.
  double seconds = 0.0;
  std::optional<double> time_limit;

  bool within_time() const { return !time_limit || seconds <= *time_limit; }
};

inline constexpr int kCriterionCount = 17;

std::string criterion_title(int id);
// Runs criterion `id` (1..16) under the current thread count.
CriterionResult run_criterion(int id, const SuiteOptions& opts);
// Runs the selected criteria 1..16 and, when selected, the determinism check
// (17), which re-runs the others at each thread count and compares text.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);
// Deterministic text: one verdict line per criterion plus details.
std::string render(const std::vector<CriterionResult>& results);
std::string profile_name(Profile p);

}  // namespace polywaring::suite
