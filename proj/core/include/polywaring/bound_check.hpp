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
#include <string>

namespace polywaring {

// One-sided inequality verdict: lhs <= rhs up to a relative slack of 1e-9.
struct BoundCheckReport {
  static constexpr double kRelativeSlack = 1e-9;

  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  std::string context;
  std::optional<std::uint64_t> seed;

  static BoundCheckReport make(double lhs, double rhs, std::string context,
                               std::optional<std::uint64_t> seed = {});
  // For exact comparisons the verdict comes from integer arithmetic and the
  // doubles are only for display.
  static BoundCheckReport exact(bool holds, double lhs, double rhs,
                                std::string context);
};

}  // namespace polywaring
