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

#include "polywaring/bound_check.hpp"

#include <cmath>
#include <utility>

namespace polywaring {

BoundCheckReport BoundCheckReport::make(double lhs, double rhs,
                                        std::string context,
                                        std::optional<std::uint64_t> seed) {
  BoundCheckReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = !std::isnan(lhs) && !std::isnan(rhs) &&
            lhs <= rhs * (1.0 + kRelativeSlack);
  r.context = std::move(context);
  r.seed = seed;
  return r;
}

BoundCheckReport BoundCheckReport::exact(bool holds, double lhs, double rhs,
                                         std::string context) {
  BoundCheckReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = holds;
  r.context = std::move(context);
  return r;
}

}  // namespace polywaring
