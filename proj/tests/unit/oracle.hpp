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
#include <vector>

#include "polywaring/figurate.hpp"

namespace oracle {

// f(n) from the binomial definition in plain 64-bit arithmetic.
inline std::int64_t figurate(const polywaring::FigurateSpec& f, std::int64_t n) {
  const std::int64_t c2 = n * (n - 1) / 2;
  const std::int64_t c3 = c2 * (n - 2) / 3;
  const std::int64_t c4 = c3 * (n - 3) / 4;
  return f.A * c4 + f.B * c3 + f.C * c2 + n;
}

inline std::vector<std::int64_t> values(const polywaring::FigurateSpec& f, std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; figurate(f, n) <= m; ++n) out.push_back(figurate(f, n));
  return out;
}

inline std::int64_t mod(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }

inline std::vector<polywaring::FigurateSpec> catalog() {
  return {polywaring::catalog("{3,4,3}"), polywaring::catalog("{3,3,5}"), polywaring::catalog("{5,3,3}")};
}

}  // namespace oracle
