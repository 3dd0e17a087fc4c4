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

#include "polywaring/bigint.hpp"
#include "polywaring/figurate.hpp"

namespace polywaring {

// counts[i] is the number of representations of base + i.
struct CountVector {
  std::int64_t base = 0;
  std::vector<BigInt> counts;

  std::size_t size() const { return counts.size(); }
  const BigInt& at(std::int64_t index) const;
};

// Sorted {f(n) : n >= 1, f(n) <= m}.
std::vector<std::int64_t> values_upto(const FigurateSpec& spec, std::int64_t m);

// R_{f,s}(k) for 0 <= k <= m_max, ordered tuples of positive indices.
CountVector count_profile(const FigurateSpec& spec, int s, std::int64_t m_max,
                          const Budget& budget = {});

BigInt count_representations(const FigurateSpec& spec, int s, std::int64_t m,
                             const Budget& budget = {});

// Discrete Fourier route: coefficient of S^s at m read off from s*f_N + 1
// samples of the Weyl sum. Guarded by s*f_N <= 2^20.
inline constexpr std::int64_t kDftDegreeLimit = std::int64_t{1} << 20;
BigInt count_via_dft(const FigurateSpec& spec, int s, std::int64_t m);
std::vector<BigInt> count_profile_via_dft(const FigurateSpec& spec, int s,
                                          std::int64_t m_max);

// Truncated product of two count tables (entries past `limit` dropped).
std::vector<BigInt> convolve(const std::vector<BigInt>& x,
                             const std::vector<BigInt>& y, std::size_t limit);

}  // namespace polywaring
