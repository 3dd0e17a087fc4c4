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
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polywaring {

using i128 = __int128;
using u128 = unsigned __int128;

// Arbitrary-precision integer used for every exact count.
using BigInt = mpz_class;

std::string to_string(i128 value);
BigInt to_bigint(i128 value);
std::string to_decimal(const BigInt& value);
BigInt parse_bigint(std::string_view decimal);

// Ratio of two big integers as a double, without overflowing either operand.
double ratio_to_double(const BigInt& numerator, const BigInt& denominator);

// Operation budget for the exact convolution routines.
struct Budget {
  static constexpr std::uint64_t kDefaultMaxOps = 4'000'000'000ULL;
  std::uint64_t max_ops = kDefaultMaxOps;

  // Throws BudgetExceeded when `ops` is over the limit.
  void require(std::uint64_t ops, std::string_view what) const;
};

}  // namespace polywaring
