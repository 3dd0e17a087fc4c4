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

#include "polywaring/bigint.hpp"

#include <algorithm>
#include <string>

#include "polywaring/errors.hpp"

namespace polywaring {

std::string to_string(i128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  u128 mag = negative ? u128(0) - static_cast<u128>(value)
                      : static_cast<u128>(value);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt to_bigint(i128 value) { return BigInt(to_string(value)); }

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view decimal) {
  BigInt out;
  if (decimal.empty() || out.set_str(std::string(decimal), 10) != 0) {
    throw DomainError("not a decimal integer: '" + std::string(decimal) + "'");
  }
  return out;
}

double ratio_to_double(const BigInt& numerator, const BigInt& denominator) {
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return q.get_d();
}

void Budget::require(std::uint64_t ops, std::string_view what) const {
  if (ops > max_ops) {
    throw BudgetExceeded(std::string(what) + " needs about " +
                         std::to_string(ops) + " operations, budget is " +
                         std::to_string(max_ops));
  }
}

}  // namespace polywaring
