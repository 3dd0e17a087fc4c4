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

#include "polywaring/figurate.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"

namespace polywaring {
namespace {

i128 mul_checked(i128 x, i128 y) {
  i128 r = 0;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw DomainError("figurate evaluation overflows 128 bits");
  }
  return r;
}

i128 add_checked(i128 x, i128 y) {
  i128 r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw DomainError("figurate evaluation overflows 128 bits");
  }
  return r;
}

void require_index(std::int64_t n) {
  if (n < 0 || n > kMaxEvalIndex) {
    throw DomainError("figurate index out of range: " + std::to_string(n));
  }
}

}  // namespace

FigurateSpec make_spec(std::int64_t A, std::int64_t B, std::int64_t C,
                       std::string label) {
  if (A < 1) throw DomainError("figurate spec needs A >= 1");
  return FigurateSpec{A, B, C, std::move(label)};
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"{3,4,3}", 72, 84, 22},
      {"{3,3,5}", 580, 590, 118},
      {"{5,3,3}", 3132, 3186, 598},
  };
  return entries;
}

FigurateSpec catalog(std::string_view symbol) {
  const auto& entries = catalog_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string alias = "f" + std::to_string(i + 1);
    if (e.schlafli == symbol || alias == symbol) return make_spec(e.A, e.B, e.C, e.schlafli);
  }
  throw DomainError("unknown Schlafli symbol '" + std::string(symbol) + "'");
}

Scaled24Coefficients scaled24_coefficients(const FigurateSpec& spec) {
  const i128 A = spec.A, B = spec.B, C = spec.C;
  return {A, 4 * B - 6 * A, 11 * A - 12 * B + 12 * C, -6 * A + 8 * B - 12 * C + 24};
}

i128 scaled24(const FigurateSpec& spec, std::int64_t n) {
  require_index(n);
  const auto c = scaled24_coefficients(spec);
  const i128 x = n;
  i128 acc = c.c4;
  acc = add_checked(mul_checked(acc, x), c.c3);
  acc = add_checked(mul_checked(acc, x), c.c2);
  acc = add_checked(mul_checked(acc, x), c.c1);
  return mul_checked(acc, x);
}

i128 eval(const FigurateSpec& spec, std::int64_t n) {
  return scaled24(spec, n) / 24;
}

i128 scaled12_derivative(const FigurateSpec& spec, std::int64_t n) {
  require_index(n);
  const i128 A = spec.A, B = spec.B, C = spec.C, t = n;
  // A(2t^3 - 9t^2 + 11t - 3) + 2B(3t^2 - 6t + 2) + 6C(2t - 1) + 12.
  const i128 a_part = mul_checked(A, ((2 * t - 9) * t + 11) * t - 3);
  const i128 b_part = mul_checked(2 * B, (3 * t - 6) * t + 2);
  const i128 c_part = mul_checked(6 * C, 2 * t - 1);
  return add_checked(add_checked(a_part, b_part), add_checked(c_part, 12));
}

double eval_real(const FigurateSpec& spec, double t) {
  const double b2 = t * (t - 1.0) / 2.0;
  const double b3 = b2 * (t - 2.0) / 3.0;
  const double b4 = b3 * (t - 3.0) / 4.0;
  return static_cast<double>(spec.A) * b4 + static_cast<double>(spec.B) * b3 +
         static_cast<double>(spec.C) * b2 + t;
}

double eval_deriv(const FigurateSpec& spec, double t) {
  const double A = static_cast<double>(spec.A);
  const double B = static_cast<double>(spec.B);
  const double C = static_cast<double>(spec.C);
  const double a_part = A * (((2.0 * t - 9.0) * t + 11.0) * t - 3.0);
  const double b_part = 2.0 * B * ((3.0 * t - 6.0) * t + 2.0);
  const double c_part = 6.0 * C * (2.0 * t - 1.0);
  return (a_part + b_part + c_part + 12.0) / 12.0;
}

std::int64_t residue(const FigurateSpec& spec, std::int64_t n, std::int64_t q) {
  if (q < 1) throw DomainError("residue modulus must be positive");
  if (n < 0) throw DomainError("residue index must be nonnegative");
  if (q > (std::int64_t{1} << 50)) throw DomainError("residue modulus too large");
  const i128 M = static_cast<i128>(q) * 24;
  const auto c = scaled24_coefficients(spec);
  auto red = [M](i128 v) {
    v %= M;
    return v < 0 ? v + M : v;
  };
  const i128 x = n % M;
  i128 acc = red(c.c4);
  acc = red(acc * x + red(c.c3));
  acc = red(acc * x + red(c.c2));
  acc = red(acc * x + red(c.c1));
  acc = red(acc * x);
  return static_cast<std::int64_t>(acc / 24);
}

std::int64_t max_index(const FigurateSpec& spec, i128 m) {
  if (m < 0) throw DomainError("max_index needs m >= 0");
  if (m < 1) return 0;
  std::int64_t hi = 1;
  while (eval(spec, hi) <= m) {
    if (hi >= kMaxEvalIndex / 2) throw DomainError("max_index: m too large");
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // f(lo) <= m < f(hi) when f is increasing
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (eval(spec, mid) <= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Bisection is only meaningful for increasing f; confirm on the range used.
  constexpr std::int64_t kScanLimit = std::int64_t{1} << 20;
  const std::int64_t scan_to = std::min(hi + 1, kScanLimit);
  i128 prev = eval(spec, 0);
  for (std::int64_t n = 1; n <= scan_to; ++n) {
    const i128 cur = eval(spec, n);
    if (cur <= prev) {
      throw DomainError("figurate polynomial is not increasing at n = " +
                        std::to_string(n));
    }
    prev = cur;
  }
  return lo;
}

}  // namespace polywaring
