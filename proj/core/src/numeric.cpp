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

#include "polywaring/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polywaring/errors.hpp"

namespace polywaring {

Complex unit_phase(double frac) {
  // Centre the phase so the argument of sin/cos stays in [-pi, pi].
  double r = frac - std::floor(frac);
  if (r >= 0.5) r -= 1.0;
  const double angle = kTwoPi * r;
  return {std::cos(angle), std::sin(angle)};
}

Complex unit_phase(std::int64_t num, std::int64_t den) {
  const std::int64_t r = mod_floor(num, den);
  return unit_phase(static_cast<double>(r) / static_cast<double>(den));
}

double frac_mul(double alpha, i128 value) {
  if (alpha == 0.0 || value == 0) return 0.0;
  int exponent = 0;
  const double fr = std::frexp(alpha, &exponent);
  // alpha = mant * 2^shift with |mant| < 2^53.
  const auto mant = static_cast<std::int64_t>(std::ldexp(fr, 53));
  const int shift = exponent - 53;
  i128 product = 0;
  if (__builtin_mul_overflow(static_cast<i128>(mant), value, &product)) {
    const long double v = static_cast<long double>(value);
    const long double x = static_cast<long double>(alpha) * v;
    return static_cast<double>(x - std::floor(x));
  }
  if (shift >= 0) return 0.0;
  const int k = -shift;
  if (k >= 126) {
    const long double x = std::ldexp(static_cast<long double>(product), -k);
    const long double r = x - std::floor(x);
    return static_cast<double>(r);
  }
  const i128 modulus = static_cast<i128>(1) << k;
  i128 r = product % modulus;
  if (r < 0) r += modulus;
  const double out =
      static_cast<double>(std::ldexp(static_cast<long double>(r), -k));
  return out >= 1.0 ? 0.0 : out;
}

double dist_to_int(double x) {
  const double r = x - std::floor(x);
  return r <= 0.5 ? r : 1.0 - r;
}

double dist_to_int(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("dist_to_int: denominator must be positive");
  const std::int64_t r = mod_floor(num, den);
  const std::int64_t d = std::min(r, den - r);
  return static_cast<double>(d) / static_cast<double>(den);
}

Complex ipow(Complex z, unsigned k) {
  Complex result{1.0, 0.0};
  while (k != 0) {
    if (k & 1u) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_upto(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

int valuation(i128 n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  if (p < 2) throw DomainError("valuation needs p >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw DomainError("integer power overflows 64 bits");
    }
  }
  return result;
}

std::int64_t mod_floor(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("no modular inverse");
  return mod_floor(old_s, m);
}

}  // namespace polywaring
