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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "polywaring/bigint.hpp"

namespace polywaring {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// e(x) = exp(2 pi i x) for a phase already reduced to [0, 1).
Complex unit_phase(double frac);

// e(num / den) with the reduction num mod den done in integers.
Complex unit_phase(std::int64_t num, std::int64_t den);

// Fractional part of alpha * value, computed from the exact binary expansion
// of the double alpha so that large integer values lose no phase bits.
double frac_mul(double alpha, i128 value);

// Distance to the nearest integer. Ties (exactly 1/2) give 1/2.
double dist_to_int(double x);
// Same, for the rational num/den, reduced exactly.
double dist_to_int(std::int64_t num, std::int64_t den);

// Neumaier-compensated accumulator; addition order is the caller's order.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (magnitude(sum_) >= magnitude(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  static double magnitude(double v) { return v < 0 ? -v : v; }
  static double magnitude(long double v) {
    return static_cast<double>(v < 0 ? -v : v);
  }
  T sum_{};
  T comp_{};
};

// Complex accumulator built from two real compensated sums.
class ComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

// z^k by binary powering (k >= 0).
Complex ipow(Complex z, unsigned k);

std::int64_t gcd(std::int64_t a, std::int64_t b);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_upto(std::int64_t limit);
// Exponent of p in n (n != 0).
int valuation(i128 n, std::int64_t p);
// Integer power with overflow check (throws DomainError on overflow).
std::int64_t checked_pow(std::int64_t base, unsigned exp);
// Positive residue of a modulo m.
std::int64_t mod_floor(i128 a, std::int64_t m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace polywaring
