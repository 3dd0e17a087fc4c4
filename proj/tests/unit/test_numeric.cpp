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

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "polywaring/bigint.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/parallel.hpp"
#include "polywaring/quadrature.hpp"

using namespace polywaring;

TEST_CASE("integer helpers") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(-4, 6) == 2);
  CHECK(gcd(0, 7) == 7);
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(mod_floor(static_cast<i128>(-24) * 1000000007, 24) == 0);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(valuation(48, 2) == 4);
  CHECK(valuation(-81, 3) == 4);
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS(checked_pow(10, 30));

  std::vector<std::int64_t> trial;
  for (std::int64_t n = 2; n <= 1000; ++n) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) trial.push_back(n);
    CHECK(is_prime(n) == prime);
  }
  CHECK(primes_upto(1000) == trial);
  CHECK(trial.size() == 168);
}

TEST_CASE("phases") {
  CHECK(std::abs(unit_phase(1, 4) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(unit_phase(0.5) + 1.0) < 1e-15);
  CHECK(std::abs(unit_phase(-3, 4) - Complex(0, 1)) < 1e-15);
  CHECK(frac_mul(0.25, 7) == doctest::Approx(0.75));
  // alpha * v exceeds double precision; the exact remainder is still 0.5.
  const i128 big = static_cast<i128>(1) << 80;
  CHECK(frac_mul(std::ldexp(1.0, -81) * 3.0, big) == doctest::Approx(0.5));
  CHECK(frac_mul(-0.25, 1) == doctest::Approx(0.75));
  CHECK(dist_to_int(2.9) == doctest::Approx(0.1));
  CHECK(dist_to_int(7, 3) == doctest::Approx(1.0 / 3));
  CHECK(std::abs(ipow(Complex(0, 1), 7) - Complex(0, -1)) < 1e-15);
}

TEST_CASE("compensated summation is order-stable") {
  CompensatedSum<double> s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1000.0);
}

TEST_CASE("big integers") {
  const BigInt two100 = BigInt(1) << 100;
  CHECK(to_decimal(two100) == "1267650600228229401496703205376");
  CHECK(parse_bigint("1267650600228229401496703205376") == two100);
  CHECK_THROWS_AS(parse_bigint("12x"), DomainError);
  const i128 v = -(static_cast<i128>(1) << 100);
  CHECK(to_string(v) == "-1267650600228229401496703205376");
  CHECK(to_bigint(v) == -two100);
  CHECK(ratio_to_double(BigInt(1) << 2000, BigInt(1) << 1999) == 2.0);
  Budget b{100};
  CHECK_NOTHROW(b.require(100, "ok"));
  CHECK_THROWS_AS(b.require(101, "too much"), BudgetExceeded);
}

TEST_CASE("quadrature") {
  auto r = integrate([](double x) { return Complex(std::sin(x), 0.0); }, 0.0, M_PI);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-12));
  r = integrate([](double x) { return Complex(std::sqrt(x), 0.0); }, 0.0, 1.0);
  CHECK(r.value.real() == doctest::Approx(2.0 / 3).epsilon(1e-9));
  // int_0^1 e(50.5 x) dx = (e(50.5) - 1) / (2 pi i 50.5) = i / (50.5 pi).
  QuadratureOptions o;
  o.initial_panels = 64;
  r = integrate([](double x) { return unit_phase(50.5 * x); }, 0.0, 1.0, o);
  CHECK(std::abs(r.value - Complex(0.0, 1.0 / (50.5 * M_PI))) < 1e-10);
  const auto& k = kronrod15();
  double wk = 0, wg = 0;
  for (int i = 0; i < 15; ++i) {
    wk += k.kronrod_weight[i];
    wg += k.gauss_weight[i];
  }
  CHECK(wk == doctest::Approx(2.0));
  CHECK(wg == doctest::Approx(2.0));
}

TEST_CASE("parallel_for covers every index and propagates errors") {
  const unsigned saved = thread_count();
  for (unsigned t : {1u, 3u, 8u}) {
    set_thread_count(t);
    std::vector<int> hits(1001, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(100, [](std::size_t i) {
                      if (i == 57) throw DomainError("boom");
                    }),
                    DomainError);
  }
  set_thread_count(saved);
}
