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

#include <cmath>
#include <numeric>

#include "oracle.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/singularseries.hpp"

using namespace polywaring;

namespace {

// V(q) = sum_{gcd(a,q)=1} (S(q,a) / 24q)^s e(-am/q), S(q,a) = sum_{n<=24q} e(a f(n) / q).
Complex v_oracle(const FigurateSpec& f, int s, std::int64_t m, std::int64_t q) {
  Complex total = 0;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    Complex S = 0;
    for (std::int64_t n = 1; n <= 24 * q; ++n) {
      const auto r = oracle::mod(oracle::mod(oracle::figurate(f, n), q) * a, q);
      S += std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(q));
    }
    S /= 24.0 * static_cast<double>(q);
    total += std::pow(S, s) * std::polar(1.0, -kTwoPi * static_cast<double>(oracle::mod(a * m, q)) / q);
  }
  return total;
}

}  // namespace

TEST_CASE("series terms against direct exponential sums") {
  for (const auto& f : oracle::catalog()) {
    for (int s : {2, 5}) {
      for (std::int64_t m : {0, 1, 7}) {
        const auto terms = series_terms(f, s, m, 14);
        REQUIRE(terms.size() == 15);
        CHECK(std::abs(terms[1] - Complex(1.0, 0.0)) < 1e-12);
        for (std::int64_t q = 1; q <= 14; ++q) {
          CHECK(std::abs(terms[q] - v_oracle(f, s, m, q)) < 1e-10);
        }
      }
    }
  }
  CHECK_THROWS_AS(series_terms(catalog("f1"), 3, 0, 0), DomainError);
}

TEST_CASE("divisor-sum identity and multiplicativity") {
  const auto f1 = catalog("f1");
  for (std::int64_t q = 1; q <= 12; ++q) {
    CHECK(divisor_sum_identity_check(f1, 3, 4, q).holds);
    CHECK(divisor_sum_identity_check(catalog("f3"), 4, 11, q).holds);
  }
  const auto t = series_terms(f1, 5, 9, 30);
  for (std::int64_t q = 2; q <= 6; ++q) {
    for (std::int64_t r = 2; r * q <= 30; ++r) {
      if (std::gcd(q, r) == 1) CHECK(std::abs(t[q * r] - t[q] * t[r]) < 1e-12);
    }
  }
}

TEST_CASE("truncated series and Euler product") {
  const auto f1 = catalog("f1");
  const auto est = truncated_series(f1, 17, 100000, 40);
  const auto terms = series_terms(f1, 17, 100000, 40);
  double sum = 0;
  for (std::int64_t q = 1; q <= 40; ++q) sum += terms[q].real();
  CHECK(est.truncated == doctest::Approx(sum).epsilon(1e-12));
  CHECK(std::abs(est.imag_residue) < 1e-10);
  CHECK_FALSE(est.tail_hypothesis_met);
  const auto euler = euler_product(f1, 17, 100000, 50);
  CHECK(euler.euler_estimate == doctest::Approx(est.truncated).epsilon(1e-3));
  CHECK_FALSE(euler.per_prime.empty());
  double product = 1.0;
  for (const auto& [p, v] : euler.per_prime) product *= v;
  CHECK(euler.euler_estimate == doctest::Approx(product));
}

TEST_CASE("tail bound and lower-bound record") {
  const double e = 9.0 * 17 / 73.0 - 2.0;
  CHECK(tail_bound_log(72, 17, 100.0) ==
        doctest::Approx(17 * std::log(52.0 * std::pow(72.0, 0.25)) - std::log(e) - e * std::log(100.0)));
  CHECK_THROWS_AS(tail_bound_log(72, 16, 100.0), DomainError);
  const auto rec = lower_bound_record(72, 17, 2);
  CHECK(rec.includes_tau);
  CHECK_FALSE(rec.display.empty());
  CHECK_FALSE(lower_bound_record_catalog(72, 17).includes_tau);
  CHECK_THROWS_AS(lower_bound_record(72, 16, 2), DomainError);
  CHECK(to_string(Positivity::kIndeterminate) != to_string(Positivity::kCertifiedHeuristic));
}
