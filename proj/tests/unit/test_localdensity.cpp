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

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/localdensity.hpp"
#include "polywaring/numeric.hpp"

using namespace polywaring;

namespace {

// Tuples in [1,t]^s with f-sum = m mod q, by odometer enumeration.
std::int64_t brute_congruence(const FigurateSpec& f, int s, std::int64_t m, std::int64_t t, std::int64_t q) {
  std::vector<std::int64_t> idx(s, 1);
  std::int64_t count = 0;
  while (true) {
    std::int64_t sum = 0;
    for (auto n : idx) sum += oracle::mod(oracle::figurate(f, n), q);
    count += oracle::mod(sum - m, q) == 0;
    int k = 0;
    while (k < s && idx[k] == t) idx[k++] = 1;
    if (k == s) break;
    ++idx[k];
  }
  return count;
}

// v_p(f'(y)) from the integer polynomial 24 f' = 4 c4 y^3 + 3 c3 y^2 + 2 c2 y + c1.
int derivative_valuation_oracle(const FigurateSpec& f, std::int64_t y, std::int64_t p) {
  const i128 c4 = f.A, c3 = 4 * f.B - 6 * f.A, c2 = 11 * f.A - 12 * f.B + 12 * f.C,
             c1 = -6 * f.A + 8 * f.B - 12 * f.C + 24;
  const i128 Y = y;
  const i128 d = 4 * c4 * Y * Y * Y + 3 * c3 * Y * Y + 2 * c2 * Y + c1;
  return valuation(d, p) - valuation(24, p);
}

}  // namespace

TEST_CASE("residue distributions") {
  for (const auto& f : oracle::catalog()) {
    for (std::int64_t q : {1, 2, 9, 24, 35}) {
      const auto d = residue_distribution(f, 100, q);
      std::vector<std::int64_t> want(q, 0);
      for (std::int64_t n = 1; n <= 100; ++n) ++want[oracle::mod(oracle::figurate(f, n), q)];
      CHECK(d.counts == want);
      CHECK(d.modulus == q);
    }
  }
}

TEST_CASE("congruence counts against enumeration") {
  for (const auto& f : oracle::catalog()) {
    for (auto [s, t, q] : {std::tuple{2, 24, 6}, std::tuple{3, 12, 4}, std::tuple{3, 18, 9}, std::tuple{4, 7, 5}}) {
      for (std::int64_t m = 0; m < q; ++m) {
        CHECK(count_congruence(f, s, m, t, q) == brute_congruence(f, s, m, t, q));
      }
      const auto prof = congruence_profile(f, s, t, q);
      BigInt total = 0;
      for (const auto& c : prof) total += c;
      CHECK(total == BigInt(static_cast<long>(std::pow(t, s))));
    }
  }
}

TEST_CASE("scaling identity") {
  const auto f1 = catalog("f1");
  const auto f2 = catalog("f2");
  for (std::int64_t q : {2, 3, 12, 20}) CHECK(scaling_identity_check(f1, 5, 3, q).holds);
  // f2 is not q-periodic when 3 | q, so the identity fails there.
  CHECK(scaling_identity_check(f2, 5, 3, 4).holds);
  CHECK_FALSE(scaling_identity_check(f2, 5, 3, 12).holds);
  CHECK(count_congruence(f2, 5, 3, 24 * 12, 12) == BigInt("164433494016"));
  CHECK(BigInt(count_congruence(f2, 5, 3, 12, 12) * 7962624) == BigInt("164396335104"));
}

TEST_CASE("nonsingular solutions") {
  // s = 2 by enumeration of (n1, n2) mod p with p not dividing f(n1) f'(n1).
  for (const auto& f : oracle::catalog()) {
    for (std::int64_t p : {11, 13, 17}) {
      for (std::int64_t m = 0; m < p; ++m) {
        std::int64_t want = 0;
        for (std::int64_t a = 1; a <= p; ++a) {
          if (oracle::mod(oracle::figurate(f, a), p) == 0) continue;
          if (derivative_valuation_oracle(f, a, p) > 0) continue;
          for (std::int64_t b = 1; b <= p; ++b) {
            want += oracle::mod(oracle::figurate(f, a) + oracle::figurate(f, b) - m, p) == 0;
          }
        }
        CHECK(nonsingular_count(f, 2, m, p) == want);
      }
    }
  }
  CHECK_THROWS_AS(nonsingular_count(catalog("f1"), 17, 0, 12), DomainError);
}

TEST_CASE("local densities") {
  const auto f1 = catalog("f1");
  // Values from an independent big-integer computation.
  CHECK(local_density(f1, 17, 5, 2, 1) == doctest::Approx(1.0));
  CHECK(local_density(f1, 17, 5, 2, 2) == doctest::Approx(1.00390625));
  CHECK(local_density(f1, 17, 5, 2, 3) == doctest::Approx(0.52294921875));
  for (std::int64_t p : {2, 3, 7}) {
    for (int k = 1; k <= 3; ++k) {
      const auto exact = local_density_value(f1, 17, 5, p, k, DensityPath::kExact);
      const auto flt = local_density_value(f1, 17, 5, p, k, DensityPath::kFloat);
      CHECK(exact.exact);
      CHECK(flt.value == doctest::Approx(exact.value).epsilon(1e-10));
    }
  }
  const auto rep = local_density_limit(f1, 17, 5, 2);
  CHECK(rep.stabilized);
  CHECK(rep.estimate == doctest::Approx(0.52294921875));
  CHECK(rep.lower_bound >= 0.0);
  CHECK_FALSE(rep.lower_bound_violated);
  CHECK(local_density_value(f1, 17, 5, 3, 0).value == 1.0);
  CHECK_THROWS_AS(local_density(f1, 17, 5, 4, 1), DomainError);
}

TEST_CASE("tau by valuation scan") {
  for (const auto& f : oracle::catalog()) {
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
      int scan = 1000;
      for (std::int64_t y = 1; y <= 3000; ++y) scan = std::min(scan, derivative_valuation_oracle(f, y, p));
      CHECK(valuation_tau(f, p) == scan);
    }
  }
  CHECK(valuation_tau(catalog("f1"), 2) == 2);
}

TEST_CASE("Hensel lifting") {
  const auto f1 = catalog("f1");
  for (std::int64_t a = 1; a < 32; a += 2) {
    const std::int64_t fa = oracle::figurate(f1, a) % 32;
    for (std::int64_t c : {fa, fa + 32}) {
      auto lifts = hensel_lift(f1, c, a, 2, 5, 2);
      std::vector<std::int64_t> scan;
      for (std::int64_t b = 0; b < 64; ++b) {
        if ((b - a) % 8 == 0 && oracle::figurate(f1, b) % 64 == c) scan.push_back(b);
      }
      std::sort(lifts.begin(), lifts.end());
      CHECK(lifts == scan);
      CHECK(lifts.size() == 4);
    }
  }
  CHECK_THROWS_AS(hensel_lift(f1, 0, 1, 2, 4, 2), DomainError);   // j < 2 tau + 1
  CHECK_THROWS_AS(hensel_lift(f1, 5, 1, 2, 5, 2), DomainError);   // f(1) != 5 mod 32
  CHECK_THROWS_AS(hensel_lift(f1, 24, 2, 2, 5, 2), DomainError);  // v_2(f'(2)) = 3
}

TEST_CASE("Cauchy-Davenport") {
  CHECK(cauchy_davenport_check({1, 2, 3}, {0, 1, 5}, 11).holds);
  CHECK(cauchy_davenport_check({0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5, 6}, 7).holds);
  CHECK_THROWS_AS(cauchy_davenport_check({1}, {0}, 8), DomainError);
}
