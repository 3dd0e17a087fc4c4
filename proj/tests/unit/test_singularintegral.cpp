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
#include <vector>

#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/singularintegral.hpp"

using namespace polywaring;

namespace {

constexpr double kGammaFiveQuarters = 0.9064024770554771;

// J_1(s, m) by repeated convolution of g(n) = n^{-3/4} / 4.
double j1_oracle(int s, int m) {
  std::vector<long double> g(m + 1, 0.0L), cur(m + 1, 0.0L);
  for (int n = 1; n <= m; ++n) g[n] = 0.25L * std::pow(static_cast<long double>(n), -0.75L);
  cur = g;
  for (int k = 2; k <= s; ++k) {
    std::vector<long double> next(m + 1, 0.0L);
    for (int a = 1; a <= m; ++a) {
      for (int b = 1; a + b <= m; ++b) next[a + b] += cur[a] * g[b];
    }
    cur = next;
  }
  return static_cast<double>(cur[m]);
}

Complex simpson(double c, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  auto f = [c](double t) { return std::polar(1.0, kTwoPi * c * t * t * t * t); };
  Complex acc = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("J1 closed values") {
  CHECK(j1_exact(2, 2) == doctest::Approx(1.0 / 16));
  CHECK(j1_exact(2, 3) == doctest::Approx(std::pow(2.0, -0.75) / 8));
  for (int s = 1; s <= 6; ++s) CHECK(j1_exact(s, s) == doctest::Approx(std::pow(4.0, -s)));
  CHECK(j1_exact(4, 3) == 0.0);
  for (int s : {2, 3, 5}) {
    for (int m : {s, 17, 60}) CHECK(j1_exact(s, m) == doctest::Approx(j1_oracle(s, m)).epsilon(1e-12));
  }
}

TEST_CASE("Gamma factor and main term") {
  CHECK(std::exp(std::lgamma(1.25)) == doctest::Approx(kGammaFiveQuarters).epsilon(1e-15));
  CHECK(gamma_factor(4, 1.0) == doctest::Approx(std::pow(kGammaFiveQuarters, 4)));
  CHECK(gamma_factor(8, 10.0) == doctest::Approx(std::pow(kGammaFiveQuarters, 8) * 10.0));
  MainTermParams p;
  p.A = 72;
  p.s = 17;
  p.m = 1e5;
  p.series_value = 0.7;
  CHECK(main_term(p) == doctest::Approx(0.7 * std::pow(24.0 / 72.0, 17 / 4.0) * gamma_factor(17, 1e5)));
  p.series_value = 0.0;
  CHECK(main_term(p) == 0.0);
  p.m = 0.5;
  CHECK_THROWS_AS(main_term(p), DomainError);
}

TEST_CASE("J1 approximation bound") {
  CHECK(j1_bound_check(2, 100).holds);
  // The bound m^{(s-1)/4 - 1} does not hold for s = 5 at m = 50.
  const auto r = j1_bound_check(5, 50);
  CHECK_FALSE(r.holds);
  CHECK(r.lhs / r.rhs == doctest::Approx(1.592).epsilon(1e-3));
  CHECK(j1_exact(5, 50) == doctest::Approx(0.20245704539082868).epsilon(1e-12));
  CHECK_THROWS_AS(j1_bound_check(3, 2), DomainError);
}

TEST_CASE("hypergeometric series and Beta approximation") {
  for (double z : {0.1, 0.5, -0.7, 0.9}) {
    CHECK(hypergeometric_2f1(1, 1, 2, z) == doctest::Approx(-std::log1p(-z) / z).epsilon(1e-12));
  }
  CHECK(hypergeometric_2f1(0.5, 0.5, 1.5, 0.25) == doctest::Approx(std::asin(0.5) / 0.5).epsilon(1e-12));
  CHECK_THROWS_AS(hypergeometric_2f1(1, 1, 2, 1.0), DomainError);
  for (double alpha : {0.25, 1.0, 2.5, 4.0}) {
    for (std::int64_t m : {2, 10, 1000}) CHECK(beta_approx_check(alpha, 0.25, m).holds);
  }
  CHECK_THROWS_AS(beta_approx_check(0.1, 0.25, 10), DomainError);
}

TEST_CASE("v_theta and v1_theta") {
  CHECK(v_theta(72, 10, 0.0) == Complex(9.0, 0.0));
  for (double theta : {1e-3, -2e-4, 3e-5}) {
    const auto v = v_theta(72, 8, theta);
    const auto ref = simpson(72 * theta / 24.0, 1.0, 8.0, 200000);
    CHECK(std::abs(v - ref) < 1e-8);
  }
  CHECK_THROWS_AS(v_theta(72, 8, 0.6), DomainError);
  Complex direct = 0;
  for (int n = 1; n <= 500; ++n) direct += 0.25 * std::pow(n, -0.75) * std::polar(1.0, kTwoPi * 0.137 * n);
  CHECK(std::abs(v1_theta(500, 0.137) - direct) < 1e-11);
  const auto batch = v1_theta_batch(500, {0.137, -0.2});
  CHECK(batch[0] == v1_theta(500, 0.137));
  CHECK(batch[1] == v1_theta(500, -0.2));
}
