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
#include <random>
#include <vector>

#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/weylbounds.hpp"

using namespace polywaring;

namespace {

double psi(const QuarticPhase& p, double x) {
  return p.alpha[0] * x + p.alpha[1] * x * x + p.alpha[2] * x * x * x + p.alpha[3] * x * x * x * x;
}

// Literal |F|^{2^j} <= (2X)^{2^j-j-1} sum_h |sum_{x in T_j(h)} e(Delta_j)| with
// T_j(h) = {x : every shifted point x + sum_{i in S} h_i lies in [1, X]}.
double literal_rhs(const QuarticPhase& p, std::int64_t X, int j) {
  std::vector<std::int64_t> h(j, 0);
  double total = 0.0;
  auto phase_of = [&](std::int64_t x) {
    double acc = 0.0;
    for (int mask = 0; mask < (1 << j); ++mask) {
      std::int64_t y = x;
      for (int i = 0; i < j; ++i) {
        if (mask & (1 << i)) y += h[i];
      }
      if (y < 1 || y > X) return std::nan("");
      const int sign = ((j - __builtin_popcount(mask)) % 2 == 0) ? 1 : -1;
      acc += sign * psi(p, static_cast<double>(y));
    }
    return acc;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == j) {
      Complex inner = 0;
      for (std::int64_t x = 1; x <= X; ++x) {
        const double ph = phase_of(x);
        if (!std::isnan(ph)) inner += std::polar(1.0, kTwoPi * ph);
      }
      total += inner.real();
      return;
    }
    for (std::int64_t v = -(X - 1); v <= X - 1; ++v) {
      h[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return std::pow(2.0 * X, std::pow(2.0, j) - j - 1) * total;
}

}  // namespace

TEST_CASE("forward differences") {
  QuarticPhase p{{0.3, -1.1, 0.25, 0.7}};
  const auto c = p.coefficients();
  REQUIRE(c.size() == 5);
  CHECK(c[0] == 0.0);
  CHECK(c[4] == 0.7);
  for (double x : {-2.0, 0.5, 3.0}) CHECK(p(x) == doctest::Approx(psi(p, x)));
  const std::vector<double> h1 = {2.0};
  CHECK(forward_difference(c, h1, 1.5) == doctest::Approx(psi(p, 3.5) - psi(p, 1.5)));
  const std::vector<double> h3 = {1.0, -2.0, 3.0};
  const auto poly = forward_difference_polynomial(c, h3);
  // Delta_3 of a quartic is linear in x with slope 24 h1 h2 h3 a4.
  CHECK(poly.at(1) == doctest::Approx(24 * 1.0 * -2.0 * 3.0 * 0.7));
  for (std::size_t k = 2; k < poly.size(); ++k) CHECK(std::abs(poly[k]) < 1e-12);
  for (double x : {0.0, 1.0, 4.5}) {
    double val = 0, pw = 1;
    for (double co : poly) {
      val += co * pw;
      pw *= x;
    }
    CHECK(forward_difference(c, h3, x) == doctest::Approx(val));
  }
}

TEST_CASE("Weyl differencing against the literal definition") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    QuarticPhase p{{u(rng), u(rng), u(rng), u(rng)}};
    for (int j = 1; j <= 3; ++j) {
      const std::int64_t X = j == 3 ? 7 : 15;
      const auto r = check_weyl_differencing(p, X, j);
      CHECK(r.holds);
      CHECK(r.rhs == doctest::Approx(literal_rhs(p, X, j)).epsilon(1e-9));
      Complex F = 0;
      for (std::int64_t x = 1; x <= X; ++x) F += std::polar(1.0, kTwoPi * psi(p, static_cast<double>(x)));
      CHECK(r.lhs == doctest::Approx(std::pow(std::abs(F), std::pow(2.0, j))).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(check_weyl_differencing(QuarticPhase{}, 61, 1), DomainError);
  CHECK_THROWS_AS(check_weyl_differencing(QuarticPhase{}, 10, 4), DomainError);
}

TEST_CASE("geometric and reciprocal sums") {
  for (double alpha : {0.5, 0.01, 1.0 / 3, 2.7182818}) {
    const auto r = check_geometric_sum(alpha, 3.5, 200.0);
    CHECK(r.holds);
    Complex acc = 0;
    for (int x = 4; x <= 203; ++x) acc += std::polar(1.0, kTwoPi * alpha * x);
    CHECK(r.lhs == doctest::Approx(std::abs(acc)).epsilon(1e-9));
  }
  CHECK(check_geometric_sum(1.0, 0.0, 10.0).lhs == doctest::Approx(10.0));
  CHECK(sweep_reciprocal_sum(3, 50).failures == 0);
  CHECK(sweep_F_alpha_bound(3, 20).failures == 0);
}

TEST_CASE("divisor function and bound") {
  const auto sieve = divisor_sieve(5000);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    std::int64_t d = 0;
    for (std::int64_t k = 1; k <= n; ++k) d += n % k == 0;
    CHECK(sieve[n] == d);
    CHECK(divisor_count(n) == d);
  }
  CHECK(divisor_count(720720) == 240);
  CHECK(divisor_bound_check(720720).holds);
  CHECK_THROWS_AS(divisor_bound_check(20), DomainError);
  const auto sw = divisor_bound_sweep(21, 100000);
  CHECK(sw.failures == 0);
  CHECK(sw.checked == 100000 - 20);
}

TEST_CASE("seeded sweeps are reproducible") {
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 5) == derive_seed(42, 5));
  const auto a = sweep_weyl_differencing(42, 40, 20);
  const auto b = sweep_weyl_differencing(42, 40, 20);
  CHECK(a.failures == 0);
  CHECK(a.worst_ratio == b.worst_ratio);
  CHECK(b.instances == 40);
  CHECK(sweep_geometric_sum(1, 200).failures == 0);
}
