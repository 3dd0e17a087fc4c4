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
#include <numeric>

#include "oracle.hpp"
#include "polywaring/arcs.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/repcount.hpp"

using namespace polywaring;

namespace {

// Tuples in [1,N]^s with f-sum = m, via the discrete Fourier transform on L > s f(N) points.
double circle_oracle(const FigurateSpec& f, int s, std::int64_t m, std::int64_t N) {
  const std::int64_t L = s * oracle::figurate(f, N) + 1;
  Complex total = 0;
  for (std::int64_t j = 0; j < L; ++j) {
    Complex F = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
      F += std::polar(1.0, kTwoPi * static_cast<double>(oracle::mod(oracle::figurate(f, n) * j, L)) / L);
    }
    total += std::pow(F, s) * std::polar(1.0, -kTwoPi * static_cast<double>(oracle::mod(m * j, L)) / L);
  }
  return total.real() / static_cast<double>(L);
}

}  // namespace

TEST_CASE("integer fourth root") {
  for (std::int64_t r = 0; r <= 3000; ++r) {
    const i128 x = static_cast<i128>(r) * r * r * r;
    CHECK(integer_fourth_root(x) == r);
    if (r > 0) CHECK(integer_fourth_root(x - 1) == r - 1);
    if (r > 1) CHECK(integer_fourth_root(x + 1) == r);
  }
  const i128 big = static_cast<i128>(3037000499LL) * 3037000499LL;
  CHECK(integer_fourth_root(big * big) == 3037000499LL);
  CHECK(integer_fourth_root(big * big - 1) == 3037000498LL);
}

TEST_CASE("choosing N") {
  CHECK(choose_N(72, 10000) == 9);
  for (std::int64_t m = 1; m <= 5000; m += 37) {
    const std::int64_t N = choose_N(72, m);
    // N exceeds every index with f1(n) <= m.
    CHECK(oracle::figurate(catalog("f1"), N) > m);
  }
}

TEST_CASE("optimal delta") {
  CHECK(optimal_delta(17) == Rational{73, 372});
  CHECK(optimal_delta(9) == Rational{73, 300});
  CHECK_THROWS_AS(optimal_delta(8), DomainError);
}

TEST_CASE("dissection enumerates Farey fractions") {
  const Rational delta{73, 372};
  const auto d = dissect(1000000, delta);
  CHECK(d.P == doctest::Approx(15.046).epsilon(1e-4));
  CHECK(d.arcs.size() == 72);
  CHECK(d.halfwidth == doctest::Approx(std::pow(1e6, 73.0 / 372 - 4)));
  for (std::int64_t N : {2, 50, 4096, 99991}) {
    const auto dd = dissect(N, delta);
    std::size_t count = 0;
    for (std::int64_t q = 1; static_cast<double>(q) <= std::pow(static_cast<double>(N), 73.0 / 372); ++q) {
      for (std::int64_t a = 1; a <= q; ++a) count += std::gcd(a, q) == 1;
    }
    CHECK(dd.arcs.size() == count);
    CHECK(std::is_sorted(dd.arcs.begin(), dd.arcs.end(),
                         [](const MajorArc& x, const MajorArc& y) { return x.center < y.center; }));
    for (const auto& arc : dd.arcs) CHECK(arc.center == doctest::Approx(static_cast<double>(arc.a) / arc.q));
    CHECK(dissection_disjoint(dd));
  }
}

TEST_CASE("overlapping arcs are detected") {
  auto d = dissect(1000, Rational{73, 372});
  CHECK(dissection_disjoint(d));
  // A fraction within 1e-12 of 1/2 overlaps its neighbour.
  const MajorArc close{1000000000000, 500000000001, 0.500000000001};
  const auto pos = std::upper_bound(d.arcs.begin(), d.arcs.end(), close,
                                    [](const MajorArc& x, const MajorArc& y) { return x.center < y.center; });
  d.arcs.insert(pos, close);
  CHECK_FALSE(dissection_disjoint(d));
}

TEST_CASE("major plus minor arcs reproduce the count") {
  const auto f1 = catalog("f1");
  const Rational delta{73, 372};
  for (std::int64_t m : {3, 26, 49, 72}) {
    const std::int64_t N = choose_N(f1.A, m);
    const auto d = dissect(N, delta);
    const auto major = major_arc_integral(f1, 3, m, d);
    const auto minor = minor_arc_integral(f1, 3, m, d);
    const double total = (major.value + minor.value).real();
    const double exact = count_representations(f1, 3, m).get_d();
    CHECK(total == doctest::Approx(exact).epsilon(1e-6));
    CHECK(circle_oracle(f1, 3, m, N) == doctest::Approx(exact).epsilon(1e-9));
    CHECK(std::abs((major.value + minor.value).imag()) < 1e-6 * std::max(1.0, exact));
  }
}

TEST_CASE("partial sums and the approximation chain") {
  for (const auto& f : oracle::catalog()) {
    for (std::int64_t q = 1; q <= 10; ++q) {
      for (std::int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) == 1) CHECK(partial_sum_approx_check(f, q, a, 2000).holds);
      }
    }
  }
  const auto f1 = catalog("f1");
  const auto r = approx_chain_check(f1, 3, 1, 1e-9, 40);
  CHECK(r.context.find("hypothesis-unmet") != std::string::npos);
  CHECK(r.context.find("[N >= 6A + 4|B|]") != std::string::npos);
  const auto big = approx_chain_check(f1, 3, 2, 1e-13, 800);
  CHECK(big.context.find("hypothesis-unmet") == std::string::npos);
  CHECK(big.holds);
}

TEST_CASE("asymptotic report") {
  const auto f1 = catalog("f1");
  ReportOptions o;
  o.prime_limit = 30;
  const auto r = asymptotic_report(f1, 17, 100000, o);
  REQUIRE(r.exact_count);
  CHECK(*r.exact_count == BigInt("4902431322360"));
  CHECK(r.N == choose_N(72, 100000));
  CHECK(r.delta == Rational{73, 372});
  CHECK(r.main_term > 0.0);
  CHECK(r.ratio == doctest::Approx(r.exact_count->get_d() / r.main_term));
  const auto z = asymptotic_report(f1, 17, 10000, o);
  CHECK(*z.exact_count == 0);
  CHECK(z.ratio == 0.0);
  CHECK_THROWS_AS(asymptotic_report(f1, 17, 0, o), DomainError);
}
