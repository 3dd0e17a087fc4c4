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

#include <map>
#include <random>

#include "oracle.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/repcount.hpp"

using namespace polywaring;

namespace {

// Counts ordered s-tuples by recursion over the value list.
void enumerate(const std::vector<std::int64_t>& vals, int s, std::int64_t partial,
               std::int64_t m_max, std::vector<std::int64_t>& out) {
  if (s == 0) {
    ++out[partial];
    return;
  }
  for (auto v : vals) {
    if (partial + v <= m_max) enumerate(vals, s - 1, partial + v, m_max, out);
  }
}

}  // namespace

TEST_CASE("values_upto") {
  const auto f1 = catalog("f1");
  CHECK(values_upto(f1, 1500) == std::vector<std::int64_t>{1, 24, 153, 544, 1425});
  CHECK(values_upto(f1, 0).empty());
  for (const auto& f : oracle::catalog()) CHECK(values_upto(f, 100000) == oracle::values(f, 100000));
}

TEST_CASE("DP and DFT match nested enumeration") {
  std::vector<FigurateSpec> specs = oracle::catalog();
  specs.push_back(make_spec(1, 0, 0, "A=1"));
  specs.push_back(make_spec(24, 0, 0, "toy"));
  specs.push_back(make_spec(2, -1, 1, "small"));
  for (const auto& f : specs) {
    for (int s = 1; s <= 4; ++s) {
      const std::int64_t m_max = 400;
      std::vector<std::int64_t> brute(m_max + 1, 0);
      enumerate(oracle::values(f, m_max), s, 0, m_max, brute);
      const auto dp = count_profile(f, s, m_max);
      const auto dft = count_profile_via_dft(f, s, m_max);
      REQUIRE(dp.size() == static_cast<std::size_t>(m_max + 1));
      for (std::int64_t m = 0; m <= m_max; ++m) {
        INFO(f.label, " s=", s, " m=", m);
        CHECK(dp.at(m) == BigInt(static_cast<long>(brute[m])));
        CHECK(dft[m] == BigInt(static_cast<long>(brute[m])));
      }
      for (std::int64_t m : {1, 25, 199, 400}) CHECK(count_via_dft(f, s, m) == dp.at(m));
    }
  }
}

TEST_CASE("representation counts") {
  const auto f1 = catalog("{3,4,3}");
  CHECK(count_representations(f1, 2, 25) == 2);
  CHECK(count_representations(f1, 17, 17) == 1);
  for (const auto& f : oracle::catalog()) {
    for (int s = 1; s <= 17; ++s) CHECK(count_representations(f, s, s) == 1);
    CHECK(count_representations(f, 3, 2) == 0);
  }
  // Cross-checked with an independent big-integer convolution.
  CHECK(count_representations(f1, 17, 100000) == BigInt("4902431322360"));
  CHECK(count_representations(f1, 17, 10000) == 0);
  CHECK(count_representations(f1, 17, 30000) == BigInt("2989546560"));
}

TEST_CASE("counts are exact beyond 64 bits") {
  // With A=1, B=C=0 f(n) = C(n,4) + n takes every value 1..4 as n = 1..4,
  // so a table of 1 + x + x^2 + ... grows like compositions.
  const auto unit = make_spec(1, 0, 0);
  const auto big = count_representations(unit, 60, 240);
  CHECK(big > BigInt("18446744073709551616"));
  const auto half = count_profile(unit, 30, 240);
  BigInt conv = 0;
  for (std::int64_t k = 0; k <= 240; ++k) conv += half.at(k) * half.at(240 - k);
  CHECK(conv == big);
}

TEST_CASE("convolve truncates") {
  std::vector<BigInt> x = {1, 2, 3};
  std::vector<BigInt> y = {4, 5};
  const auto z = convolve(x, y, 3);
  REQUIRE(z.size() == 3);
  CHECK(z[0] == 4);
  CHECK(z[1] == 13);
  CHECK(z[2] == 22);
}

TEST_CASE("budget and domain guards") {
  const auto f1 = catalog("f1");
  CHECK_THROWS_AS(count_representations(f1, 17, 100000, Budget{1000}), BudgetExceeded);
  CHECK_THROWS_AS(count_representations(f1, 0, 10), DomainError);
  CHECK_THROWS_AS(count_via_dft(f1, 17, 10000000), DomainError);
}
