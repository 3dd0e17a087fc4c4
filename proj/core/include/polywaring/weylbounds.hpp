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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "polywaring/bound_check.hpp"
#include "polywaring/numeric.hpp"

namespace polywaring {

// psi(x) = a1 x + a2 x^2 + a3 x^3 + a4 x^4.
struct QuarticPhase {
  std::array<double, 4> alpha{};

  double operator()(double x) const;
  std::vector<double> coefficients() const;  // constant term first
};

// Iterated forward difference of the polynomial with the given coefficients
// (constant term first): Delta_1(psi; h)(x) = psi(x + h) - psi(x).
double forward_difference(std::span<const double> coefficients,
                          std::span<const double> shifts, double x);

// Coefficients of Delta_j(psi; h) as a polynomial in x.
std::vector<double> forward_difference_polynomial(
    std::span<const double> coefficients, std::span<const double> shifts);

// |F(psi)|^{2^j} against (2X)^{2^j - j - 1} sum_h |sum_{x in T_j(h)} e(Delta_j)|,
// F(psi) = sum_{1<=x<=X} e(psi(x)). Requires X <= 60.
BoundCheckReport check_weyl_differencing(const QuarticPhase& phase,
                                         std::int64_t X, int j);

// |sum_{X<x<=X+Y} e(alpha x)| <= min(Y + 1, 1/(2||alpha||)).
BoundCheckReport check_geometric_sum(double alpha, double X, double Y);

BoundCheckReport check_reciprocal_sum(double alpha, double beta, double X,
                                      double Y, std::int64_t a, std::int64_t q,
                                      double eta);

// d(n) <= n^{1.0661 / log log n} for n >= 21.
BoundCheckReport divisor_bound_check(std::int64_t n);
std::int64_t divisor_count(std::int64_t n);
// d(n) for 0 <= n <= limit by a sieve (entry 0 is 0).
std::vector<std::uint32_t> divisor_sieve(std::int64_t limit);

struct DivisorSweep {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::int64_t first_failure = 0;
  double max_ratio = 0.0;  // max d(n) / bound
  std::int64_t argmax = 0;
};
DivisorSweep divisor_bound_sweep(std::int64_t lo, std::int64_t hi);

BoundCheckReport check_F_alpha_bound(const QuarticPhase& phase, std::int64_t X,
                                     std::int64_t a, std::int64_t q,
                                     double eta);

// Seeded random sweeps; instance i uses a seed derived from (master, i).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct SweepSummary {
  std::uint64_t master_seed = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double worst_ratio = 0.0;  // max lhs / rhs
  std::vector<BoundCheckReport> failed;
};
SweepSummary sweep_weyl_differencing(std::uint64_t master_seed,
                                     std::size_t instances, std::int64_t max_X);
SweepSummary sweep_geometric_sum(std::uint64_t master_seed,
                                 std::size_t instances);
SweepSummary sweep_reciprocal_sum(std::uint64_t master_seed,
                                  std::size_t instances);
SweepSummary sweep_F_alpha_bound(std::uint64_t master_seed,
                                 std::size_t instances);

}  // namespace polywaring
