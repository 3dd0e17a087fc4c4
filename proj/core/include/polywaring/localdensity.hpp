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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polywaring/bigint.hpp"
#include "polywaring/bound_check.hpp"
#include "polywaring/figurate.hpp"

namespace polywaring {

// counts[r] = #{1 <= n <= t : f(n) = r mod q}.
struct ResidueDistribution {
  std::int64_t modulus = 1;
  std::int64_t t = 0;
  std::vector<std::int64_t> counts;
};

ResidueDistribution residue_distribution(const FigurateSpec& spec,
                                         std::int64_t t, std::int64_t q);

inline constexpr std::int64_t kExactModulusLimit = 5000;

// The s-fold cyclic self-convolution of the distribution (exact).
std::vector<BigInt> congruence_profile(const FigurateSpec& spec, int s,
                                       std::int64_t t, std::int64_t q,
                                       const Budget& budget = {});

// M_m(t, q): s-tuples in [1,t]^s with f(n_1)+...+f(n_s) = m mod q.
BigInt count_congruence(const FigurateSpec& spec, int s, std::int64_t m,
                        std::int64_t t, std::int64_t q,
                        const Budget& budget = {});

// M_m(24q, q) == 24^s M_m(q, q), compared exactly.
BoundCheckReport scaling_identity_check(const FigurateSpec& spec, int s,
                                        std::int64_t m, std::int64_t q);

// Solutions mod p whose first coordinate has p not dividing f(n_1), f'(n_1).
BigInt nonsingular_count(const FigurateSpec& spec, int s, std::int64_t m,
                         std::int64_t p);

enum class DensityPath { kAuto, kExact, kFloat };

struct DensityValue {
  double value = 0.0;
  double error = 0.0;  // 0 on the exact path
  bool exact = false;
};

// rho_k = p^{k(1-s)} 24^{-s} M_m(24 p^k, p^k).
DensityValue local_density_value(const FigurateSpec& spec, int s,
                                 std::int64_t m, std::int64_t p, int k,
                                 DensityPath path = DensityPath::kAuto);
double local_density(const FigurateSpec& spec, int s, std::int64_t m,
                     std::int64_t p, int k,
                     DensityPath path = DensityPath::kAuto);

struct DensityReport {
  std::int64_t p = 0;
  std::vector<std::pair<int, double>> levels;
  bool stabilized = false;
  double estimate = 0.0;
  double lower_bound = 0.0;  // 0 when no bound applies
  bool lower_bound_violated = false;
};

// k_max = 0 picks the largest k with p^k on the exact path (at least 2).
DensityReport local_density_limit(const FigurateSpec& spec, int s,
                                  std::int64_t m, std::int64_t p,
                                  int k_max = 0, double tol = 1e-9);

// min_y v_p(f'(y)) over 1 <= y <= search_bound, computed as
// v_p(12 f'(y)) - v_p(12). search_bound = 0 selects max(p^3, 24p).
int valuation_tau(const FigurateSpec& spec, std::int64_t p,
                  std::int64_t search_bound = 0);

// All b mod p^{j+1} with b = a mod p^{j-tau} and f(b) = c mod p^{j+1}.
std::vector<std::int64_t> hensel_lift(const FigurateSpec& spec, i128 c,
                                      std::int64_t a, std::int64_t p, int j,
                                      int tau);

// min(q, |A| + |B| - 1) <= |A + B| for residue sets modulo a prime q.
BoundCheckReport cauchy_davenport_check(const std::vector<std::int64_t>& A,
                                        const std::vector<std::int64_t>& B,
                                        std::int64_t q);

}  // namespace polywaring
