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

#include "polywaring/bigint.hpp"
#include "polywaring/bound_check.hpp"
#include "polywaring/figurate.hpp"
#include "polywaring/numeric.hpp"

namespace polywaring {

struct PhaseSum {
  Complex value;
  std::int64_t terms = 0;
};

// S_{f,N}(alpha) = sum_{n<=N} e(alpha f(n)).
PhaseSum weyl_sum(const FigurateSpec& spec, std::int64_t N, double alpha);

// S_{f,N}(a/q + theta) with the a/q part reduced in integers.
Complex weyl_sum_shifted(const FigurateSpec& spec, std::int64_t N,
                         std::int64_t q, std::int64_t a, double theta);

// M(t) = sum_{n<=t} e(a f(n) / q).
Complex partial_sum_M(const FigurateSpec& spec, std::int64_t q, std::int64_t a,
                      std::int64_t t);

// V(q,a) = sum_{n<=24q} e(a f(n) / q).
Complex complete_sum_V(const FigurateSpec& spec, std::int64_t q, std::int64_t a);

// V(q) = sum_{(a,q)=1} (V(q,a)/24q)^s e(-am/q).
Complex v_of_q(const FigurateSpec& spec, std::int64_t q, int s, std::int64_t m);

// Exact integral of |S_{f,N}|^{2^j}, i.e. the number of solutions of
// f(u_1)+...+f(u_k) = f(v_1)+...+f(v_k) with k = 2^{j-1}, 1 <= u, v <= N.
BigInt mean_value(const FigurateSpec& spec, std::int64_t N, int j,
                  const Budget& budget = {});

// Closed-form upper bound for the 2^j-th moment, as a natural logarithm:
// N, 13 N^{2+4.2644/L}, 328 N^{5+8.5288/L}, 10^6 N^{12+12.7932/L} with
// L = log log N. Needs N >= 3 for j >= 2.
double mean_value_bound_log(std::int64_t N, int j);
BoundCheckReport mean_value_check(const FigurateSpec& spec, std::int64_t N,
                                  int j, const Budget& budget = {});

}  // namespace polywaring
