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

#include "polywaring/bound_check.hpp"
#include "polywaring/figurate.hpp"
#include "polywaring/numeric.hpp"

namespace polywaring {

enum class Positivity { kCertifiedHeuristic, kIndeterminate };
std::string to_string(Positivity verdict);

struct SeriesEstimate {
  double truncated = 0.0;
  double imag_residue = 0.0;
  std::int64_t Q = 0;
  double euler_estimate = 1.0;
  std::vector<std::pair<std::int64_t, double>> per_prime;
  double tail_log = 0.0;
  // The tail bound is proved only for astronomically large Q.
  bool tail_hypothesis_met = false;
  Positivity positivity = Positivity::kIndeterminate;
  std::vector<std::string> notes;
};

// sum_{q <= Q} V(q), accumulated in ascending q.
SeriesEstimate truncated_series(const FigurateSpec& spec, int s,
                                std::int64_t m, std::int64_t Q);
// The individual V(q) for 1 <= q <= Q (entry 0 unused).
std::vector<Complex> series_terms(const FigurateSpec& spec, int s,
                                  std::int64_t m, std::int64_t Q);

// sum_{d | q} V(d) against q^{1-s} 24^{-s} M_m(24q, q), absolute 1e-8.
BoundCheckReport divisor_sum_identity_check(const FigurateSpec& spec, int s,
                                            std::int64_t m, std::int64_t q);

// prod_{p <= prime_limit} T_m(p); verdict compares against
// truncated_series at Q = prime_limit (10% relative).
SeriesEstimate euler_product(const FigurateSpec& spec, int s, std::int64_t m,
                             std::int64_t prime_limit, int k_max = 0);

// log of (52 A^{1/4})^s / ((9s/73 - 2) Q^{9s/73 - 2}).
double tail_bound_log(std::int64_t A, int s, double Q);

// Display-only record of the lower bound
//   2^{z^2/(146-9s)} exp((12 tau + 1.03 z)(1 - s)),
//   z = (2 e^{s e^{932}} + 1)^{73/(9s-21)}.
struct LowerBoundRecord {
  int s = 0;
  int tau = 0;
  bool includes_tau = true;
  double log_log_z = 0.0;
  // log log(-log bound); the bound itself is far below any float.
  double log_log_neg_log_bound = 0.0;
  std::string display;
};
LowerBoundRecord lower_bound_record(std::int64_t A, int s, int tau);
LowerBoundRecord lower_bound_record_catalog(std::int64_t A, int s);

}  // namespace polywaring
