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
#include <vector>

#include "polywaring/bound_check.hpp"
#include "polywaring/numeric.hpp"

namespace polywaring {

struct MainTermParams {
  std::int64_t A = 1;
  int s = 2;
  double m = 1.0;
  double series_value = 1.0;
};

// v(theta) = int_1^N e(A theta t^4 / 24) dt.
Complex v_theta(std::int64_t A, std::int64_t N, double theta,
                double abs_tol = 0.0);

// v_1(theta) = (1/4) sum_{n <= N0} n^{-3/4} e(theta n).
Complex v1_theta(std::int64_t N0, double theta);
std::vector<Complex> v1_theta_batch(std::int64_t N0,
                                    const std::vector<double>& thetas);

// J_1(m, s) = 4^{-s} sum_{n_1+...+n_s = m} (n_1 ... n_s)^{-3/4}.
double j1_exact(int s, std::int64_t m);
// J_1(k, s) for 0 <= k <= m_max.
std::vector<double> j1_profile(int s, std::int64_t m_max);

// Gamma(5/4)^s / Gamma(s/4) * m^{s/4 - 1}.
double gamma_factor(int s, double m);
double main_term(const MainTermParams& params);

BoundCheckReport beta_approx_check(double alpha, double beta, std::int64_t m);
// 2F1(a, b; c; z) by its power series, |z| < 1.
double hypergeometric_2f1(double a, double b, double c, double z);

BoundCheckReport j1_bound_check(int s, std::int64_t m);

}  // namespace polywaring
