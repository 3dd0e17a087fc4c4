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

#include <cstddef>
#include <functional>

#include "polywaring/numeric.hpp"

namespace polywaring {

struct QuadratureResult {
  Complex value;
  double error = 0.0;  // estimated absolute error
  std::size_t evaluations = 0;
  bool converged = true;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  // Initial uniform panels; callers pass roughly one panel per oscillation.
  std::size_t initial_panels = 1;
  std::size_t max_panels = 1u << 22;
};

// Adaptive 7/15-point Gauss-Kronrod integration of a complex integrand on
// [lo, hi]. Panels are refined globally by largest error until the summed
// estimate meets the tolerance or max_panels is reached.
QuadratureResult integrate(const std::function<Complex(double)>& fn,
                           double lo, double hi,
                           const QuadratureOptions& opts = {});

// The 15 Kronrod nodes on [-1, 1] with their Kronrod and embedded Gauss
// weights (Gauss weight is zero on the Kronrod-only nodes).
struct KronrodRule {
  double node[15];
  double kronrod_weight[15];
  double gauss_weight[15];
};
const KronrodRule& kronrod15();

}  // namespace polywaring
