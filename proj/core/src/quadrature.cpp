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

#include "polywaring/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "polywaring/errors.hpp"

namespace polywaring {

const KronrodRule& kronrod15() {
  static const KronrodRule rule = [] {
    const double xgk[8] = {0.991455371120812639206854697526329,
                           0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926,
                           0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013,
                           0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245,
                           0.0};
    const double wgk[8] = {0.022935322010529224963732008058970,
                           0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518,
                           0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550,
                           0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649,
                           0.209482141084727828012999174891714};
    // Gauss weights on xgk[1], xgk[3], xgk[5], xgk[7].
    const double wg[4] = {0.129484966168869693270611432679082,
                          0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975,
                          0.417959183673469387755102040816327};
    KronrodRule r{};
    for (int i = 0; i < 7; ++i) {
      r.node[i] = -xgk[i];
      r.node[14 - i] = xgk[i];
      r.kronrod_weight[i] = r.kronrod_weight[14 - i] = wgk[i];
      const double g = (i % 2 == 1) ? wg[i / 2] : 0.0;
      r.gauss_weight[i] = r.gauss_weight[14 - i] = g;
    }
    r.node[7] = 0.0;
    r.kronrod_weight[7] = wgk[7];
    r.gauss_weight[7] = wg[3];
    return r;
  }();
  return rule;
}

namespace {

struct Panel {
  double lo, hi;
  Complex value;
  double error;
  bool operator<(const Panel& o) const {
    if (error != o.error) return error < o.error;
    return lo > o.lo;
  }
};

Panel evaluate_panel(const std::function<Complex(double)>& fn, double lo,
                     double hi) {
  const KronrodRule& r = kronrod15();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Complex k{}, g{};
  for (int i = 0; i < 15; ++i) {
    const Complex y = fn(mid + half * r.node[i]);
    k += r.kronrod_weight[i] * y;
    g += r.gauss_weight[i] * y;
  }
  k *= half;
  g *= half;
  return {lo, hi, k, std::abs(k - g)};
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& fn, double lo,
                           double hi, const QuadratureOptions& opts) {
  if (!(hi >= lo)) throw DomainError("integrate: need lo <= hi");
  QuadratureResult out;
  if (hi == lo) return out;
  const std::size_t n0 = std::max<std::size_t>(1, opts.initial_panels);
  std::priority_queue<Panel> heap;
  const double width = (hi - lo) / static_cast<double>(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = (i + 1 == n0) ? hi : lo + width * static_cast<double>(i + 1);
    heap.push(evaluate_panel(fn, a, b));
  }
  out.evaluations = 15 * n0;

  auto totals = [&heap](Complex& value, double& error) {
    // Recompute from scratch in a fixed order to avoid drift.
    std::vector<Panel> all;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    ComplexSum vs;
    CompensatedSum<double> es;
    for (const auto& p : all) {
      vs.add(p.value);
      es.add(p.error);
    }
    value = vs.value();
    error = es.value();
  };

  Complex value;
  double error = 0.0;
  totals(value, error);
  double running_error = error;
  while (true) {
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
    if (running_error <= target) break;
    if (heap.size() >= opts.max_panels) {
      out.converged = false;
      break;
    }
    // Split the worst panels in one batch.
    const std::size_t batch = std::max<std::size_t>(1, heap.size() / 8);
    for (std::size_t i = 0; i < batch && !heap.empty(); ++i) {
      const Panel worst = heap.top();
      const double mid = 0.5 * (worst.lo + worst.hi);
      if (!(mid > worst.lo && mid < worst.hi)) {
        out.converged = false;
        break;
      }
      heap.pop();
      heap.push(evaluate_panel(fn, worst.lo, mid));
      heap.push(evaluate_panel(fn, mid, worst.hi));
      out.evaluations += 30;
    }
    if (!out.converged) break;
    totals(value, error);
    running_error = error;
  }
  out.value = value;
  out.error = error;
  return out;
}

}  // namespace polywaring
