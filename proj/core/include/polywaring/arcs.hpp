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
#include <optional>
#include <string>
#include <vector>

#include "polywaring/bigint.hpp"
#include "polywaring/bound_check.hpp"
#include "polywaring/figurate.hpp"
#include "polywaring/quadrature.hpp"
#include "polywaring/singularseries.hpp"

namespace polywaring {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct MajorArc {
  std::int64_t q = 1;
  std::int64_t a = 1;
  double center = 1.0;
};

struct ArcDissection {
  std::int64_t N = 0;
  Rational delta;
  double P = 1.0;
  double halfwidth = 0.0;  // N^{delta - 4}
  std::vector<MajorArc> arcs;  // sorted by center
};

// floor(x^{1/4}).
std::int64_t integer_fourth_root(i128 x);
// ceil((24m/A)^{1/4}) + 1.
std::int64_t choose_N(std::int64_t A, i128 m);

Rational optimal_delta(int s);

ArcDissection dissect(std::int64_t N, Rational delta);
// Exact check that neighbouring arcs (including the wrap at 0 = 1) are
// separated.
bool dissection_disjoint(const ArcDissection& d);

struct ArcIntegral {
  Complex value;
  double error = 0.0;
};

ArcIntegral major_arc_integral(const FigurateSpec& spec, int s, std::int64_t m,
                               const ArcDissection& d, double tol = 0.0);
// Integral over the gaps between the major arcs.
ArcIntegral minor_arc_integral(const FigurateSpec& spec, int s, std::int64_t m,
                               const ArcDissection& d, double tol = 0.0);

// Hypotheses the caller did not meet are listed in the context text.
BoundCheckReport approx_chain_check(const FigurateSpec& spec, std::int64_t q,
                                    std::int64_t a, double theta,
                                    std::int64_t N, Rational delta = {73, 372});
// max over sampled t of |M(t) - V(q,a) t / 24q| against 24q.
BoundCheckReport partial_sum_approx_check(const FigurateSpec& spec,
                                          std::int64_t q, std::int64_t a,
                                          std::int64_t t_max);

// log of the minor-arc bound
//   10^6 11^{s-16} A^{(s-16)/8} (log N)^{(s-16)/8} N^{s-4-delta(s-16)/8+s/loglogN}.
double minor_arc_bound_log(std::int64_t A, int s, std::int64_t N,
                           Rational delta);

struct ReportOptions {
  std::optional<Rational> delta;  // default optimal_delta(s), or 73/372
  std::int64_t prime_limit = 50;
  std::int64_t series_Q = 50;  // truncation point of the q-series
  bool compute_exact = true;
  bool compute_major = true;
  std::int64_t major_N_limit = 60;
  double quad_tol = 0.0;
  Budget budget;
};

struct ComparisonReport {
  std::string spec;
  std::int64_t m = 0;
  int s = 0;
  std::int64_t N = 0;
  Rational delta;
  std::optional<BigInt> exact_count;
  std::optional<double> major_value;
  double major_error = 0.0;
  double major_imag = 0.0;
  double main_term = 0.0;
  std::optional<double> minor_residual;
  double ratio = 0.0;
  SeriesEstimate series;
  std::vector<BoundCheckReport> bound_checks;
  std::vector<std::string> notes;

  bool checks_passed() const;
};

ComparisonReport asymptotic_report(const FigurateSpec& spec, int s,
                                   std::int64_t m,
                                   const ReportOptions& opts = {});

}  // namespace polywaring
