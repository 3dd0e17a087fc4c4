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

#include "polywaring/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "polywaring/errors.hpp"
#include "polywaring/expsums.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/parallel.hpp"
#include "polywaring/repcount.hpp"
#include "polywaring/singularintegral.hpp"

namespace polywaring {
namespace {

BigInt pow_big(const BigInt& base, std::int64_t exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

void require_delta(Rational delta) {
  if (delta.den <= 0 || delta.num <= 0 || delta.num >= delta.den) {
    throw DomainError("delta must be a rational in (0, 1)");
  }
}

double default_tolerance(std::int64_t N, int s, double length) {
  // Integrand magnitude is at most N^s.
  return 1e-11 * std::pow(static_cast<double>(N), s) * std::max(length, 1e-300) + 1e-300;
}

std::string delta_text(Rational d) {
  return std::to_string(d.num) + "/" + std::to_string(d.den);
}

}  // namespace

std::int64_t integer_fourth_root(i128 x) {
  if (x < 0) throw DomainError("fourth root of a negative number");
  if (x < 1) return 0;
  // Newton on integers from an overestimate.
  auto r = static_cast<i128>(std::pow(static_cast<long double>(x), 0.25L)) + 2;
  while (true) {
    const i128 r3 = r * r * r;
    const i128 next = (3 * r + x / r3) / 4;
    if (next >= r) break;
    r = next;
  }
  auto fourth = [](i128 v) { return static_cast<u128>(v) * v * v * v; };
  while (r > 0 && fourth(r) > static_cast<u128>(x)) --r;
  while (fourth(r + 1) <= static_cast<u128>(x)) ++r;
  return static_cast<std::int64_t>(r);
}

std::int64_t choose_N(std::int64_t A, i128 m) {
  if (A < 1) throw DomainError("choose_N needs A >= 1");
  if (m < 1) throw DomainError("choose_N needs m >= 1");
  const i128 y = 24 * m;
  const i128 c = (y + A - 1) / A;  // r^4 >= c  <=>  A r^4 >= 24m
  std::int64_t r = integer_fourth_root(c);
  const i128 rr = r;
  if (rr * rr * rr * rr < c) ++r;
  return r + 1;
}

Rational optimal_delta(int s) {
  if (s < 9) throw DomainError("optimal_delta needs s >= 9");
  const std::int64_t num = 73, den = 219 + 9 * static_cast<std::int64_t>(s);
  const std::int64_t g = gcd(num, den);
  return {num / g, den / g};
}

ArcDissection dissect(std::int64_t N, Rational delta) {
  require_delta(delta);
  if (N < 2) throw DomainError("dissect needs N >= 2");
  const BigInt Nb(static_cast<long>(N));
  // N^{3 delta - 4} < 1/2  <=>  2^den N^{3 num} < N^{4 den}.
  const BigInt lhs = pow_big(2, delta.den) * pow_big(Nb, 3 * delta.num);
  if (!(lhs < pow_big(Nb, 4 * delta.den))) {
    throw DomainError("dissect needs N^{3 delta - 4} < 1/2");
  }
  ArcDissection d;
  d.N = N;
  d.delta = delta;
  const double Nd = static_cast<double>(N);
  d.P = std::pow(Nd, delta.value());
  d.halfwidth = std::pow(Nd, delta.value() - 4.0);
  const BigInt bound = pow_big(Nb, delta.num);
  for (std::int64_t q = 1; pow_big(BigInt(static_cast<long>(q)), delta.den) <= bound; ++q) {
    for (std::int64_t a = 1; a <= q; ++a) {
      if (gcd(a, q) == 1) d.arcs.push_back({q, a, static_cast<double>(a) / q});
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end(), [](const MajorArc& x, const MajorArc& y) {
    return static_cast<i128>(x.a) * y.q < static_cast<i128>(y.a) * x.q;
  });
  return d;
}

bool dissection_disjoint(const ArcDissection& d) {
  if (d.arcs.empty()) return true;
  const BigInt Nb(static_cast<long>(d.N));
  const BigInt n_num = pow_big(Nb, d.delta.num);
  const BigInt n_4den = pow_big(Nb, 4 * d.delta.den);
  // Centres a/q < a'/q' are separated iff 2 q q' N^delta < |a q' - a' q| N^4.
  auto separated = [&](std::int64_t a, std::int64_t q, std::int64_t a2,
                       std::int64_t q2) {
    const i128 gap = static_cast<i128>(a2) * q - static_cast<i128>(a) * q2;
    if (gap <= 0) return false;
    const BigInt left = pow_big(to_bigint(2 * static_cast<i128>(q) * q2), d.delta.den) * n_num;
    const BigInt right = pow_big(to_bigint(gap), d.delta.den) * n_4den;
    return left < right;
  };
  for (std::size_t i = 0; i + 1 < d.arcs.size(); ++i) {
    const auto& x = d.arcs[i];
    const auto& y = d.arcs[i + 1];
    if (!separated(x.a, x.q, y.a, y.q)) return false;
  }
  // Wrap-around: the arc at 1 against the first arc shifted by one period.
  const auto& first = d.arcs.front();
  const auto& last = d.arcs.back();
  return separated(last.a - last.q, last.q, first.a, first.q);
}

ArcIntegral major_arc_integral(const FigurateSpec& spec, int s, std::int64_t m,
                               const ArcDissection& d, double tol) {
  if (s < 1) throw DomainError("major arc integral needs s >= 1");
  const double w = d.halfwidth;
  const auto f_N = static_cast<double>(eval(spec, d.N));
  std::vector<ArcIntegral> parts(d.arcs.size());
  parallel_for(d.arcs.size(), [&](std::size_t i) {
    const auto& arc = d.arcs[i];
    const Complex shift = unit_phase(-static_cast<i128>(arc.a) * m % arc.q, arc.q);
    const double cycles = 2.0 * w * (s * f_N + static_cast<double>(m));
    QuadratureOptions opts;
    opts.abs_tol = tol > 0.0 ? tol / static_cast<double>(d.arcs.size())
                             : default_tolerance(d.N, s, 2.0 * w);
    opts.rel_tol = 0.0;
    opts.initial_panels = static_cast<std::size_t>(4.0 + 4.0 * cycles);
    const auto r = integrate(
        [&](double theta) {
          const Complex S = weyl_sum_shifted(spec, d.N, arc.q, arc.a, theta);
          return ipow(S, static_cast<unsigned>(s)) * shift *
                 unit_phase(frac_mul(-theta, m));
        },
        -w, w, opts);
    if (!r.converged) throw NumericFailure("major arc quadrature did not converge");
    parts[i] = {r.value, r.error};
  });
  ArcIntegral out;
  ComplexSum acc;
  for (const auto& p : parts) {
    acc.add(p.value);
    out.error += p.error;
  }
  out.value = acc.value();
  return out;
}

ArcIntegral minor_arc_integral(const FigurateSpec& spec, int s, std::int64_t m,
                               const ArcDissection& d, double tol) {
  if (s < 1) throw DomainError("minor arc integral needs s >= 1");
  const double w = d.halfwidth;
  // Gaps of (w, 1 + w] between consecutive arcs; the last arc is centred at 1.
  std::vector<std::pair<double, double>> gaps;
  double left = w;
  for (const auto& arc : d.arcs) {
    const double right = arc.center - w;
    if (right > left) gaps.emplace_back(left, right);
    left = arc.center + w;
  }
  const auto f_N = static_cast<double>(eval(spec, d.N));
  std::vector<ArcIntegral> parts(gaps.size());
  parallel_for(gaps.size(), [&](std::size_t i) {
    const auto [lo, hi] = gaps[i];
    const double cycles = (hi - lo) * (s * f_N + static_cast<double>(m));
    QuadratureOptions opts;
    opts.abs_tol = tol > 0.0 ? tol * (hi - lo) : default_tolerance(d.N, s, hi - lo);
    opts.rel_tol = 0.0;
    opts.initial_panels = static_cast<std::size_t>(4.0 + 4.0 * cycles);
    const auto r = integrate(
        [&](double alpha) {
          const Complex S = weyl_sum(spec, d.N, alpha).value;
          return ipow(S, static_cast<unsigned>(s)) * unit_phase(frac_mul(-alpha, m));
        },
        lo, hi, opts);
    if (!r.converged) throw NumericFailure("minor arc quadrature did not converge");
    parts[i] = {r.value, r.error};
  });
  ArcIntegral out;
  ComplexSum acc;
  for (const auto& p : parts) {
    acc.add(p.value);
    out.error += p.error;
  }
  out.value = acc.value();
  return out;
}

BoundCheckReport partial_sum_approx_check(const FigurateSpec& spec,
                                          std::int64_t q, std::int64_t a,
                                          std::int64_t t_max) {
  const Complex ratio = complete_sum_V(spec, q, a) / (24.0 * static_cast<double>(q));
  double worst = 0.0;
  ComplexSum M;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    M.add(unit_phase(static_cast<i128>(a) * residue(spec, t, q) % q, q));
    worst = std::max(worst, std::abs(M.value() - ratio * static_cast<double>(t)));
  }
  return BoundCheckReport::make(
      worst, 24.0 * static_cast<double>(q),
      "partial_sum_approx q=" + std::to_string(q) + " a=" + std::to_string(a) +
          " t<=" + std::to_string(t_max));
}

BoundCheckReport approx_chain_check(const FigurateSpec& spec, std::int64_t q,
                                    std::int64_t a, double theta,
                                    std::int64_t N, Rational delta) {
  require_delta(delta);
  if (N < 2) throw DomainError("approx chain needs N >= 2");
  const double Nd = static_cast<double>(N);
  const double A = static_cast<double>(spec.A);
  const double B = std::abs(static_cast<double>(spec.B));
  std::vector<std::string> unmet;
  if (static_cast<double>(N) < 6.0 * A + 4.0 * B) unmet.push_back("N >= 6A + 4|B|");
  if (std::abs(theta) > std::pow(Nd, delta.value() - 4.0)) unmet.push_back("|theta| <= N^{delta-4}");

  const Complex S = weyl_sum_shifted(spec, N, q, a, theta);
  const Complex V = complete_sum_V(spec, q, a) / (24.0 * static_cast<double>(q));
  const Complex approx = V * v_theta(spec.A, N, theta);
  const double lhs = std::abs(S - approx);
  const double qd = static_cast<double>(q);
  const double rhs = 24.0 * qd + 1.0 + (2.0 * A + 8.0 * B) * qd * M_PI * std::abs(theta) * std::pow(Nd, 4.0) +
                     (3.0 * A + 2.0 * B) / 3.0 * M_PI * std::pow(Nd, delta.value());
  const auto partial = partial_sum_approx_check(spec, q, a, N);

  std::ostringstream ctx;
  ctx.precision(12);
  ctx << "approx_chain q=" << q << " a=" << a << " theta=" << theta << " N=" << N
      << " delta=" << delta_text(delta) << " partial_sum_max=" << partial.lhs
      << " (bound " << partial.rhs << ")";
  if (!unmet.empty()) {
    ctx << " hypothesis-unmet:";
    for (const auto& u : unmet) ctx << " [" << u << "]";
  }
  auto report = BoundCheckReport::make(lhs, rhs, ctx.str());
  report.holds = report.holds && partial.holds;
  return report;
}

double minor_arc_bound_log(std::int64_t A, int s, std::int64_t N,
                           Rational delta) {
  require_delta(delta);
  if (N < 2) throw DomainError("minor arc bound needs N >= 2");
  const double lnN = std::log(static_cast<double>(N));
  const double lnlnN = std::log(lnN);
  const double t = s - 16.0;
  return std::log(1e6) + t * std::log(11.0) + t / 8.0 * std::log(static_cast<double>(A)) +
         t / 8.0 * lnlnN + (s - 4.0 - delta.value() * t / 8.0 + s / lnlnN) * lnN;
}

bool ComparisonReport::checks_passed() const {
  return std::all_of(bound_checks.begin(), bound_checks.end(),
                     [](const BoundCheckReport& r) { return r.holds; });
}

ComparisonReport asymptotic_report(const FigurateSpec& spec, int s,
                                   std::int64_t m, const ReportOptions& opts) {
  if (s < 1 || m < 1) throw DomainError("report needs s >= 1 and m >= 1");
  ComparisonReport r;
  r.spec = spec.label.empty() ? ("A=" + std::to_string(spec.A) + ",B=" +
                                 std::to_string(spec.B) + ",C=" + std::to_string(spec.C))
                              : spec.label;
  r.m = m;
  r.s = s;
  if (opts.delta) {
    r.delta = *opts.delta;
  } else if (s >= 9) {
    r.delta = optimal_delta(s);
  } else {
    r.delta = {73, 372};
    r.notes.push_back("s < 9: delta fixed at 73/372");
  }
  r.N = choose_N(spec.A, m);

  if (opts.compute_exact) {
    try {
      r.exact_count = count_representations(spec, s, m, opts.budget);
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string("exact count skipped: ") + e.what());
    }
  }

  try {
    r.series = euler_product(spec, s, m, opts.prime_limit);
    if (opts.series_Q != opts.prime_limit) {
      const auto t = truncated_series(spec, s, m, opts.series_Q);
      r.series.truncated = t.truncated;
      r.series.imag_residue = t.imag_residue;
      r.series.Q = t.Q;
      r.series.tail_log = t.tail_log;
    }
    r.main_term = main_term({spec.A, s, static_cast<double>(m), r.series.euler_estimate});
  } catch (const std::exception& e) {
    r.notes.push_back(std::string("series failed: ") + e.what());
  }

  std::optional<ArcDissection> dissection;
  try {
    dissection = dissect(r.N, r.delta);
    r.bound_checks.push_back(BoundCheckReport::exact(
        dissection_disjoint(*dissection), 0.0, 0.0,
        "major arcs pairwise disjoint N=" + std::to_string(r.N) +
            " delta=" + delta_text(r.delta)));
  } catch (const DomainError& e) {
    r.notes.push_back(std::string("dissection failed: ") + e.what());
  }

  if (opts.compute_major && dissection && r.N <= opts.major_N_limit) {
    try {
      const auto major = major_arc_integral(spec, s, m, *dissection, opts.quad_tol);
      r.major_value = major.value.real();
      r.major_imag = major.value.imag();
      r.major_error = major.error;
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("major arc integral failed: ") + e.what());
    }
  }

  if (r.exact_count && r.major_value) {
    r.minor_residual = r.exact_count->get_d() - *r.major_value;
    const double log_bound = minor_arc_bound_log(spec.A, s, r.N, r.delta);
    const double bound = std::exp(std::min(log_bound, 709.0));
    std::ostringstream ctx;
    ctx.precision(12);
    ctx << "minor arc one-sided bound (hypothesis-unmet, checked one-sided) log_rhs="
        << log_bound;
    r.bound_checks.push_back(BoundCheckReport::make(
        std::abs(*r.minor_residual), log_bound > 709.0 ? HUGE_VAL : bound, ctx.str()));
  }
  if (r.exact_count && r.main_term != 0.0) {
    r.ratio = r.exact_count->get_d() / r.main_term;
  }
  return r;
}

}  // namespace polywaring
