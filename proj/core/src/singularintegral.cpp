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

#include "polywaring/singularintegral.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "polywaring/errors.hpp"
#include "polywaring/parallel.hpp"
#include "polywaring/quadrature.hpp"

namespace polywaring {

Complex v_theta(std::int64_t A, std::int64_t N, double theta, double abs_tol) {
  if (A < 1 || N < 1) throw DomainError("v_theta needs A >= 1 and N >= 1");
  if (std::abs(theta) > 0.5) throw DomainError("v_theta needs |theta| <= 1/2");
  const double Nd = static_cast<double>(N);
  if (theta == 0.0) return {Nd - 1.0, 0.0};
  const double c = static_cast<double>(A) * theta / 24.0;
  const double cycles = std::abs(c) * (std::pow(Nd, 4.0) - 1.0);
  if (cycles > 1e6) throw NumericFailure("v_theta: integrand has too many oscillations");
  QuadratureOptions opts;
  opts.abs_tol = abs_tol > 0.0 ? abs_tol : 1e-10 * Nd;
  opts.rel_tol = 0.0;
  opts.initial_panels = static_cast<std::size_t>(8.0 + 4.0 * cycles);
  const auto r = integrate(
      [c](double t) {
        const double t2 = t * t;
        return unit_phase(c * t2 * t2);
      },
      1.0, Nd, opts);
  if (!r.converged) throw NumericFailure("v_theta: quadrature did not converge");
  return r.value;
}

Complex v1_theta(std::int64_t N0, double theta) {
  if (std::abs(theta) > 0.5) throw DomainError("v1_theta needs |theta| <= 1/2");
  ComplexSum acc;
  for (std::int64_t n = 1; n <= N0; ++n) {
    const double w = 0.25 / std::sqrt(std::sqrt(static_cast<double>(n)) *
                                      static_cast<double>(n));
    acc.add(w * unit_phase(frac_mul(theta, n)));
  }
  return acc.value();
}

std::vector<Complex> v1_theta_batch(std::int64_t N0,
                                    const std::vector<double>& thetas) {
  std::vector<Complex> out(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) { out[i] = v1_theta(N0, thetas[i]); });
  return out;
}

std::vector<double> j1_profile(int s, std::int64_t m_max) {
  if (s < 1) throw DomainError("J_1 needs s >= 1");
  if (m_max < 0 || m_max > 20000) throw BudgetExceeded("J_1 profile limited to m <= 20000");
  const auto size = static_cast<std::size_t>(m_max) + 1;
  std::vector<double> g(size, 0.0);
  for (std::size_t n = 1; n < size; ++n) {
    g[n] = 0.25 * std::pow(static_cast<double>(n), -0.75);
  }
  std::vector<double> cur = g;
  for (int k = 2; k <= s; ++k) {
    std::vector<double> next(size, 0.0);
    parallel_for(size, [&](std::size_t i) {
      long double acc = 0.0L;
      for (std::size_t n = 1; n < i; ++n) acc += static_cast<long double>(g[n]) * cur[i - n];
      next[i] = static_cast<double>(acc);
    });
    cur.swap(next);
  }
  return cur;
}

double j1_exact(int s, std::int64_t m) {
  if (m < 0) throw DomainError("J_1 needs m >= 0");
  if (m < s) return 0.0;
  return j1_profile(s, m)[static_cast<std::size_t>(m)];
}

double gamma_factor(int s, double m) {
  if (!(m > 0.0)) throw DomainError("gamma factor needs m > 0");
  const double log_value = s * std::lgamma(1.25) - std::lgamma(s / 4.0) +
                           (s / 4.0 - 1.0) * std::log(m);
  return std::exp(log_value);
}

double main_term(const MainTermParams& p) {
  if (p.s < 2 || !(p.m >= 1.0)) throw DomainError("main term needs s >= 2, m >= 1");
  if (!std::isfinite(p.series_value)) throw DomainError("main term needs a finite series value");
  if (p.series_value == 0.0) return 0.0;
  const double log_scale = (p.s / 4.0) * std::log(24.0 / static_cast<double>(p.A)) +
                           p.s * std::lgamma(1.25) - std::lgamma(p.s / 4.0) +
                           (p.s / 4.0 - 1.0) * std::log(p.m);
  return p.series_value * std::exp(log_scale);
}

double hypergeometric_2f1(double a, double b, double c, double z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("2F1 series needs |z| < 1");
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    if (term == 0.0) return sum;
  }
  throw NumericFailure("2F1 series did not converge");
}

BoundCheckReport beta_approx_check(double alpha, double beta, std::int64_t m) {
  if (!(beta > 0.0 && beta < 1.0 && alpha >= beta)) {
    throw DomainError("beta approximation needs alpha >= beta > 0, beta < 1");
  }
  if (m < 2) throw DomainError("beta approximation needs m >= 2");
  const double md = static_cast<double>(m);
  long double sum = 0.0L;
  for (std::int64_t n = 1; n < m; ++n) {
    sum += std::pow(static_cast<long double>(n), static_cast<long double>(beta) - 1.0L) *
           std::pow(static_cast<long double>(m - n), static_cast<long double>(alpha) - 1.0L);
  }
  const double beta_fn =
      std::exp(std::lgamma(beta) + std::lgamma(alpha) - std::lgamma(alpha + beta));
  const double lhs = std::abs(static_cast<double>(sum) -
                              std::pow(md, beta + alpha - 1.0) * beta_fn);
  const double general = 2.0 / beta * std::pow(md, alpha - 1.0) *
                         hypergeometric_2f1(beta, 1.0 - alpha, 1.0 + beta, 1.0 / md);
  const bool simplified = beta == 0.25;
  const double rhs = simplified ? 12.0 * std::pow(md, alpha - 1.0) : general;
  std::ostringstream ctx;
  ctx.precision(12);
  ctx << "beta_approx alpha=" << alpha << " beta=" << beta << " m=" << m
      << (simplified ? " rhs=12 m^{alpha-1}" : " rhs=(2/beta) m^{alpha-1} 2F1")
      << " general_rhs=" << general;
  return BoundCheckReport::make(lhs, rhs, ctx.str());
}

BoundCheckReport j1_bound_check(int s, std::int64_t m) {
  if (s < 2) throw DomainError("J_1 bound needs s >= 2");
  if (m < s) throw DomainError("J_1 bound is only asserted for m >= s");
  const double md = static_cast<double>(m);
  const double lhs = std::abs(j1_exact(s, m) - gamma_factor(s, md));
  const double rhs = std::pow(md, (s - 1) / 4.0 - 1.0);
  return BoundCheckReport::make(
      lhs, rhs, "j1_bound s=" + std::to_string(s) + " m=" + std::to_string(m));
}

}  // namespace polywaring
