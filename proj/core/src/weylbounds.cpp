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

#include "polywaring/weylbounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "polywaring/errors.hpp"
#include "polywaring/parallel.hpp"

namespace polywaring {
namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients of p(x + h) - p(x).
std::vector<double> difference_once(const std::vector<double>& p, double h) {
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    // p_k ((x+h)^k - x^k) = p_k sum_{i<k} C(k,i) h^{k-i} x^i
    for (std::size_t i = 0; i < k; ++i) {
      out[i] += p[k] * binomial(static_cast<int>(k), static_cast<int>(i)) *
                std::pow(h, static_cast<double>(k - i));
    }
  }
  while (out.size() > 1 && out.back() == 0.0) out.pop_back();
  return out;
}

double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

double difference_rec(std::span<const double> c, std::span<const double> h,
                      double x) {
  if (h.empty()) return horner(c, x);
  const auto head = h.first(h.size() - 1);
  return difference_rec(c, head, x + h.back()) - difference_rec(c, head, x);
}

std::string describe(const QuarticPhase& p) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=(" << p.alpha[0] << "," << p.alpha[1] << "," << p.alpha[2]
     << "," << p.alpha[3] << ")";
  return os.str();
}

// Phase of psi(x) reduced mod 1 with extended precision.
double quartic_phase(const QuarticPhase& p, std::int64_t x) {
  long double acc = 0.0L;
  const long double xl = static_cast<long double>(x);
  for (int k = 3; k >= 0; --k) {
    acc = (acc + static_cast<long double>(p.alpha[k])) * xl;
  }
  return static_cast<double>(acc - std::floor(acc));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

template <typename Instance>
SweepSummary run_sweep(std::uint64_t master, std::size_t instances,
                       Instance&& instance) {
  std::vector<BoundCheckReport> reports(instances);
  parallel_for(instances, [&](std::size_t i) {
    const std::uint64_t seed = derive_seed(master, i);
    std::mt19937_64 rng(seed);
    reports[i] = instance(rng);
    reports[i].seed = seed;
  });
  SweepSummary out;
  out.master_seed = master;
  out.instances = instances;
  for (const auto& r : reports) {
    if (r.rhs > 0) out.worst_ratio = std::max(out.worst_ratio, r.lhs / r.rhs);
    if (!r.holds) {
      ++out.failures;
      out.failed.push_back(r);
    }
  }
  return out;
}

}  // namespace

double QuarticPhase::operator()(double x) const {
  return ((alpha[3] * x + alpha[2]) * x + alpha[1]) * x * x + alpha[0] * x;
}

std::vector<double> QuarticPhase::coefficients() const {
  return {0.0, alpha[0], alpha[1], alpha[2], alpha[3]};
}

double forward_difference(std::span<const double> coefficients,
                          std::span<const double> shifts, double x) {
  return difference_rec(coefficients, shifts, x);
}

std::vector<double> forward_difference_polynomial(
    std::span<const double> coefficients, std::span<const double> shifts) {
  std::vector<double> p(coefficients.begin(), coefficients.end());
  if (p.empty()) p.push_back(0.0);
  for (const double h : shifts) p = difference_once(p, h);
  return p;
}

BoundCheckReport check_weyl_differencing(const QuarticPhase& phase,
                                         std::int64_t X, int j) {
  if (X < 1 || X > 60) throw DomainError("weyl differencing needs 1 <= X <= 60");
  if (j < 1 || j > 3) throw DomainError("weyl differencing needs 1 <= j <= 3");

  // D[x] = e(Delta_k(psi(x); h)) for x in T_k, indices 1..X.
  std::vector<Complex> base(static_cast<std::size_t>(X) + 1);
  ComplexSum F;
  for (std::int64_t x = 1; x <= X; ++x) {
    base[x] = unit_phase(quartic_phase(phase, x));
    F.add(base[x]);
  }
  const double lhs = std::pow(std::abs(F.value()), std::pow(2.0, j));

  ComplexSum total;
  std::uint64_t terms = 0;
  // Depth-first over h_1..h_j with the interval rule.
  auto recurse = [&](auto&& self, int depth, std::int64_t lo, std::int64_t hi,
                     const std::vector<Complex>& D) -> void {
    for (std::int64_t h = -(X - 1); h <= X - 1; ++h) {
      const std::int64_t nlo = std::max(lo, lo - h);
      const std::int64_t nhi = std::min(hi, hi - h);
      if (nlo > nhi) continue;
      if (depth + 1 == j) {
        for (std::int64_t x = nlo; x <= nhi; ++x) {
          total.add(D[x + h] * std::conj(D[x]));
        }
        terms += static_cast<std::uint64_t>(nhi - nlo + 1);
      } else {
        std::vector<Complex> next(D.size());
        for (std::int64_t x = nlo; x <= nhi; ++x) {
          next[x] = D[x + h] * std::conj(D[x]);
        }
        self(self, depth + 1, nlo, nhi, next);
      }
    }
  };
  recurse(recurse, 0, 1, X, base);

  const double factor =
      std::pow(2.0 * static_cast<double>(X), std::pow(2.0, j) - j - 1.0);
  // Absolute allowance for rounding in the accumulated unit phases.
  const double allowance =
      64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(terms);
  const double rhs = factor * (total.value().real() + allowance);
  std::ostringstream ctx;
  ctx << "weyl_differencing X=" << X << " j=" << j << " " << describe(phase)
      << " imag=" << total.value().imag();
  return BoundCheckReport::make(lhs, rhs, ctx.str());
}

BoundCheckReport check_geometric_sum(double alpha, double X, double Y) {
  if (!(Y > 1.0)) throw DomainError("geometric sum needs Y > 1");
  const auto first = static_cast<std::int64_t>(std::floor(X)) + 1;
  const auto last = static_cast<std::int64_t>(std::floor(X + Y));
  ComplexSum acc;
  for (std::int64_t x = first; x <= last; ++x) {
    acc.add(unit_phase(frac_mul(alpha, x)));
  }
  const double lhs = std::abs(acc.value());
  const double norm = dist_to_int(alpha);
  const double rhs = norm == 0.0 ? Y + 1.0 : std::min(Y + 1.0, 0.5 / norm);
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "geometric_sum alpha=" << alpha << " X=" << X << " Y=" << Y;
  // Allowance for the rounding of |sum| near the 1/(2||alpha||) branch.
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                       static_cast<double>(std::max<std::int64_t>(last - first + 1, 1));
  return BoundCheckReport::make(lhs, rhs + slack, ctx.str());
}

BoundCheckReport check_reciprocal_sum(double alpha, double beta, double X,
                                      double Y, std::int64_t a, std::int64_t q,
                                      double eta) {
  if (q <= 100) throw DomainError("reciprocal sum needs q > 100");
  if (gcd(a, q) != 1) throw DomainError("reciprocal sum needs gcd(a, q) = 1");
  if (X < 1.0 || Y < 1.0) throw DomainError("reciprocal sum needs X, Y >= 1");
  if (eta < 1.0) throw DomainError("reciprocal sum needs eta >= 1");
  const double qd = static_cast<double>(q);
  const double offset = std::abs(alpha - static_cast<double>(a) / qd);
  if (offset > eta / (qd * qd) * (1.0 + 1e-12)) {
    throw DomainError("reciprocal sum needs |alpha - a/q| <= eta/q^2");
  }
  CompensatedSum<double> acc;
  const auto last = static_cast<std::int64_t>(std::floor(X));
  for (std::int64_t x = 1; x <= last; ++x) {
    const double d = dist_to_int(frac_mul(alpha, x) + beta);
    acc.add(d == 0.0 ? Y : std::min(Y, 1.0 / d));
  }
  const double rhs =
      8.0 * X * Y * eta * (1.0 / qd + 1.0 / Y + 1.0 / X + qd / (X * Y)) * std::log(qd);
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "reciprocal_sum alpha=" << alpha << " beta=" << beta << " X=" << X
      << " Y=" << Y << " a/q=" << a << "/" << q << " eta=" << eta;
  return BoundCheckReport::make(acc.value(), rhs, ctx.str());
}

std::int64_t divisor_count(std::int64_t n) {
  if (n < 1) throw DomainError("divisor_count needs n >= 1");
  std::int64_t count = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::vector<std::uint32_t> divisor_sieve(std::int64_t limit) {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0)) + 1, 0);
  for (std::int64_t k = 1; k <= limit; ++k) {
    for (std::int64_t n = k; n <= limit; n += k) ++d[n];
  }
  return d;
}

namespace {
double divisor_rhs(std::int64_t n) {
  const double x = static_cast<double>(n);
  return std::pow(x, 1.0661 / std::log(std::log(x)));
}
}  // namespace

BoundCheckReport divisor_bound_check(std::int64_t n) {
  if (n < 21) throw DomainError("divisor bound needs n >= 21");
  return BoundCheckReport::make(static_cast<double>(divisor_count(n)),
                                divisor_rhs(n),
                                "divisor_bound n=" + std::to_string(n));
}

DivisorSweep divisor_bound_sweep(std::int64_t lo, std::int64_t hi) {
  if (lo < 21) throw DomainError("divisor bound needs n >= 21");
  const auto d = divisor_sieve(hi);
  DivisorSweep out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const double ratio = static_cast<double>(d[n]) / divisor_rhs(n);
    ++out.checked;
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.argmax = n;
    }
    if (ratio > 1.0 + BoundCheckReport::kRelativeSlack) {
      if (out.failures == 0) out.first_failure = n;
      ++out.failures;
    }
  }
  return out;
}

BoundCheckReport check_F_alpha_bound(const QuarticPhase& phase, std::int64_t X,
                                     std::int64_t a, std::int64_t q,
                                     double eta) {
  if (q <= 100) throw DomainError("F(alpha) bound needs q > 100");
  if (X < 21) throw DomainError("F(alpha) bound needs X >= e^3");
  if (eta < 1.0) throw DomainError("F(alpha) bound needs eta >= 1");
  const double qd = static_cast<double>(q);
  if (std::abs(phase.alpha[3] - static_cast<double>(a) / qd) >
      eta / (qd * qd) * (1.0 + 1e-12)) {
    throw DomainError("F(alpha) bound needs |alpha_4 - a/q| <= eta/q^2");
  }
  ComplexSum F;
  for (std::int64_t x = 1; x <= X; ++x) F.add(unit_phase(quartic_phase(phase, x)));
  const double Xd = static_cast<double>(X);
  const double rhs =
      2.0 * std::pow(Xd, 7.0 / 8.0) +
      5.0 * std::pow(eta, 0.125) *
          std::pow(Xd, 1.0 + 3.1983 / (4.0 * std::log(3.0 * std::log(Xd)))) *
          std::pow(1.0 / qd + 1.0 / Xd + qd / std::pow(Xd, 4.0), 0.125) *
          std::pow(std::log(qd), 0.125);
  std::ostringstream ctx;
  ctx << "F_alpha_bound X=" << X << " a/q=" << a << "/" << q << " eta=" << eta
      << " " << describe(phase);
  return BoundCheckReport::make(std::abs(F.value()), rhs, ctx.str());
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

SweepSummary sweep_weyl_differencing(std::uint64_t master_seed,
                                     std::size_t instances,
                                     std::int64_t max_X) {
  return run_sweep(master_seed, instances, [max_X](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> pick_X(1, max_X);
    std::uniform_int_distribution<int> pick_j(1, 3);
    QuarticPhase p;
    for (auto& a : p.alpha) a = unit(rng);
    const std::int64_t X = pick_X(rng);
    const int j = pick_j(rng);
    return check_weyl_differencing(p, X, j);
  });
}

SweepSummary sweep_geometric_sum(std::uint64_t master_seed,
                                 std::size_t instances) {
  return run_sweep(master_seed, instances, [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 3);
    double alpha = unit(rng) * 4.0 - 2.0;
    switch (kind(rng)) {
      case 0:  // rational with small denominator
        alpha = std::floor(unit(rng) * 12.0) / (1.0 + std::floor(unit(rng) * 12.0));
        break;
      case 1:  // close to an integer
        alpha = std::floor(unit(rng) * 5.0) + (unit(rng) - 0.5) * 1e-4;
        break;
      default:
        break;
    }
    const double X = (unit(rng) - 0.5) * 200.0;
    const double Y = 1.0 + unit(rng) * 999.0 + 1e-9;
    return check_geometric_sum(alpha, X, Y);
  });
}

SweepSummary sweep_reciprocal_sum(std::uint64_t master_seed,
                                  std::size_t instances) {
  return run_sweep(master_seed, instances, [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> pick_q(101, 2000);
    const std::int64_t q = pick_q(rng);
    std::uniform_int_distribution<std::int64_t> pick_a(1, q);
    std::int64_t a = pick_a(rng);
    while (gcd(a, q) != 1) a = a % q + 1;
    const double eta = 1.0 + unit(rng) * 9.0;
    const double qd = static_cast<double>(q);
    const double alpha = static_cast<double>(a) / qd +
                         (2.0 * unit(rng) - 1.0) * 0.999 * eta / (qd * qd);
    const double beta = unit(rng);
    const double X = 1.0 + std::floor(unit(rng) * 500.0);
    const double Y = 1.0 + unit(rng) * 499.0;
    return check_reciprocal_sum(alpha, beta, X, Y, a, q, eta);
  });
}

SweepSummary sweep_F_alpha_bound(std::uint64_t master_seed,
                                 std::size_t instances) {
  return run_sweep(master_seed, instances, [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> pick_q(101, 10000);
    std::uniform_int_distribution<std::int64_t> pick_X(21, 400);
    const std::int64_t q = pick_q(rng);
    std::uniform_int_distribution<std::int64_t> pick_a(1, q);
    std::int64_t a = pick_a(rng);
    while (gcd(a, q) != 1) a = a % q + 1;
    const double eta = 1.0 + unit(rng) * 9.0;
    const double qd = static_cast<double>(q);
    QuarticPhase p;
    for (int k = 0; k < 3; ++k) p.alpha[k] = unit(rng);
    p.alpha[3] = static_cast<double>(a) / qd +
                 (2.0 * unit(rng) - 1.0) * 0.999 * eta / (qd * qd);
    return check_F_alpha_bound(p, pick_X(rng), a, q, eta);
  });
}

}  // namespace polywaring
