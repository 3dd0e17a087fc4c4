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

#include "polywaring/expsums.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "polywaring/errors.hpp"
#include "polywaring/parallel.hpp"

namespace polywaring {
namespace {

void require_coprime(std::int64_t q, std::int64_t a) {
  if (q < 1 || a < 1 || a > q || gcd(a, q) != 1) {
    throw DomainError("need 1 <= a <= q with gcd(a, q) = 1");
  }
}

// Histogram of f(n) mod q over 1 <= n <= 24q.
std::vector<std::int64_t> period_histogram(const FigurateSpec& spec,
                                           std::int64_t q) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(q), 0);
  for (std::int64_t n = 1; n <= 24 * q; ++n) ++h[residue(spec, n, q)];
  return h;
}

std::vector<Complex> twiddles(std::int64_t q) {
  std::vector<Complex> tw(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) tw[k] = unit_phase(k, q);
  return tw;
}

Complex complete_from_histogram(const std::vector<std::int64_t>& h,
                                const std::vector<Complex>& tw,
                                std::int64_t a) {
  const auto q = static_cast<std::int64_t>(h.size());
  ComplexSum acc;
  for (std::int64_t r = 0; r < q; ++r) {
    if (h[r] == 0) continue;
    acc.add(static_cast<double>(h[r]) *
            tw[static_cast<std::size_t>((static_cast<i128>(a) * r) % q)]);
  }
  return acc.value();
}

using Sparse = std::vector<std::pair<std::int64_t, std::uint64_t>>;

Sparse square_sparse(const Sparse& x, const Budget& budget) {
  const double pairs = static_cast<double>(x.size()) * static_cast<double>(x.size());
  budget.require(static_cast<std::uint64_t>(pairs), "mean_value");
  Sparse raw;
  raw.reserve(x.size() * x.size());
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : x) raw.emplace_back(u + v, cu * cv);
  }
  std::sort(raw.begin(), raw.end());
  Sparse out;
  for (const auto& e : raw) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace

PhaseSum weyl_sum(const FigurateSpec& spec, std::int64_t N, double alpha) {
  if (N < 1) throw DomainError("weyl_sum needs N >= 1");
  ComplexSum acc;
  for (std::int64_t n = 1; n <= N; ++n) {
    acc.add(unit_phase(frac_mul(alpha, eval(spec, n))));
  }
  return {acc.value(), N};
}

Complex weyl_sum_shifted(const FigurateSpec& spec, std::int64_t N,
                         std::int64_t q, std::int64_t a, double theta) {
  if (N < 1) throw DomainError("weyl_sum needs N >= 1");
  if (q < 1) throw DomainError("weyl_sum_shifted needs q >= 1");
  ComplexSum acc;
  const double qd = static_cast<double>(q);
  for (std::int64_t n = 1; n <= N; ++n) {
    const std::int64_t r = mod_floor(static_cast<i128>(a) * residue(spec, n, q), q);
    acc.add(unit_phase(static_cast<double>(r) / qd + frac_mul(theta, eval(spec, n))));
  }
  return acc.value();
}

Complex partial_sum_M(const FigurateSpec& spec, std::int64_t q, std::int64_t a,
                      std::int64_t t) {
  require_coprime(q, a);
  ComplexSum acc;
  for (std::int64_t n = 1; n <= t; ++n) {
    acc.add(unit_phase(static_cast<i128>(a) * residue(spec, n, q) % q, q));
  }
  return acc.value();
}

Complex complete_sum_V(const FigurateSpec& spec, std::int64_t q,
                       std::int64_t a) {
  require_coprime(q, a);
  return complete_from_histogram(period_histogram(spec, q), twiddles(q), a);
}

Complex v_of_q(const FigurateSpec& spec, std::int64_t q, int s,
               std::int64_t m) {
  if (q < 1 || s < 1) throw DomainError("v_of_q needs q >= 1 and s >= 1");
  const auto h = period_histogram(spec, q);
  const auto tw = twiddles(q);
  const double scale = 1.0 / (24.0 * static_cast<double>(q));
  ComplexSum acc;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (gcd(a, q) != 1) continue;
    const Complex v = complete_from_histogram(h, tw, a) * scale;
    acc.add(ipow(v, static_cast<unsigned>(s)) *
            tw[static_cast<std::size_t>(mod_floor(-static_cast<i128>(a) * m, q))]);
  }
  return acc.value();
}

BigInt mean_value(const FigurateSpec& spec, std::int64_t N, int j,
                  const Budget& budget) {
  if (N < 1) throw DomainError("mean_value needs N >= 1");
  if (j < 1 || j > 4) throw DomainError("mean_value needs 1 <= j <= 4");
  const std::int64_t k = std::int64_t{1} << (j - 1);
  const i128 f_N = eval(spec, N);
  if (2 * k * f_N > static_cast<i128>(INT64_MAX)) {
    throw DomainError("mean_value: sums of 2^j values exceed 64 bits");
  }

  Sparse base;
  for (std::int64_t n = 1; n <= N; ++n) {
    base.emplace_back(static_cast<std::int64_t>(eval(spec, n)), 1);
  }
  std::sort(base.begin(), base.end());
  Sparse merged;
  for (const auto& e : base) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += 1;
    } else {
      merged.push_back(e);
    }
  }
  if (k == 1) {
    u128 total = 0;
    for (const auto& e : merged) total += static_cast<u128>(e.second) * e.second;
    return to_bigint(static_cast<i128>(total));
  }

  // half-sum distribution c_{k/2}, then sum_v (c_{k/2} * c_{k/2})(v)^2
  // evaluated block by block.
  Sparse half = merged;
  for (std::int64_t parts = 1; parts < k / 2; parts *= 2) {
    half = square_sparse(half, budget);
  }
  const double pairs = static_cast<double>(half.size()) * static_cast<double>(half.size());
  budget.require(static_cast<std::uint64_t>(pairs), "mean_value");

  std::vector<std::int64_t> xs(half.size());
  for (std::size_t i = 0; i < half.size(); ++i) xs[i] = half[i].first;
  const std::int64_t lo = 2 * xs.front();
  const std::int64_t hi = 2 * xs.back();

  // Few pairs over a wide range: sort the pair sums instead of sweeping cells.
  constexpr double kSparsePairLimit = 6e7;
  if (pairs <= kSparsePairLimit && 8.0 * pairs < static_cast<double>(hi - lo)) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> sums;
    sums.reserve(static_cast<std::size_t>(pairs));
    for (const auto& [x, cx] : half) {
      for (const auto& [y, cy] : half) sums.emplace_back(x + y, cx * cy);
    }
    std::sort(sums.begin(), sums.end());
    u128 acc = 0;
    for (std::size_t i = 0; i < sums.size();) {
      std::uint64_t c = 0;
      std::size_t k = i;
      for (; k < sums.size() && sums[k].first == sums[i].first; ++k) c += sums[k].second;
      acc += static_cast<u128>(c) * c;
      i = k;
    }
    return to_bigint(static_cast<i128>(acc));
  }
  if (hi - lo > (std::int64_t{1} << 40)) {
    throw BudgetExceeded("mean_value: value range 2^j f_N too large for the dense pass");
  }
  constexpr std::int64_t kBlock = std::int64_t{1} << 22;
  const std::int64_t blocks = (hi - lo) / kBlock + 1;

  std::vector<u128> partial(static_cast<std::size_t>(blocks), 0);
  parallel_for(partial.size(), [&](std::size_t b) {
    const std::int64_t L = lo + static_cast<std::int64_t>(b) * kBlock;
    const std::int64_t R = std::min(L + kBlock, hi + 1);
    std::vector<std::uint64_t> cell(static_cast<std::size_t>(R - L), 0);
    for (const auto& [x, cx] : half) {
      auto first = std::lower_bound(xs.begin(), xs.end(), L - x);
      auto last = std::lower_bound(xs.begin(), xs.end(), R - x);
      for (auto it = first; it != last; ++it) {
        const auto idx = static_cast<std::size_t>(it - xs.begin());
        cell[static_cast<std::size_t>(x + *it - L)] += cx * half[idx].second;
      }
    }
    u128 acc = 0;
    for (const std::uint64_t c : cell) acc += static_cast<u128>(c) * c;
    partial[b] = acc;
  });
  BigInt total = 0;
  for (const u128 p : partial) total += to_bigint(static_cast<i128>(p));
  return total;
}

double mean_value_bound_log(std::int64_t N, int j) {
  if (j < 1 || j > 4) throw DomainError("mean value bound needs 1 <= j <= 4");
  if (N < 1) throw DomainError("mean value bound needs N >= 1");
  const double lnN = std::log(static_cast<double>(N));
  if (j == 1) return lnN;
  if (N < 3) throw DomainError("mean value bound needs N >= 3 for j >= 2");
  const double L = std::log(lnN);
  switch (j) {
    case 2: return std::log(13.0) + (2.0 + 4.2644 / L) * lnN;
    case 3: return std::log(328.0) + (5.0 + 8.5288 / L) * lnN;
    default: return std::log(1e6) + (12.0 + 12.7932 / L) * lnN;
  }
}

BoundCheckReport mean_value_check(const FigurateSpec& spec, std::int64_t N,
                                  int j, const Budget& budget) {
  const BigInt lhs = mean_value(spec, N, j, budget);
  const double log_rhs = mean_value_bound_log(N, j);
  const std::string ctx = "mean_value " + spec.label + " N=" + std::to_string(N) +
                          " j=" + std::to_string(j) + " lhs=" + lhs.get_str();
  if (j == 1) return BoundCheckReport::exact(lhs <= N, lhs.get_d(), static_cast<double>(N), ctx);
  return BoundCheckReport::make(lhs.get_d(), std::exp(log_rhs), ctx);
}

}  // namespace polywaring
