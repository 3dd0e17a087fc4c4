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

#include "polywaring/repcount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/parallel.hpp"

namespace polywaring {

const BigInt& CountVector::at(std::int64_t index) const {
  const std::int64_t i = index - base;
  if (i < 0 || i >= static_cast<std::int64_t>(counts.size())) {
    throw DomainError("count index out of range: " + std::to_string(index));
  }
  return counts[static_cast<std::size_t>(i)];
}

std::vector<std::int64_t> values_upto(const FigurateSpec& spec,
                                      std::int64_t m) {
  std::vector<std::int64_t> out;
  if (m < 1) return out;
  const std::int64_t n_max = max_index(spec, m);
  out.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    out.push_back(static_cast<std::int64_t>(eval(spec, n)));
  }
  return out;
}

CountVector count_profile(const FigurateSpec& spec, int s, std::int64_t m_max,
                          const Budget& budget) {
  if (s < 1) throw DomainError("count_profile needs s >= 1");
  if (m_max < 0) throw DomainError("count_profile needs m_max >= 0");
  const auto values = values_upto(spec, m_max);
  const double ops = static_cast<double>(s) * static_cast<double>(m_max + 1) *
                     static_cast<double>(std::max<std::size_t>(values.size(), 1));
  budget.require(ops > 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(ops),
                 "count_profile");

  const auto size = static_cast<std::size_t>(m_max + 1);
  std::vector<BigInt> prev(size), cur(size);
  prev[0] = 1;  // empty tuple
  for (int k = 1; k <= s; ++k) {
    parallel_for(size, [&](std::size_t i) {
      BigInt acc = 0;
      const auto target = static_cast<std::int64_t>(i);
      for (const std::int64_t v : values) {
        if (v > target) break;
        const BigInt& src = prev[static_cast<std::size_t>(target - v)];
        if (sgn(src) != 0) acc += src;
      }
      cur[i] = std::move(acc);
    });
    prev.swap(cur);
  }
  return CountVector{0, std::move(prev)};
}

BigInt count_representations(const FigurateSpec& spec, int s, std::int64_t m,
                             const Budget& budget) {
  if (m < 0) return 0;
  return count_profile(spec, s, m, budget).at(m);
}

std::vector<BigInt> count_profile_via_dft(const FigurateSpec& spec, int s,
                                          std::int64_t m_max) {
  if (s < 1) throw DomainError("count_via_dft needs s >= 1");
  if (m_max < 0) throw DomainError("count_via_dft needs m >= 0");
  const std::int64_t N = max_index(spec, m_max);
  std::vector<BigInt> out(static_cast<std::size_t>(m_max + 1));
  if (N == 0) {
    // S is the empty sum; only the constant term survives.
    return out;
  }
  const auto f_N = static_cast<std::int64_t>(eval(spec, N));
  const std::int64_t degree = static_cast<std::int64_t>(s) * f_N;
  if (degree > kDftDegreeLimit) {
    throw DomainError("count_via_dft: s*f_N = " + std::to_string(degree) +
                      " exceeds 2^20");
  }
  if (s * std::log10(static_cast<double>(N)) > 12.0) {
    throw NumericFailure("count_via_dft: counts too large for double rounding");
  }
  const std::int64_t M = degree + 1;
  std::vector<std::int64_t> fv(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) {
    fv[static_cast<std::size_t>(n - 1)] = static_cast<std::int64_t>(eval(spec, n));
  }
  std::vector<Complex> power(static_cast<std::size_t>(M));
  parallel_for(static_cast<std::size_t>(M), [&](std::size_t j) {
    ComplexSum acc;
    for (const std::int64_t v : fv) {
      const i128 e = static_cast<i128>(j) * v;
      acc.add(unit_phase(mod_floor(e, M), M));
    }
    power[j] = ipow(acc.value(), static_cast<unsigned>(s));
  });
  // Coefficients above the degree are zero; reading them would alias.
  const auto readable = static_cast<std::size_t>(std::min(m_max, degree) + 1);
  std::vector<double> residues(readable);
  parallel_for(readable, [&](std::size_t mi) {
    ComplexSum acc;
    const auto m = static_cast<i128>(mi);
    for (std::int64_t j = 0; j < M; ++j) {
      acc.add(power[static_cast<std::size_t>(j)] *
              unit_phase(mod_floor(-m * j, M), M));
    }
    const Complex c = acc.value() / static_cast<double>(M);
    const double rounded = std::nearbyint(c.real());
    residues[mi] = std::abs(c.real() - rounded) + std::abs(c.imag());
    out[mi] = BigInt(rounded < 0 ? 0.0 : rounded);
  });
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] >= 0.4) {
      throw NumericFailure("count_via_dft: rounding residue " +
                           std::to_string(residues[i]) + " at m = " +
                           std::to_string(i));
    }
  }
  return out;
}

BigInt count_via_dft(const FigurateSpec& spec, int s, std::int64_t m) {
  if (m < 0) return 0;
  if (s < 1) throw DomainError("count_via_dft needs s >= 1");
  const std::int64_t N = max_index(spec, m);
  if (N == 0) return 0;
  const auto f_N = static_cast<std::int64_t>(eval(spec, N));
  const std::int64_t degree = static_cast<std::int64_t>(s) * f_N;
  if (degree > kDftDegreeLimit) {
    throw DomainError("count_via_dft: s*f_N = " + std::to_string(degree) +
                      " exceeds 2^20");
  }
  if (s * std::log10(static_cast<double>(N)) > 12.0) {
    throw NumericFailure("count_via_dft: counts too large for double rounding");
  }
  if (m > degree) return 0;
  const std::int64_t M = degree + 1;
  std::vector<Complex> terms(static_cast<std::size_t>(M));
  parallel_for(terms.size(), [&](std::size_t j) {
    ComplexSum acc;
    for (std::int64_t n = 1; n <= N; ++n) {
      const i128 e = static_cast<i128>(j) * eval(spec, n);
      acc.add(unit_phase(mod_floor(e, M), M));
    }
    const i128 back = -static_cast<i128>(j) * m;
    terms[j] = ipow(acc.value(), static_cast<unsigned>(s)) *
               unit_phase(mod_floor(back, M), M);
  });
  ComplexSum total;
  for (const auto& t : terms) total.add(t);
  const Complex c = total.value() / static_cast<double>(M);
  const double rounded = std::nearbyint(c.real());
  const double residue = std::abs(c.real() - rounded) + std::abs(c.imag());
  if (residue >= 0.4) {
    throw NumericFailure("count_via_dft: rounding residue " +
                         std::to_string(residue));
  }
  return BigInt(rounded < 0 ? 0.0 : rounded);
}

std::vector<BigInt> convolve(const std::vector<BigInt>& x,
                             const std::vector<BigInt>& y, std::size_t limit) {
  if (x.empty() || y.empty()) return {};
  const std::size_t size = std::min(limit, x.size() + y.size() - 1);
  std::vector<BigInt> out(size);
  parallel_for(size, [&](std::size_t i) {
    BigInt acc = 0;
    const std::size_t lo = i >= y.size() ? i - y.size() + 1 : 0;
    const std::size_t hi = std::min(i, x.size() - 1);
    for (std::size_t k = lo; k <= hi; ++k) {
      if (sgn(x[k]) != 0 && sgn(y[i - k]) != 0) acc += x[k] * y[i - k];
    }
    out[i] = std::move(acc);
  });
  return out;
}

}  // namespace polywaring
