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

#include "polywaring/localdensity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "polywaring/errors.hpp"
#include "polywaring/numeric.hpp"

namespace polywaring {
namespace {

std::size_t limbs_for_bits(std::size_t bits) { return (bits + 63) / 64; }

// Product of x and y as polynomials, folded modulo z^q - 1. Both inputs have
// length q and nonnegative entries; the product is taken through one big
// integer multiplication with each coefficient in its own limb-aligned slot.
std::vector<BigInt> cyclic_multiply(const std::vector<BigInt>& x,
                                    const std::vector<BigInt>& y) {
  const std::size_t q = x.size();
  std::size_t bx = 1, by = 1;
  for (const auto& v : x) bx = std::max(bx, mpz_sizeinbase(v.get_mpz_t(), 2));
  for (const auto& v : y) by = std::max(by, mpz_sizeinbase(v.get_mpz_t(), 2));
  std::size_t qbits = 1;
  while ((std::size_t{1} << qbits) <= q) ++qbits;
  const std::size_t slot = limbs_for_bits(bx + by + qbits + 1);

  auto pack = [slot](const std::vector<BigInt>& v) {
    std::vector<std::uint64_t> limbs(v.size() * slot, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      std::size_t count = 0;
      mpz_export(limbs.data() + i * slot, &count, -1, sizeof(std::uint64_t), 0,
                 0, v[i].get_mpz_t());
    }
    BigInt out;
    mpz_import(out.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0,
               limbs.data());
    return out;
  };
  const BigInt X = pack(x);
  const BigInt Y = (&x == &y) ? X : pack(y);
  BigInt Z = X * Y;

  const std::size_t total_slots = 2 * q;
  std::vector<std::uint64_t> limbs(total_slots * slot + 1, 0);
  std::size_t count = 0;
  mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), 0, 0,
             Z.get_mpz_t());
  std::vector<BigInt> out(q);
  BigInt piece;
  for (std::size_t i = 0; i + 1 < total_slots; ++i) {
    const std::uint64_t* src = limbs.data() + i * slot;
    std::size_t len = slot;
    while (len > 0 && src[len - 1] == 0) --len;
    if (len == 0) continue;
    mpz_import(piece.get_mpz_t(), len, -1, sizeof(std::uint64_t), 0, 0, src);
    out[i % q] += piece;
  }
  return out;
}

// Spec coefficients match a catalog entry.
bool is_catalog(const FigurateSpec& spec) {
  for (const auto& e : catalog_entries()) {
    if (e.A == spec.A && e.B == spec.B && e.C == spec.C) return true;
  }
  return false;
}

// v_p(f'(n)) as v_p(12 f'(n)) - v_p(12); f'(n) = 0 gives max int.
int derivative_valuation(const FigurateSpec& spec, std::int64_t n,
                         std::int64_t p) {
  const i128 d = scaled12_derivative(spec, n);
  if (d == 0) return std::numeric_limits<int>::max();
  return valuation(d, p) - valuation(12, p);
}

std::int64_t power_of(std::int64_t p, int k) {
  return checked_pow(p, static_cast<unsigned>(k));
}

}  // namespace

ResidueDistribution residue_distribution(const FigurateSpec& spec,
                                         std::int64_t t, std::int64_t q) {
  if (t < 0 || q < 1) throw DomainError("residue_distribution needs t >= 0, q >= 1");
  ResidueDistribution out;
  out.modulus = q;
  out.t = t;
  out.counts.assign(static_cast<std::size_t>(q), 0);
  const std::int64_t period = 24 * q;
  const std::int64_t full = t / period;
  const std::int64_t rest = t % period;
  if (full > 0) {
    for (std::int64_t n = 1; n <= period; ++n) {
      out.counts[residue(spec, n, q)] += full;
    }
  }
  for (std::int64_t n = full * period + 1; n <= full * period + rest; ++n) {
    ++out.counts[residue(spec, n, q)];
  }
  return out;
}

std::vector<BigInt> congruence_profile(const FigurateSpec& spec, int s,
                                       std::int64_t t, std::int64_t q,
                                       const Budget& budget) {
  if (s < 0) throw DomainError("congruence counting needs s >= 0");
  if (q > kExactModulusLimit) {
    throw BudgetExceeded("exact congruence counting is limited to q <= " +
                         std::to_string(kExactModulusLimit));
  }
  const double bits = static_cast<double>(s) * std::log2(static_cast<double>(std::max<std::int64_t>(t, 2)));
  budget.require(static_cast<std::uint64_t>(static_cast<double>(q) * bits),
                 "count_congruence");
  std::vector<BigInt> result(static_cast<std::size_t>(q));
  result[0] = 1;  // zero parts: the empty sum
  if (s == 0) return result;
  const auto dist = residue_distribution(spec, t, q);
  std::vector<BigInt> base(dist.counts.size());
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = BigInt(static_cast<long>(dist.counts[i]));
  bool have = false;
  for (int e = s; e > 0; e >>= 1) {
    if (e & 1) {
      result = have ? cyclic_multiply(result, base) : base;
      have = true;
    }
    if (e > 1) base = cyclic_multiply(base, base);
  }
  return result;
}

BigInt count_congruence(const FigurateSpec& spec, int s, std::int64_t m,
                        std::int64_t t, std::int64_t q, const Budget& budget) {
  if (s < 1) throw DomainError("count_congruence needs s >= 1");
  const auto profile = congruence_profile(spec, s, t, q, budget);
  return profile[static_cast<std::size_t>(mod_floor(m, q))];
}

BoundCheckReport scaling_identity_check(const FigurateSpec& spec, int s,
                                        std::int64_t m, std::int64_t q) {
  if (q < 1 || q > 30) throw DomainError("scaling identity check needs 1 <= q <= 30");
  if (s < 1 || s > 17) throw DomainError("scaling identity check needs 1 <= s <= 17");
  const BigInt lhs = count_congruence(spec, s, m, 24 * q, q);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 24, static_cast<unsigned long>(s));
  const BigInt rhs = scale * count_congruence(spec, s, m, q, q);
  std::ostringstream ctx;
  ctx << "scaling_identity spec=" << spec.label << " s=" << s << " m=" << m
      << " q=" << q << " M(24q,q)=" << to_decimal(lhs)
      << " 24^s*M(q,q)=" << to_decimal(rhs);
  return BoundCheckReport::exact(lhs == rhs, lhs.get_d(), rhs.get_d(), ctx.str());
}

BigInt nonsingular_count(const FigurateSpec& spec, int s, std::int64_t m,
                         std::int64_t p) {
  if (!is_prime(p)) throw DomainError("nonsingular_count needs a prime p");
  if (s < 1) throw DomainError("nonsingular_count needs s >= 1");
  const auto rest = congruence_profile(spec, s - 1, p, p);
  BigInt total = 0;
  for (std::int64_t n = 1; n <= p; ++n) {
    const std::int64_t r = residue(spec, n, p);
    if (r == 0) continue;
    if (derivative_valuation(spec, n, p) > 0) continue;
    total += rest[static_cast<std::size_t>(mod_floor(static_cast<i128>(m) - r, p))];
  }
  return total;
}

DensityValue local_density_value(const FigurateSpec& spec, int s,
                                 std::int64_t m, std::int64_t p, int k,
                                 DensityPath path) {
  if (!is_prime(p)) throw DomainError("local density needs a prime p");
  if (s < 1 || k < 0) throw DomainError("local density needs s >= 1, k >= 0");
  if (k == 0) return {1.0, 0.0, true};
  const std::int64_t q = power_of(p, k);
  if (path == DensityPath::kAuto) {
    path = q <= kExactModulusLimit ? DensityPath::kExact : DensityPath::kFloat;
  }
  if (path == DensityPath::kExact) {
    const BigInt M = count_congruence(spec, s, m, 24 * q, q);
    BigInt den, t;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(s - 1));
    mpz_ui_pow_ui(t.get_mpz_t(), 24, static_cast<unsigned long>(s));
    den *= t;
    return {ratio_to_double(M, den), 0.0, true};
  }
  if (q > 200000) throw BudgetExceeded("float density path limited to p^k <= 200000");
  // sum_a (S(a) / 24q)^s e(-am/q) with S(a) = sum_{n<=24q} e(a f(n)/q).
  std::vector<std::int64_t> h(static_cast<std::size_t>(q), 0);
  for (std::int64_t n = 1; n <= 24 * q; ++n) ++h[residue(spec, n, q)];
  std::vector<Complex> tw(static_cast<std::size_t>(q));
  for (std::int64_t r = 0; r < q; ++r) tw[r] = unit_phase(r, q);
  const double scale = 1.0 / (24.0 * static_cast<double>(q));
  ComplexSum acc;
  for (std::int64_t a = 0; a < q; ++a) {
    ComplexSum S;
    for (std::int64_t r = 0; r < q; ++r) {
      if (h[r] != 0) S.add(static_cast<double>(h[r]) * tw[(static_cast<i128>(a) * r) % q]);
    }
    acc.add(ipow(S.value() * scale, static_cast<unsigned>(s)) *
            tw[mod_floor(-static_cast<i128>(a) * m, q)]);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double err = eps * static_cast<double>(q) * (s + std::log2(static_cast<double>(q)) + 4.0);
  return {acc.value().real(), err, false};
}

double local_density(const FigurateSpec& spec, int s, std::int64_t m,
                     std::int64_t p, int k, DensityPath path) {
  return local_density_value(spec, s, m, p, k, path).value;
}

DensityReport local_density_limit(const FigurateSpec& spec, int s,
                                  std::int64_t m, std::int64_t p, int k_max,
                                  double tol) {
  if (!is_prime(p)) throw DomainError("local density needs a prime p");
  if (k_max <= 0) {
    k_max = 1;
    while (power_of(p, k_max + 1) <= kExactModulusLimit) ++k_max;
    k_max = std::max(k_max, 2);
  }
  DensityReport out;
  out.p = p;
  double prev = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double rho = local_density(spec, s, m, p, k);
    out.levels.emplace_back(k, rho);
    if (k >= 2 && std::abs(rho - prev) <= tol * std::abs(prev)) {
      out.stabilized = true;
      prev = rho;
      break;
    }
    prev = rho;
  }
  out.estimate = prev;
  if (s >= 17) {
    if (p >= 11 || (p >= 3 && is_catalog(spec))) {
      out.lower_bound = std::pow(static_cast<double>(p), 1.0 - s);
    } else if (p == 2 && is_catalog(spec)) {
      out.lower_bound = std::pow(2.0, 5.0 * (1.0 - s));
    }
    if (out.lower_bound > 0.0) out.lower_bound_violated = !(out.estimate > out.lower_bound);
  }
  return out;
}

int valuation_tau(const FigurateSpec& spec, std::int64_t p,
                  std::int64_t search_bound) {
  if (!is_prime(p)) throw DomainError("valuation_tau needs a prime p");
  std::int64_t bound = search_bound > 0 ? search_bound : std::max(p * p * p, 24 * p);
  while (true) {
    int best = std::numeric_limits<int>::max();
    for (std::int64_t y = 1; y <= bound; ++y) {
      best = std::min(best, derivative_valuation(spec, y, p));
    }
    if (best != std::numeric_limits<int>::max()) return best;
    if (bound > (std::int64_t{1} << 20)) {
      throw DomainError("valuation_tau: f' vanishes at every sampled point");
    }
    bound *= 2;
  }
}

std::vector<std::int64_t> hensel_lift(const FigurateSpec& spec, i128 c,
                                      std::int64_t a, std::int64_t p, int j,
                                      int tau) {
  if (!is_prime(p)) throw DomainError("hensel_lift needs a prime p");
  if (tau < 0) throw DomainError("hensel_lift needs tau >= 0");
  if (j < 2 * tau + 1) throw DomainError("hensel_lift needs j >= 2 tau + 1");
  if (a < 0) throw DomainError("hensel_lift needs a >= 0");
  const std::int64_t pj = power_of(p, j);
  const std::int64_t pj1 = power_of(p, j + 1);
  if (mod_floor(static_cast<i128>(residue(spec, a, pj)) - c, pj) != 0) {
    throw DomainError("hensel_lift needs f(a) = c mod p^j");
  }
  if (derivative_valuation(spec, a, p) != tau) {
    throw DomainError("hensel_lift needs p^tau || f'(a)");
  }
  const std::int64_t step = power_of(p, j - tau);
  const std::int64_t base = mod_floor(a, step);
  const std::int64_t target = mod_floor(c, pj1);
  std::vector<std::int64_t> lifts;
  for (std::int64_t b = base; b < pj1; b += step) {
    if (residue(spec, b, pj1) == target) lifts.push_back(b);
  }
  // The lifts must form one class modulo p^{j-tau+1}, p^tau residues in all.
  const std::int64_t expected = power_of(p, tau);
  bool single_class = !lifts.empty();
  for (const std::int64_t b : lifts) {
    if ((b - lifts.front()) % (step * p) != 0) single_class = false;
  }
  if (static_cast<std::int64_t>(lifts.size()) != expected || !single_class) {
    throw NumericFailure("hensel_lift: lift set does not have the expected shape");
  }
  return lifts;
}

BoundCheckReport cauchy_davenport_check(const std::vector<std::int64_t>& A,
                                        const std::vector<std::int64_t>& B,
                                        std::int64_t q) {
  if (!is_prime(q)) throw DomainError("Cauchy-Davenport needs a prime modulus");
  std::set<std::int64_t> a, b;
  for (const auto x : A) a.insert(mod_floor(x, q));
  for (const auto x : B) b.insert(mod_floor(x, q));
  if (a.empty()) throw DomainError("Cauchy-Davenport needs a nonempty A");
  if (!b.count(0)) throw DomainError("Cauchy-Davenport needs 0 in B");
  for (const auto x : b) {
    if (x != 0 && gcd(x, q) != 1) throw DomainError("nonzero b must be a unit");
  }
  std::set<std::int64_t> sum;
  for (const auto x : a) {
    for (const auto y : b) sum.insert((x + y) % q);
  }
  const auto bound = std::min<std::int64_t>(
      q, static_cast<std::int64_t>(a.size() + b.size()) - 1);
  const auto size = static_cast<std::int64_t>(sum.size());
  std::ostringstream ctx;
  ctx << "cauchy_davenport q=" << q << " |A|=" << a.size() << " |B|=" << b.size()
      << " |A+B|=" << size;
  return BoundCheckReport::exact(bound <= size, static_cast<double>(bound),
                                 static_cast<double>(size), ctx.str());
}

}  // namespace polywaring
