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

#include "polywaring/singularseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "polywaring/errors.hpp"
#include "polywaring/expsums.hpp"
#include "polywaring/localdensity.hpp"
#include "polywaring/numeric.hpp"
#include "polywaring/parallel.hpp"

namespace polywaring {

std::string to_string(Positivity verdict) {
  return verdict == Positivity::kCertifiedHeuristic ? "certified-heuristic"
                                                    : "indeterminate";
}

std::vector<Complex> series_terms(const FigurateSpec& spec, int s,
                                  std::int64_t m, std::int64_t Q) {
  if (Q < 1) throw DomainError("series truncation needs Q >= 1");
  std::vector<Complex> terms(static_cast<std::size_t>(Q) + 1);
  parallel_for(static_cast<std::size_t>(Q), [&](std::size_t i) {
    const auto q = static_cast<std::int64_t>(i) + 1;
    terms[q] = v_of_q(spec, q, s, m);
  });
  return terms;
}

SeriesEstimate truncated_series(const FigurateSpec& spec, int s,
                                std::int64_t m, std::int64_t Q) {
  const auto terms = series_terms(spec, s, m, Q);
  ComplexSum acc;
  for (std::int64_t q = 1; q <= Q; ++q) acc.add(terms[q]);
  SeriesEstimate out;
  out.Q = Q;
  out.truncated = acc.value().real();
  out.imag_residue = acc.value().imag();
  if (std::abs(out.imag_residue) > 1e-8 * (1.0 + std::abs(out.truncated))) {
    out.notes.push_back("imaginary residue above 1e-8");
  }
  if (s >= 17) {
    out.tail_log = tail_bound_log(spec.A, s, static_cast<double>(Q));
    out.notes.push_back("tail bound hypothesis N^delta >= e^{e^467} unmet; "
                        "tail_log shown for display");
  } else {
    out.tail_log = std::numeric_limits<double>::quiet_NaN();
    out.notes.push_back("tail bound requires s >= 17");
  }
  return out;
}

BoundCheckReport divisor_sum_identity_check(const FigurateSpec& spec, int s,
                                            std::int64_t m, std::int64_t q) {
  if (q < 1 || q > 30) throw DomainError("divisor-sum identity needs 1 <= q <= 30");
  if (s < 1) throw DomainError("divisor-sum identity needs s >= 1");
  ComplexSum lhs;
  for (std::int64_t d = 1; d <= q; ++d) {
    if (q % d == 0) lhs.add(v_of_q(spec, d, s, m));
  }
  const BigInt M = count_congruence(spec, s, m, 24 * q, q);
  BigInt den, t;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(s - 1));
  mpz_ui_pow_ui(t.get_mpz_t(), 24, static_cast<unsigned long>(s));
  den *= t;
  const double rhs = ratio_to_double(M, den);
  const double diff = std::abs(lhs.value() - Complex(rhs, 0.0));
  std::ostringstream ctx;
  ctx.precision(17);
  ctx << "divisor_sum_identity spec=" << spec.label << " s=" << s << " m=" << m
      << " q=" << q << " sum_V=" << lhs.value().real() << " density=" << rhs;
  return BoundCheckReport::make(diff, 1e-8, ctx.str());
}

SeriesEstimate euler_product(const FigurateSpec& spec, int s, std::int64_t m,
                             std::int64_t prime_limit, int k_max) {
  SeriesEstimate out;
  out.euler_estimate = 1.0;
  if (s < 17) out.notes.push_back("s < 17: outside the convergence regime");
  const auto primes = primes_upto(prime_limit);
  std::vector<DensityReport> reports(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    reports[i] = local_density_limit(spec, s, m, primes[i], k_max);
  });
  bool all_good = true;
  for (const auto& r : reports) {
    out.per_prime.emplace_back(r.p, r.estimate);
    out.euler_estimate *= r.estimate;
    if (!r.stabilized || !(r.estimate > 0.0)) {
      all_good = false;
      out.notes.push_back("factor at p=" + std::to_string(r.p) +
                          (r.stabilized ? " not positive" : " not stabilized"));
    }
    if (r.lower_bound_violated) {
      out.notes.push_back("lower bound violated at p=" + std::to_string(r.p));
    }
  }
  if (prime_limit >= 1) {
    const auto series = truncated_series(spec, s, m, std::max<std::int64_t>(prime_limit, 1));
    out.truncated = series.truncated;
    out.imag_residue = series.imag_residue;
    out.Q = series.Q;
    out.tail_log = series.tail_log;
    const double gap = std::abs(series.truncated - out.euler_estimate);
    if (gap > 0.1 * std::abs(out.euler_estimate)) {
      all_good = false;
      out.notes.push_back("q-series and Euler product differ by more than 10%");
    }
  }
  out.positivity = (all_good && out.euler_estimate > 0.0)
                       ? Positivity::kCertifiedHeuristic
                       : Positivity::kIndeterminate;
  return out;
}

double tail_bound_log(std::int64_t A, int s, double Q) {
  if (s < 17) throw DomainError("tail bound needs s >= 17");
  if (!(Q >= 1.0)) throw DomainError("tail bound needs Q >= 1");
  if (A < 1) throw DomainError("tail bound needs A >= 1");
  const double e = 9.0 * s / 73.0 - 2.0;
  return s * std::log(52.0 * std::pow(static_cast<double>(A), 0.25)) -
         std::log(e) - e * std::log(Q);
}

namespace {

LowerBoundRecord make_record(std::int64_t A, int s, int tau, bool with_tau) {
  if (s < 17) throw DomainError("lower bound record needs s >= 17");
  LowerBoundRecord r;
  r.s = s;
  r.tau = tau;
  r.includes_tau = with_tau;
  // log z = (73/(9s-21)) log(2 e^{s e^932} + 1); the +1 and the factor 2
  // change log log z by far less than one ulp.
  r.log_log_z = std::log(73.0 / (9.0 * s - 21.0)) + std::log(static_cast<double>(s)) + 932.0;
  // -log bound = z^2 log 2/(9s-146) + (12 tau + 1.03 z)(s-1), dominated by z^2.
  r.log_log_neg_log_bound = std::log(2.0) + r.log_log_z;
  std::ostringstream os;
  os.precision(10);
  os << "A=" << A << " s=" << s;
  if (with_tau) os << " tau=" << tau;
  os << ": S(m) >= 2^{z^2/(146-9s)} exp((" << (with_tau ? "12 tau + " : "")
     << "1.03 z)(1-s)), z=(2e^{s e^932}+1)^{73/(9s-21)}, log log z = "
     << r.log_log_z << ", log log(-log bound) ~ " << r.log_log_neg_log_bound;
  r.display = os.str();
  return r;
}

}  // namespace

LowerBoundRecord lower_bound_record(std::int64_t A, int s, int tau) {
  return make_record(A, s, tau, true);
}

LowerBoundRecord lower_bound_record_catalog(std::int64_t A, int s) {
  return make_record(A, s, 0, false);
}

}  // namespace polywaring
