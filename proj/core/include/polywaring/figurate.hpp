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
#include <string>
#include <string_view>
#include <vector>

#include "polywaring/bigint.hpp"

namespace polywaring {

// f(n) = A*C(n,4) + B*C(n,3) + C*C(n,2) + n.
struct FigurateSpec {
  std::int64_t A = 1;
  std::int64_t B = 0;
  std::int64_t C = 0;
  std::string label;
};

struct CatalogEntry {
  std::string schlafli;
  std::int64_t A;
  std::int64_t B;
  std::int64_t C;
};

FigurateSpec make_spec(std::int64_t A, std::int64_t B, std::int64_t C,
                       std::string label = {});

const std::vector<CatalogEntry>& catalog_entries();
// Accepts the Schlafli symbol or the aliases f1, f2, f3.
FigurateSpec catalog(std::string_view symbol);

// Largest n accepted by the exact evaluators (keeps 24 f(n) inside 128 bits).
inline constexpr std::int64_t kMaxEvalIndex = std::int64_t{1} << 26;

// Coefficients of 24 f(n) = c4 n^4 + c3 n^3 + c2 n^2 + c1 n.
struct Scaled24Coefficients {
  i128 c4, c3, c2, c1;
};
Scaled24Coefficients scaled24_coefficients(const FigurateSpec& spec);

i128 scaled24(const FigurateSpec& spec, std::int64_t n);
i128 eval(const FigurateSpec& spec, std::int64_t n);

// 12 f'(n), an integer for integral n.
i128 scaled12_derivative(const FigurateSpec& spec, std::int64_t n);

double eval_real(const FigurateSpec& spec, double t);
double eval_deriv(const FigurateSpec& spec, double t);

// f(n) mod q in [0, q), via 24 f(n mod 24q) mod 24q. Any n >= 0, q >= 1.
std::int64_t residue(const FigurateSpec& spec, std::int64_t n, std::int64_t q);

// max{n >= 0 : f(n) <= m}. Throws DomainError if f is seen to decrease.
std::int64_t max_index(const FigurateSpec& spec, i128 m);

}  // namespace polywaring
