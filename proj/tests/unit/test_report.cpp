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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "polywaring/arcs.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/report.hpp"

using namespace polywaring;

namespace {

ComparisonReport sample() {
  ComparisonReport r;
  r.spec = "{3,4,3}";
  r.m = 300000;
  r.s = 17;
  r.N = 14;
  r.delta = {73, 372};
  r.exact_count = BigInt("149937624236400123456789");
  r.main_term = 1.25e14;
  r.minor_residual = std::numeric_limits<double>::infinity();
  r.ratio = 0.1 + 0.2;
  r.series.truncated = 0.987654321;
  r.series.euler_estimate = 0.98;
  r.series.notes = {"a, \"quoted\" note"};
  r.bound_checks.push_back(BoundCheckReport::make(1.0, 2.0, "disjoint"));
  r.notes = {"first", "second"};
  return r;
}

}  // namespace

TEST_CASE("CSV fields") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("{3,4,3}") == "\"{3,4,3}\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("CSV rows") {
  const auto csv = reports_to_csv({sample(), sample()});
  const auto first_line = csv.substr(0, csv.find('\n'));
  CHECK(first_line == kReportCsvHeader);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const auto row = report_csv_row(sample());
  CHECK(row.rfind("300000,17,\"{3,4,3}\",149937624236400123456789,", 0) == 0);
}

TEST_CASE("JSON round trip") {
  const auto r = sample();
  const auto back = report_from_json(report_to_json(r));
  CHECK(back.spec == r.spec);
  CHECK(back.m == r.m);
  CHECK(back.s == r.s);
  CHECK(back.N == r.N);
  CHECK(back.delta == r.delta);
  REQUIRE(back.exact_count);
  CHECK(*back.exact_count == *r.exact_count);
  CHECK(back.main_term == r.main_term);
  CHECK(back.ratio == r.ratio);
  REQUIRE(back.minor_residual);
  CHECK(std::isinf(*back.minor_residual));
  CHECK(back.series.truncated == r.series.truncated);
  CHECK(back.series.notes == r.series.notes);
  REQUIRE(back.bound_checks.size() == 1);
  CHECK(back.bound_checks[0].holds);
  CHECK(back.notes == r.notes);

  ComparisonReport empty;
  empty.spec = "{5,3,3}";
  const auto e = report_from_json(report_to_json(empty));
  CHECK_FALSE(e.exact_count);
  CHECK_FALSE(e.major_value);
  const auto many = reports_from_json(reports_to_json({r, empty}));
  CHECK(many.size() == 2);
  CHECK_THROWS_AS(report_from_json("{not json"), DomainError);
}
