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

#include <string>
#include <vector>

#include "polywaring/arcs.hpp"

namespace polywaring {

inline constexpr const char* kReportCsvHeader =
    "m,s,spec,exact,main_term,ratio,series_truncated,euler_estimate,"
    "minor_residual,checks_passed";

// RFC 4180 quoting where needed.
std::string csv_field(const std::string& raw);
std::string format_double(double x);

std::string report_csv_row(const ComparisonReport& r);
std::string reports_to_csv(const std::vector<ComparisonReport>& rows);

// Counts are decimal strings; doubles use round-trip precision.
std::string report_to_json(const ComparisonReport& r);
std::string reports_to_json(const std::vector<ComparisonReport>& rows);
ComparisonReport report_from_json(const std::string& text);
std::vector<ComparisonReport> reports_from_json(const std::string& text);

}  // namespace polywaring
