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

#include "polywaring/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "polywaring/errors.hpp"

namespace polywaring {
namespace {

using nlohmann::json;

// JSON has no infinities; non-finite values travel as strings.
json encode_double(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double decode_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    if (s == "nan") return std::nan("");
  }
  throw DomainError("malformed number in report JSON");
}

json to_json(const BoundCheckReport& b) {
  json j{{"lhs", encode_double(b.lhs)},
         {"rhs", encode_double(b.rhs)},
         {"holds", b.holds},
         {"context", b.context}};
  j["seed"] = b.seed ? json(*b.seed) : json(nullptr);
  return j;
}

BoundCheckReport bound_from_json(const json& j) {
  BoundCheckReport b;
  b.lhs = decode_double(j.at("lhs"));
  b.rhs = decode_double(j.at("rhs"));
  b.holds = j.at("holds").get<bool>();
  b.context = j.at("context").get<std::string>();
  if (j.contains("seed") && !j.at("seed").is_null()) b.seed = j.at("seed").get<std::uint64_t>();
  return b;
}

json to_json(const SeriesEstimate& s) {
  json per_prime = json::array();
  for (const auto& [p, v] : s.per_prime) per_prime.push_back({p, encode_double(v)});
  return json{{"truncated", encode_double(s.truncated)},
              {"imag_residue", encode_double(s.imag_residue)},
              {"Q", s.Q},
              {"euler_estimate", encode_double(s.euler_estimate)},
              {"per_prime", per_prime},
              {"tail_log", encode_double(s.tail_log)},
              {"tail_hypothesis_met", s.tail_hypothesis_met},
              {"positivity", to_string(s.positivity)},
              {"notes", s.notes}};
}

SeriesEstimate series_from_json(const json& j) {
  SeriesEstimate s;
  s.truncated = decode_double(j.at("truncated"));
  s.imag_residue = decode_double(j.at("imag_residue"));
  s.Q = j.at("Q").get<std::int64_t>();
  s.euler_estimate = decode_double(j.at("euler_estimate"));
  for (const auto& e : j.at("per_prime")) {
    s.per_prime.emplace_back(e.at(0).get<std::int64_t>(), decode_double(e.at(1)));
  }
  s.tail_log = decode_double(j.at("tail_log"));
  s.tail_hypothesis_met = j.at("tail_hypothesis_met").get<bool>();
  s.positivity = j.at("positivity").get<std::string>() == to_string(Positivity::kCertifiedHeuristic)
                     ? Positivity::kCertifiedHeuristic
                     : Positivity::kIndeterminate;
  s.notes = j.at("notes").get<std::vector<std::string>>();
  return s;
}

json to_json(const ComparisonReport& r) {
  json checks = json::array();
  for (const auto& b : r.bound_checks) checks.push_back(to_json(b));
  json j{{"spec", r.spec},
         {"m", r.m},
         {"s", r.s},
         {"N", r.N},
         {"delta", {{"num", r.delta.num}, {"den", r.delta.den}}},
         {"major_error", encode_double(r.major_error)},
         {"major_imag", encode_double(r.major_imag)},
         {"main_term", encode_double(r.main_term)},
         {"ratio", encode_double(r.ratio)},
         {"series", to_json(r.series)},
         {"bound_checks", checks},
         {"checks_passed", r.checks_passed()},
         {"notes", r.notes}};
  j["exact_count"] = r.exact_count ? json(r.exact_count->get_str()) : json(nullptr);
  j["major_value"] = r.major_value ? encode_double(*r.major_value) : json(nullptr);
  j["minor_residual"] = r.minor_residual ? encode_double(*r.minor_residual) : json(nullptr);
  return j;
}

ComparisonReport report_from(const json& j) {
  ComparisonReport r;
  r.spec = j.at("spec").get<std::string>();
  r.m = j.at("m").get<std::int64_t>();
  r.s = j.at("s").get<int>();
  r.N = j.at("N").get<std::int64_t>();
  r.delta = {j.at("delta").at("num").get<std::int64_t>(),
             j.at("delta").at("den").get<std::int64_t>()};
  if (!j.at("exact_count").is_null()) {
    r.exact_count = parse_bigint(j.at("exact_count").get<std::string>());
  }
  if (!j.at("major_value").is_null()) r.major_value = decode_double(j.at("major_value"));
  r.major_error = decode_double(j.at("major_error"));
  r.major_imag = decode_double(j.at("major_imag"));
  r.main_term = decode_double(j.at("main_term"));
  if (!j.at("minor_residual").is_null()) r.minor_residual = decode_double(j.at("minor_residual"));
  r.ratio = decode_double(j.at("ratio"));
  r.series = series_from_json(j.at("series"));
  for (const auto& b : j.at("bound_checks")) r.bound_checks.push_back(bound_from_json(b));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid report JSON: ") + e.what());
  }
}

}  // namespace

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string report_csv_row(const ComparisonReport& r) {
  std::ostringstream os;
  os << r.m << ',' << r.s << ',' << csv_field(r.spec) << ','
     << (r.exact_count ? r.exact_count->get_str() : std::string()) << ','
     << format_double(r.main_term) << ',' << format_double(r.ratio) << ','
     << format_double(r.series.truncated) << ',' << format_double(r.series.euler_estimate)
     << ',' << (r.minor_residual ? format_double(*r.minor_residual) : std::string()) << ','
     << (r.checks_passed() ? "true" : "false");
  return os.str();
}

std::string reports_to_csv(const std::vector<ComparisonReport>& rows) {
  std::string out = std::string(kReportCsvHeader) + "\n";
  for (const auto& r : rows) out += report_csv_row(r) + "\n";
  return out;
}

std::string report_to_json(const ComparisonReport& r) {
  return to_json(r).dump(2);
}

std::string reports_to_json(const std::vector<ComparisonReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr.dump(2);
}

ComparisonReport report_from_json(const std::string& text) {
  try {
    return report_from(parse(text));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
}

std::vector<ComparisonReport> reports_from_json(const std::string& text) {
  try {
    const json j = parse(text);
    std::vector<ComparisonReport> out;
    for (const auto& e : j) out.push_back(report_from(e));
    return out;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace polywaring
