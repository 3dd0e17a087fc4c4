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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polywaring/arcs.hpp"
#include "polywaring/errors.hpp"
#include "polywaring/figurate.hpp"
#include "polywaring/localdensity.hpp"
#include "polywaring/parallel.hpp"
#include "polywaring/repcount.hpp"
#include "polywaring/report.hpp"
#include "polywaring/singularintegral.hpp"
#include "polywaring/singularseries.hpp"
#include "suite.hpp"

namespace pw = polywaring;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitSuiteFailure = 3;

struct RunConfig {
  std::string command;
  std::string spec = "{3,4,3}";
  std::vector<std::string> spec_tokens;
  int s = 17;
  std::int64_t m = 1;
  std::vector<std::int64_t> m_ladder;
  std::int64_t n = 1;
  std::int64_t p = 2;
  int k = 0;
  std::int64_t Q = 50;
  std::int64_t prime_limit = 50;
  std::string delta;
  std::string profile = "quick";
  std::vector<int> only;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::uint64_t budget = pw::Budget::kDefaultMaxOps;
};

pw::FigurateSpec parse_spec(const std::string& text) {
  if (text.empty()) throw pw::DomainError("empty spec");
  if (text.front() == '{' || text.front() == 'f') return pw::catalog(text);
  std::vector<std::int64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw pw::DomainError("spec must be a Schlafli symbol, f1..f3 or A,B,C: '" + text + "'");
    }
  }
  if (parts.size() != 3) throw pw::DomainError("spec must have three coefficients A,B,C");
  return pw::make_spec(parts[0], parts[1], parts[2], text);
}

pw::Rational parse_delta(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw pw::DomainError("delta must be num/den");
  try {
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  } catch (const std::logic_error&) {
    throw pw::DomainError("delta must be num/den");
  }
}

std::string g(double x) { return pw::format_double(x); }

// Thread count is deliberately absent: outputs must not depend on it.
json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"format", c.format}, {"seed", c.seed}, {"budget", c.budget}};
  if (c.command == "check-suite") {
    j["profile"] = c.profile;
    j["only"] = c.only;
    return j;
  }
  j["spec"] = c.spec;
  if (c.command == "eval") {
    j["n"] = c.n;
    return j;
  }
  j["s"] = c.s;
  if (c.m_ladder.empty()) j["m"] = c.m; else j["m_ladder"] = c.m_ladder;
  if (c.command == "local") { j["p"] = c.p; j["k"] = c.k; }
  if (c.command == "series" || c.command == "report") { j["Q"] = c.Q; j["prime_limit"] = c.prime_limit; }
  if (!c.delta.empty()) j["delta"] = c.delta;
  return j;
}

std::string config_line(const RunConfig& c) {
  std::string out = "# polywaring";
  const json config = config_json(c);
  for (const auto& [key, value] : config.items()) {
    out += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out + "\n";
}

// Wraps a result as text (config comment then body) or JSON.
std::string emit(const RunConfig& c, const std::string& text_body, const json& result) {
  if (c.format == "json") return json{{"config", config_json(c)}, {"result", result}}.dump(2) + "\n";
  return config_line(c) + text_body;
}

std::vector<std::int64_t> m_values(const RunConfig& c) {
  return c.m_ladder.empty() ? std::vector<std::int64_t>{c.m} : c.m_ladder;
}

int cmd_eval(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  const auto v = pw::eval(spec, c.n);
  out = emit(c, pw::to_string(v) + "\n", json{{"n", c.n}, {"value", pw::to_string(v)}});
  return kExitOk;
}

int cmd_count(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  pw::Budget budget{c.budget};
  std::string text;
  json rows = json::array();
  const auto ms = m_values(c);
  if (c.format == "csv") text = "m,s,count\n";
  for (auto m : ms) {
    const auto r = pw::count_representations(spec, c.s, m, budget);
    if (c.format == "csv") {
      text += std::to_string(m) + "," + std::to_string(c.s) + "," + r.get_str() + "\n";
    } else {
      text += (ms.size() > 1 ? std::to_string(m) + " " : std::string()) + r.get_str() + "\n";
    }
    rows.push_back({{"m", m}, {"count", r.get_str()}});
  }
  out = emit(c, text, rows);
  return kExitOk;
}

int cmd_series(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  std::string text = c.format == "csv" ? "m,Q,truncated,imag_residue,euler_estimate,positivity\n" : "";
  json rows = json::array();
  for (auto m : m_values(c)) {
    const auto t = pw::truncated_series(spec, c.s, m, c.Q);
    const auto e = pw::euler_product(spec, c.s, m, c.prime_limit);
    json per_prime = json::array();
    for (const auto& [p, v] : e.per_prime) per_prime.push_back({{"p", p}, {"density", v}});
    rows.push_back({{"m", m},
                    {"Q", t.Q},
                    {"truncated", t.truncated},
                    {"imag_residue", t.imag_residue},
                    {"tail_log", t.tail_log},
                    {"euler_estimate", e.euler_estimate},
                    {"per_prime", per_prime},
                    {"positivity", pw::to_string(e.positivity)},
                    {"notes", e.notes}});
    if (c.format == "csv") {
      text += std::to_string(m) + "," + std::to_string(t.Q) + "," + g(t.truncated) + "," + g(t.imag_residue) + "," +
              g(e.euler_estimate) + "," + pw::to_string(e.positivity) + "\n";
    } else {
      text += "m=" + std::to_string(m) + " truncated(Q=" + std::to_string(t.Q) + ")=" + g(t.truncated) +
              " euler(p<=" + std::to_string(c.prime_limit) + ")=" + g(e.euler_estimate) +
              " positivity=" + pw::to_string(e.positivity) + "\n";
      for (const auto& [p, v] : e.per_prime) text += "  T(" + std::to_string(p) + ")=" + g(v) + "\n";
      for (const auto& n : e.notes) text += "  note: " + n + "\n";
    }
  }
  out = emit(c, text, rows);
  return kExitOk;
}

int cmd_local(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  const auto r = pw::local_density_limit(spec, c.s, c.m, c.p, c.k);
  json levels = json::array();
  std::string text = c.format == "csv" ? "k,rho\n" : "";
  for (const auto& [k, v] : r.levels) {
    levels.push_back({{"k", k}, {"rho", v}});
    text += c.format == "csv" ? std::to_string(k) + "," + g(v) + "\n"
                              : "k=" + std::to_string(k) + " rho=" + g(v) + "\n";
  }
  if (c.format != "csv") {
    text += std::string("stabilized=") + (r.stabilized ? "true" : "false") + " estimate=" + g(r.estimate) +
            " lower_bound=" + g(r.lower_bound) + " violated=" + (r.lower_bound_violated ? "true" : "false") + "\n";
  }
  out = emit(c, text,
             json{{"p", r.p}, {"levels", levels}, {"stabilized", r.stabilized}, {"estimate", r.estimate},
                  {"lower_bound", r.lower_bound}, {"lower_bound_violated", r.lower_bound_violated}});
  return kExitOk;
}

int cmd_integral(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  std::string text = c.format == "csv" ? "m,s,J1,gamma_factor,main_term_unit_series\n" : "";
  json rows = json::array();
  for (auto m : m_values(c)) {
    if (m > 20000) throw pw::DomainError("integral: exact J1 limited to m <= 20000");
    const double j1 = pw::j1_exact(c.s, m);
    const double gf = pw::gamma_factor(c.s, static_cast<double>(m));
    const double mt = pw::main_term({spec.A, c.s, static_cast<double>(m), 1.0});
    rows.push_back({{"m", m}, {"J1", j1}, {"gamma_factor", gf}, {"main_term_unit_series", mt}});
    text += c.format == "csv" ? std::to_string(m) + "," + std::to_string(c.s) + "," + g(j1) + "," + g(gf) + "," + g(mt) + "\n"
                              : "m=" + std::to_string(m) + " J1=" + g(j1) + " gamma_factor=" + g(gf) +
                                    " main_term(series=1)=" + g(mt) + "\n";
  }
  out = emit(c, text, rows);
  return kExitOk;
}

int cmd_arcs(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  const std::int64_t N = pw::choose_N(spec.A, c.m);
  const pw::Rational delta = !c.delta.empty() ? parse_delta(c.delta)
                             : c.s >= 9      ? pw::optimal_delta(c.s)
                                             : pw::Rational{73, 372};
  const auto d = pw::dissect(N, delta);
  const bool disjoint = pw::dissection_disjoint(d);
  json arcs = json::array();
  std::string text = "N=" + std::to_string(N) + " delta=" + std::to_string(delta.num) + "/" +
                     std::to_string(delta.den) + " P=" + g(d.P) + " halfwidth=" + g(d.halfwidth) +
                     " arcs=" + std::to_string(d.arcs.size()) + " disjoint=" + (disjoint ? "true" : "false") + "\n";
  for (const auto& a : d.arcs) arcs.push_back({{"a", a.a}, {"q", a.q}});
  json result{{"N", N}, {"delta", {{"num", delta.num}, {"den", delta.den}}}, {"P", d.P},
              {"halfwidth", d.halfwidth}, {"arcs", arcs}, {"disjoint", disjoint}};
  if (N <= 60) {
    const auto major = pw::major_arc_integral(spec, c.s, c.m, d);
    const auto minor = pw::minor_arc_integral(spec, c.s, c.m, d);
    const auto exact = pw::count_representations(spec, c.s, c.m, pw::Budget{c.budget});
    text += "major=" + g(major.value.real()) + " (+/- " + g(major.error) + ") minor=" + g(minor.value.real()) +
            " (+/- " + g(minor.error) + ") sum=" + g((major.value + minor.value).real()) +
            " exact=" + exact.get_str() + "\n";
    result["major"] = major.value.real();
    result["major_error"] = major.error;
    result["minor"] = minor.value.real();
    result["minor_error"] = minor.error;
    result["exact"] = exact.get_str();
  }
  out = emit(c, text, result);
  return kExitOk;
}

int cmd_report(const RunConfig& c, std::string& out) {
  const auto spec = parse_spec(c.spec);
  pw::ReportOptions ro;
  ro.prime_limit = c.prime_limit;
  ro.series_Q = c.Q;
  ro.budget = pw::Budget{c.budget};
  if (!c.delta.empty()) ro.delta = parse_delta(c.delta);
  std::vector<pw::ComparisonReport> rows;
  for (auto m : m_values(c)) rows.push_back(pw::asymptotic_report(spec, c.s, m, ro));
  if (c.format == "json") {
    out = json{{"config", config_json(c)}, {"result", json::parse(pw::reports_to_json(rows))}}.dump(2) + "\n";
  } else {
    out = config_line(c) + pw::reports_to_csv(rows);
  }
  return kExitOk;
}

int cmd_check_suite(const RunConfig& c, std::string& out) {
  pw::suite::SuiteOptions so;
  so.seed = c.seed;
  if (c.profile != "quick" && c.profile != "full") throw pw::DomainError("profile must be quick or full");
  so.profile = c.profile == "full" ? pw::suite::Profile::kFull : pw::suite::Profile::kQuick;
  so.only.insert(c.only.begin(), c.only.end());
  for (int id : so.only) pw::suite::criterion_title(id);
  // The determinism criterion re-runs the suite; keep it opt-in here.
  if (so.only.empty()) {
    for (int id = 1; id < pw::suite::kCriterionCount; ++id) so.only.insert(id);
  }
  const auto results = pw::suite::run_suite(so);
  bool ok = true;
  json rows = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary},
                    {"details", r.details}});
  }
  out = emit(c, pw::suite::render(results), rows);
  return ok ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation counts and circle-method diagnostics for 4-polytope numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Master seed for randomized checks");
  app.add_option("--threads", cfg.threads, "Worker threads (default POLYWARING_THREADS or 1)");
  app.add_option("--budget", cfg.budget, "Operation cap for exact DP and convolutions");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output", cfg.output, "Write output to this file instead of stdout");

  // An unquoted {3,4,3} reaches us brace-expanded as three tokens.
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_tokens, "Schlafli symbol, f1..f3 or A,B,C")->expected(1, 3);
  };
  auto add_sm = [&](CLI::App* sub) {
    sub->add_option("--s", cfg.s, "Number of summands")->check(CLI::Range(1, 64));
    auto* m = sub->add_option("--m", cfg.m, "Target integer")->check(CLI::PositiveNumber);
    sub->add_option("--m-ladder", cfg.m_ladder, "Several targets, one row each")->delimiter(',')->excludes(m);
  };

  auto* eval = app.add_subcommand("eval", "Evaluate f(n)");
  add_spec(eval);
  eval->add_option("--n", cfg.n, "Index")->required()->check(CLI::NonNegativeNumber);
  auto* count = app.add_subcommand("count", "Exact representation count R_{f,s}(m)");
  add_spec(count);
  add_sm(count);
  auto* series = app.add_subcommand("series", "Truncated singular series and Euler product");
  add_spec(series);
  add_sm(series);
  series->add_option("--Q", cfg.Q, "Truncation point")->check(CLI::PositiveNumber);
  series->add_option("--prime-limit", cfg.prime_limit, "Largest prime in the Euler product")->check(CLI::PositiveNumber);
  auto* local = app.add_subcommand("local", "Local density at a prime");
  add_spec(local);
  add_sm(local);
  local->add_option("--p", cfg.p, "Prime")->required();
  local->add_option("--k", cfg.k, "Highest level (0 chooses automatically)")->check(CLI::NonNegativeNumber);
  auto* integral = app.add_subcommand("integral", "Singular integral J1 and the Gamma factor");
  add_spec(integral);
  add_sm(integral);
  auto* arcs = app.add_subcommand("arcs", "Major-arc dissection and arc integrals");
  add_spec(arcs);
  add_sm(arcs);
  arcs->add_option("--delta", cfg.delta, "Arc exponent as num/den");
  auto* report = app.add_subcommand("report", "Exact count against the asymptotic main term");
  add_spec(report);
  add_sm(report);
  report->add_option("--Q", cfg.Q, "Truncation point of the q-series")->check(CLI::PositiveNumber);
  report->add_option("--prime-limit", cfg.prime_limit, "Largest prime in the Euler product")->check(CLI::PositiveNumber);
  report->add_option("--delta", cfg.delta, "Arc exponent as num/den");
  auto* suite = app.add_subcommand("check-suite", "Run the acceptance checks");
  suite->add_option("--profile", cfg.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--only", cfg.only, "Criterion ids to run (17 compares thread counts)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.spec_tokens.size() == 3) {
    cfg.spec = "{" + cfg.spec_tokens[0] + "," + cfg.spec_tokens[1] + "," + cfg.spec_tokens[2] + "}";
  } else if (cfg.spec_tokens.size() == 1) {
    cfg.spec = cfg.spec_tokens[0];
  } else if (!cfg.spec_tokens.empty()) {
    std::cerr << "error: --spec takes a symbol, f1..f3, A,B,C or three Schlafli entries\n";
    return kExitError;
  }
  if (cfg.threads > 0) pw::set_thread_count(cfg.threads);

  try {
    std::string out;
    int code = kExitOk;
    if (cfg.command == "eval") code = cmd_eval(cfg, out);
    else if (cfg.command == "count") code = cmd_count(cfg, out);
    else if (cfg.command == "series") code = cmd_series(cfg, out);
    else if (cfg.command == "local") code = cmd_local(cfg, out);
    else if (cfg.command == "integral") code = cmd_integral(cfg, out);
    else if (cfg.command == "arcs") code = cmd_arcs(cfg, out);
    else if (cfg.command == "report") code = cmd_report(cfg, out);
    else code = cmd_check_suite(cfg, out);

    if (cfg.output.empty()) {
      std::cout << out << std::flush;
      if (!std::cout) return kExitError;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      file << out;
      file.close();
      if (!file) {
        std::cerr << "error: cannot write " << cfg.output << "\n";
        return kExitError;
      }
    }
    return code;
  } catch (const pw::BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
