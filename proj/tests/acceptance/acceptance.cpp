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

// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  namespace ps = polywaring::suite;
  CLI::App app{"polywaring acceptance suite"};
  ps::SuiteOptions opts;
  bool quick = false;
  bool verbose = false;
  app.add_option("--seed", opts.seed, "master seed")->capture_default_str();
  app.add_flag("--quick", quick, "reduced ranges");
  app.add_option("--only", opts.only, "criteria to run")->delimiter(',');
  app.add_option("--threads", opts.determinism_threads, "thread counts for the determinism criterion")
      ->delimiter(',');
  app.add_flag("--verbose", verbose, "print per-criterion details");
  CLI11_PARSE(app, argc, argv);
  opts.profile = quick ? ps::Profile::kQuick : ps::Profile::kFull;

  std::cout << "# acceptance profile=" << ps::profile_name(opts.profile) << " seed=" << opts.seed << "\n";
  const auto results = ps::run_suite(opts);
  int failed = 0;
  for (const auto& r : results) {
    const bool ok = r.passed && r.within_time();
    failed += ok ? 0 : 1;
    char timing[64];
    if (r.time_limit) {
      std::snprintf(timing, sizeof timing, " [%.1fs, limit %.0fs]", r.seconds, *r.time_limit);
    } else {
      std::snprintf(timing, sizeof timing, " [%.1fs]", r.seconds);
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.title << ": " << r.summary
              << timing << (r.passed && !r.within_time() ? " (over time limit)" : "") << "\n";
    if (verbose || !ok) {
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    }
  }
  std::cout << "# " << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
