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

#include "polywaring/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace polywaring {
namespace {

unsigned initial_threads() {
  if (const char* env = std::getenv("POLYWARING_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

std::atomic<unsigned>& threads() {
  static std::atomic<unsigned> value{initial_threads()};
  return value;
}

}  // namespace

unsigned thread_count() { return threads().load(); }

void set_thread_count(unsigned n) { threads().store(n == 0 ? 1 : n); }

}  // namespace polywaring
