// Copyright 2026 The mwt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "mwt/error.hpp"
#include "mwt/parallel.hpp"

namespace mwt {
namespace {

std::size_t initial_threads() {
  const char* env = std::getenv("MWT_THREADS");
  if (env == nullptr) return 1;
  try {
    const long n = std::stol(env);
    return n > 0 ? static_cast<std::size_t>(n) : 1;
  } catch (...) {
    return 1;
  }
}

std::size_t& threads_ref() {
  static std::size_t n = initial_threads();
  return n;
}

}  // namespace

std::size_t thread_count() { return threads_ref(); }

void set_thread_count(std::size_t n) { threads_ref() = std::max<std::size_t>(1, n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t t = std::min(thread_count(), n);
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t block = (n + t - 1) / t;
  for (std::size_t w = 0; w < t; ++w) {
    const std::size_t lo = w * block, hi = std::min(n, lo + block);
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace mwt
