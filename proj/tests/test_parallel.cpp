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

#include <gtest/gtest.h>

#include <atomic>

#include "mwt/metaplectic.hpp"
#include "mwt/parallel.hpp"
#include "mwt/states.hpp"
#include "test_util.hpp"

using namespace mwt;

namespace {

TEST(Parallel, EachIndexOnce) {
  const std::size_t saved = thread_count();
  for (std::size_t t : {1u, 2u, 3u, 8u}) {
    set_thread_count(t);
    std::vector<std::atomic<int>> hits(1001);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    parallel_for(0, [&](std::size_t) { FAIL(); });
  }
  set_thread_count(saved);
}

TEST(Parallel, ResultsIndependentOfThreadCount) {
  const Grid1D g = Grid1D::self_dual(64);
  std::mt19937_64 rng(1);
  const PhaseFunction2D f = states::random_smooth_2d(g, g.dual(), rng);
  const std::size_t saved = thread_count();
  set_thread_count(1);
  const PhaseFunction2D a = apply_U(f, 0.7);
  set_thread_count(4);
  const PhaseFunction2D b = apply_U(f, 0.7);
  set_thread_count(saved);
  EXPECT_EQ(a.values, b.values);
}

}  // namespace
