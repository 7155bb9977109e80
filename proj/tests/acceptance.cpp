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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances live in src/verify.cpp.

#include <cstdio>
#include <cstdlib>

#include "mwt/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  int failed = 0;
  for (const auto& c : mwt::verify::criteria()) {
    const auto r = mwt::verify::run_criterion(c.id, seed);
    std::printf("%s\n", r.summary_line().c_str());
    std::fflush(stdout);
    if (!r.pass()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(mwt::verify::criteria().size()) - failed,
              mwt::verify::criteria().size());
  return failed == 0 ? 0 : 1;
}
