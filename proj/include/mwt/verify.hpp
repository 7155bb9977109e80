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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mwt::verify {

/// One numerical check. For upper bounds the check passes when
/// value <= tolerance; for lower bounds when value >= tolerance.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool upper = true;

  bool pass() const;
};

struct CriterionReport {
  int id = 0;
  std::string key;
  std::string title;
  std::vector<Check> checks;
  /// Reported quantities with no pass/fail meaning.
  std::vector<std::pair<std::string, double>> info;
  double seconds = 0.0;

  bool pass() const;
  /// "[PASS] 4 moyal  Moyal identity ...  worst: name=value (tol)".
  std::string summary_line() const;
};

struct CriterionInfo {
  int id;
  const char* key;
  const char* title;
};

/// The eleven acceptance criteria in order.
const std::vector<CriterionInfo>& criteria();

/// Accepts an id ("4") or a key ("moyal"); returns 0 when unknown.
int criterion_id(const std::string& name);

/// Runs one criterion. Tolerances are fixed in the implementation; the
/// seed only drives the random test data.
CriterionReport run_criterion(int id, std::uint64_t seed = 0);

}  // namespace mwt::verify
