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

#include <stdexcept>
#include <string>

namespace mwt {

/// Invalid user input: bad grids, mismatched shapes, unsupported options.
class ConfigurationError : public std::invalid_argument {
 public:
  explicit ConfigurationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A condition the library should have prevented (e.g. no usable shear plan).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Numerical breakdown: non-convergence, instability, loss of self-adjointness.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Emits a warning line on stderr unless MWT_QUIET is set.
void warn(const std::string& message);

}  // namespace mwt
