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

#include "mwt/grid.hpp"

namespace mwt::detail {

/// Spectral derivatives and coordinate multiplications on PhaseFunction2D.
PhaseFunction2D derivative_x(const PhaseFunction2D& f);
PhaseFunction2D derivative_p(const PhaseFunction2D& f);
PhaseFunction2D times_x(const PhaseFunction2D& f);
PhaseFunction2D times_p(const PhaseFunction2D& f);

}  // namespace mwt::detail
