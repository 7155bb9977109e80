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
#include <random>
#include <string>

#include "mwt/grid.hpp"

namespace mwt::states {

/// pi^{-1/4} exp(-(x - x0)^2 / (2 s^2)) / sqrt(s), unit norm on R.
SampledFunction1D gaussian(const Grid1D& g, double x0 = 0.0, double s = 1.0);

/// Normalized oscillator eigenfunction (2^m m! sqrt(pi))^{-1/2} H_m(x) e^{-x^2/2},
/// evaluated by the stable three-term recurrence.
SampledFunction1D hermite(const Grid1D& g, int m);

/// Coherent state centered at (x0, p0): pi^{-1/4} exp(-(x-x0)^2/2 + i p0 x).
SampledFunction1D coherent(const Grid1D& g, double x0, double p0);

/// Chirped Gaussian pi^{-1/4} exp(-(1 - i c) x^2 / 2), unit norm on R.
SampledFunction1D chirp(const Grid1D& g, double c);

/// Parses "gaussian", "hermite:M", "coherent:X0,P0" or "chirp:C".
SampledFunction1D from_spec(const Grid1D& g, const std::string& spec);

/// Random Gaussian-class state: a random combination of a few displaced,
/// chirped Gaussians well inside the box, normalized to 1.
SampledFunction1D random_smooth(const Grid1D& g, std::mt19937_64& rng);

/// Random Gaussian-class phase-space function on (gx, gp) (not normalized).
PhaseFunction2D random_smooth_2d(const Grid1D& gx, const Grid1D& gp, std::mt19937_64& rng);

}  // namespace mwt::states
