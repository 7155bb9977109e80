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

namespace mwt {

/// Unit-norm window. Inputs are renormalized; a warning is emitted when the
/// supplied norm is off by more than 1e-6.
class Window {
 public:
  explicit Window(SampledFunction1D phi);
  /// The standard Gaussian pi^{-1/4} e^{-x^2/2}.
  static Window gaussian(const Grid1D& g);

  const SampledFunction1D& function() const { return phi_; }
  /// fourier_1d(phi), on the dual grid.
  const SampledFunction1D& transform() const { return phi_hat_; }
  const Grid1D& grid() const { return phi_.grid; }

 private:
  SampledFunction1D phi_;
  SampledFunction1D phi_hat_;
};

/// Angle reduced to [0, 2*pi/sqrt(7)). Special members: 0 (Kirkwood),
/// theta0 (Wigner) and 2*theta0 (standard-ordered).
class Theta {
 public:
  explicit Theta(double theta);
  static Theta wigner();
  double value() const { return value_; }

 private:
  double value_;
};

enum class HalfShift { trigonometric, upsampled };

/// Quadrature of the cross-Wigner integral
///   W(psi, phi)(x, p) = (2pi)^{-1} int e^{i p xi} psi(x - xi/2) conj phi(x + xi/2) dxi
/// on (grid, dual grid). Half-integer samples come from trigonometric
/// interpolation, either by direct kernel sums or by FFT upsampling. The
/// xi sum stops at the box edges (no wrap). Quadratic cost; used as oracle.
PhaseFunction2D wigner_direct(const SampledFunction1D& psi, const SampledFunction1D& phi,
                              HalfShift mode = HalfShift::trigonometric);

/// (2pi)^{-1/2} U(theta0) (psi (x) conj(phi^)).
PhaseFunction2D wigner_metaplectic(const SampledFunction1D& psi, const SampledFunction1D& phi);

/// (2pi)^{-1/2} U(theta) (psi (x) conj(phi^)).
PhaseFunction2D wigner_fractional(const SampledFunction1D& psi, const SampledFunction1D& phi, Theta theta);

/// Isometry psi -> U(theta)(psi (x) conj(phi^)).
PhaseFunction2D windowed_transform(const SampledFunction1D& psi, const Window& w, Theta theta);

/// Adjoint of windowed_transform: dp sum_m phi^(p_m) [U^{-1}(theta) Psi](x, p_m).
SampledFunction1D windowed_adjoint(const PhaseFunction2D& psi, const Window& w, Theta theta);

/// Orthogonal projection onto the range of windowed_transform.
PhaseFunction2D windowed_projection(const PhaseFunction2D& psi, const Window& w, Theta theta);

/// dp * sum_m W(x_j, p_m).
SampledFunction1D position_marginal(const PhaseFunction2D& w);

}  // namespace mwt
