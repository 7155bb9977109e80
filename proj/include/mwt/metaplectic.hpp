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

#include <Eigen/Dense>
#include <vector>

#include "mwt/grid.hpp"

namespace mwt {

/// Primitive area-preserving maps of the (x, xi_p) plane:
///   shear_x(b):        (x, xi) -> (x + b xi, xi)
///   shear_xi(c):       (x, xi) -> (x, xi + c x)
///   quarter_turn:      (x, xi) -> (xi, -x)
///   inverse_quarter:   (x, xi) -> (-xi, x)
enum class FactorKind { shear_x, shear_xi, quarter_turn, inverse_quarter_turn };

struct ShearFactor {
  FactorKind kind;
  double amount = 0.0;  // b or c for shears, unused otherwise

  Eigen::Matrix2d matrix() const;
};

/// Ordered factors whose matrix product equals the target map.
struct ShearFactorization {
  std::vector<ShearFactor> factors;

  Eigen::Matrix2d product() const;
  /// Largest |amount| over the shear factors.
  double max_shear() const;
};

/// Factors A as shear_x(b) shear_xi(c) shear_x(d), optionally preceded by a
/// quarter turn in either direction. Among the candidates whose pivot
/// (the lower-left entry) exceeds pivot_threshold in magnitude, the one with
/// the smallest largest shear is chosen; this keeps interpolation errors of
/// the chirp steps small. allow_turns = false restricts to the plain form.
/// Throws InternalError when no candidate qualifies.
ShearFactorization factorize_shears(const Eigen::Matrix2d& A, bool allow_turns = true,
                                    double pivot_threshold = 1e-3);

/// The coordinate map of T(theta): the (x, xi_p) block of flow_matrix(-theta).
Eigen::Matrix2d coordinate_map(double theta);

enum class TMethod { spectral, resample };
enum class Interpolation { trigonometric, cubic };

/// (T(theta) Phi)(x, xi) = Phi(A (x, xi)) with A = coordinate_map(theta).
/// Phi lives on (x, xi_p) grids that must be symmetric about 0. The spectral
/// path realizes each shear as FFT, cross-chirp multiply, inverse FFT and is
/// unitary on the grid; quarter turns are index permutations and need the two
/// axes to share nodes. The resample path evaluates Phi at the mapped nodes
/// by periodic interpolation and is meant as an independent reference.
PhaseFunction2D apply_T(const PhaseFunction2D& phi, double theta, TMethod method = TMethod::spectral,
                        Interpolation interp = Interpolation::trigonometric);

/// Applies a factorization directly (first factor first).
PhaseFunction2D apply_factorization(const PhaseFunction2D& phi, const ShearFactorization& f);
/// Exact inverse of apply_factorization on the grid.
PhaseFunction2D apply_factorization_inverse(const PhaseFunction2D& phi, const ShearFactorization& f);

/// U(theta) = F^{-1}_{xi_p -> p} T(theta) F_{p -> xi_p}.
PhaseFunction2D apply_U(const PhaseFunction2D& psi, double theta);

/// Exact discrete inverse (the adjoint) of apply_U. Agrees with apply_U(-theta)
/// within the interpolation budget of the spectral path.
PhaseFunction2D apply_U_inverse(const PhaseFunction2D& psi, double theta);

/// Generator H with U(theta) = exp(-i theta H). Applied in the partial Fourier
/// domain as
///   -2i xi D_x + (i/2)(x D_x + D_x x) - (i/2)(xi D_xi + D_xi xi) + 4i x D_xi
/// with spectral derivatives; the symmetrized terms equal i x D_x and
/// -i xi D_xi up to constants that cancel, and make the grid operator exactly
/// self-adjoint.
PhaseFunction2D apply_generator(const PhaseFunction2D& psi);

}  // namespace mwt
