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
#include <utility>

namespace mwt {

/// A point z = (x, p, xi_x, xi_p) of the double phase space. This coordinate
/// order is used everywhere in the library. The symplectic form is
///   sigma(z, z') = xi_x x' + xi_p p' - xi_x' x - xi_p' p,
/// i.e. sigma(z, z') = z^T J z' with J = [[0, -I], [I, 0]] in this order.
struct PhasePoint {
  double x = 0.0, p = 0.0, xi_x = 0.0, xi_p = 0.0;

  Eigen::Vector4d vec() const { return {x, p, xi_x, xi_p}; }
  static PhasePoint from(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }
};

/// Constants of the flow: k = sqrt(7), theta0 = arccos(3/4)/sqrt(7) and the
/// period 2*pi/sqrt(7).
struct FlowParams {
  static double k();
  static double theta0();
  static double period();
};

/// Real 4x4 linear map acting on (x, p, xi_x, xi_p).
struct FlowMatrix {
  Eigen::Matrix4d m;

  PhasePoint apply(const PhasePoint& z) const { return PhasePoint::from(m * z.vec()); }
  /// 2x2 block acting on (x, xi_p).
  Eigen::Matrix2d block_x_xip() const;
  /// 2x2 block acting on (p, xi_x).
  Eigen::Matrix2d block_p_xix() const;
};

/// sigma as a matrix: sigma(z, z') = z^T J z'.
Eigen::Matrix4d symplectic_J();

/// Closed-form solution of Hamilton's equations for the quadratic
/// Hamiltonian below; theta -> M(theta) is a one-parameter group.
FlowMatrix flow_matrix(double theta);

/// H = 2 xi_x xi_p - x xi_x - p xi_p + 4 x p.
double hamiltonian_value(const PhasePoint& z);

/// Hamiltonian vector field matrix: dz/dtheta = V z.
Eigen::Matrix4d hamiltonian_field_matrix();

/// (2x^2 + xi_p^2 - x xi_p, 2p^2 + xi_x^2 - p xi_x), as stated for the ellipse
/// level sets. Only their conservation along orbits is relied upon.
std::pair<double, double> level_invariants(const PhasePoint& z);

double symplectic_form(const PhasePoint& z, const PhasePoint& w);

}  // namespace mwt
