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

#include "mwt/symplectic.hpp"

#include <cmath>

namespace mwt {

double FlowParams::k() { return std::sqrt(7.0); }
double FlowParams::theta0() { return std::acos(0.75) / std::sqrt(7.0); }
double FlowParams::period() { return 2.0 * M_PI / std::sqrt(7.0); }

Eigen::Matrix2d FlowMatrix::block_x_xip() const {
  Eigen::Matrix2d b;
  b << m(0, 0), m(0, 3), m(3, 0), m(3, 3);
  return b;
}

Eigen::Matrix2d FlowMatrix::block_p_xix() const {
  Eigen::Matrix2d b;
  b << m(1, 1), m(1, 2), m(2, 1), m(2, 2);
  return b;
}

Eigen::Matrix4d symplectic_J() {
  Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
  J(0, 2) = -1.0;
  J(1, 3) = -1.0;
  J(2, 0) = 1.0;
  J(3, 1) = 1.0;
  return J;
}

// Both planes rotate along ellipses with the same block:
//   [[cos - sin/k, 2 sin/k], [-4 sin/k, cos + sin/k]]  (argument k*theta).
FlowMatrix flow_matrix(double theta) {
  const double k = FlowParams::k();
  const double c = std::cos(k * theta), s = std::sin(k * theta) / k;
  FlowMatrix f{Eigen::Matrix4d::Zero()};
  f.m(0, 0) = c - s;
  f.m(0, 3) = 2.0 * s;
  f.m(3, 0) = -4.0 * s;
  f.m(3, 3) = c + s;
  f.m(1, 1) = c - s;
  f.m(1, 2) = 2.0 * s;
  f.m(2, 1) = -4.0 * s;
  f.m(2, 2) = c + s;
  return f;
}

double hamiltonian_value(const PhasePoint& z) {
  return 2.0 * z.xi_x * z.xi_p - z.x * z.xi_x - z.p * z.xi_p + 4.0 * z.x * z.p;
}

// dx/dθ = ∂H/∂ξx, dp/dθ = ∂H/∂ξp, dξx/dθ = -∂H/∂x, dξp/dθ = -∂H/∂p.
Eigen::Matrix4d hamiltonian_field_matrix() {
  Eigen::Matrix4d V = Eigen::Matrix4d::Zero();
  V(0, 0) = -1.0;
  V(0, 3) = 2.0;
  V(1, 1) = -1.0;
  V(1, 2) = 2.0;
  V(2, 1) = -4.0;
  V(2, 2) = 1.0;
  V(3, 0) = -4.0;
  V(3, 3) = 1.0;
  return V;
}

std::pair<double, double> level_invariants(const PhasePoint& z) {
  return {2.0 * z.x * z.x + z.xi_p * z.xi_p - z.x * z.xi_p,
          2.0 * z.p * z.p + z.xi_x * z.xi_x - z.p * z.xi_x};
}

double symplectic_form(const PhasePoint& z, const PhasePoint& w) {
  return z.xi_x * w.x + z.xi_p * w.p - w.xi_x * z.x - w.xi_p * z.p;
}

}  // namespace mwt
