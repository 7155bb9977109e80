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
#include <functional>

#include "mwt/grid.hpp"
#include "mwt/wigner.hpp"

namespace mwt {

/// Discrete Schwartz kernel K[j, k] ~ K_a(x_j, y_k). The operator acts as
/// (a psi)_j = dx sum_k K[j, k] psi_k, so a discrete delta is the 1/dx spike.
struct OperatorKernel {
  Grid1D grid;
  Eigen::MatrixXcd K;

  OperatorKernel() = default;
  OperatorKernel(const Grid1D& g, Eigen::MatrixXcd k);

  static OperatorKernel identity(const Grid1D& g);
  /// K(x, y) = psi(x) conj phi(y), the kernel of psi <phi, . >.
  static OperatorKernel rank_one(const SampledFunction1D& psi, const SampledFunction1D& phi);
  static OperatorKernel from_function(const Grid1D& g, const std::function<cplx(double, double)>& f);

  SampledFunction1D apply(const SampledFunction1D& psi) const;
  /// Kernel of the formal adjoint: conj K(y, x).
  OperatorKernel adjoint() const;
  /// The matrix dx*K of the operator on grid values.
  Eigen::MatrixXcd matrix() const { return grid.dx() * K; }
  /// max |K - K^H| <= tol * max |K|.
  bool is_self_adjoint(double tol = 1e-8) const;
};

/// dx K_a K_b, the kernel of the product ab.
OperatorKernel compose(const OperatorKernel& a, const OperatorKernel& b);

/// Weyl symbol a(x, xi) on (grid, dual grid). Symbols of unbounded
/// operators (polynomials such as x, xi or the oscillator) should set
/// polynomial_growth; they are only meaningful against states that decay
/// well inside the box, and U(theta) must not be applied to them.
struct Symbol2D : PhaseFunction2D {
  bool polynomial_growth = false;

  Symbol2D() = default;
  explicit Symbol2D(PhaseFunction2D f, bool growth = false)
      : PhaseFunction2D(std::move(f)), polynomial_growth(growth) {}
  Symbol2D(const Grid1D& gx, const Grid1D& gxi) : PhaseFunction2D(gx, gxi) {}

  const Grid1D& grid_xi() const { return grid_p; }
};

/// Samples f(x, xi) on (g, g.dual()).
Symbol2D sample_symbol(const Grid1D& g, const std::function<cplx(double, double)>& f, bool growth = false);

/// Discretization of a(x, p) = int e^{-ipy} K(x + y/2, x - y/2) dy on the
/// periodic grid: for each separation l in [-N/2, N/2) the kernel diagonal
/// K[(k + l) mod N, k] is resampled to integer midpoints by trigonometric
/// half-shifts, then summed against e^{-i p l dx}.
Symbol2D kernel_to_symbol(const OperatorKernel& k);

/// (2pi)^{1/2} U(theta0) F^{-1}_{y -> p} K.
Symbol2D kernel_to_symbol_metaplectic(const OperatorKernel& k);

/// Weyl quantization K(x, y) = (2pi)^{-1} int e^{i(x - y) xi} a((x + y)/2, xi) dxi
/// on the periodic grid. Separations are taken in [-N/2, N/2) and midpoints
/// between half-grid samples of a. Exact inverse of kernel_to_symbol.
OperatorKernel symbol_to_kernel(const Symbol2D& a);

/// a^theta = U(theta - theta0) a, acting on the (x, xi) plane.
Symbol2D theta_symbol(const Symbol2D& a, Theta theta);
/// Inverse of theta_symbol (exact on the grid).
Symbol2D weyl_from_theta_symbol(const Symbol2D& a_theta, Theta theta);

enum class StarMethod { kernel, quadrature };

/// Moyal product. The kernel path composes the quantized operators; the
/// quadrature path evaluates
///   (a * b)(z) = pi^{-2} int int e^{2i sigma(u, z)} a(u) B(u - z) du,
///   B(w) = int e^{-2i sigma(w, v)} b(v) dv,
/// on an r-times refined grid (trigonometric upsampling). Quadrature is
/// restricted to N <= 32 per axis.
Symbol2D moyal_product(const Symbol2D& a, const Symbol2D& b, StarMethod method = StarMethod::kernel,
                       int refine = 2);

/// U(theta - theta0)[ (U(theta0 - theta) a) * (U(theta0 - theta) b) ].
Symbol2D theta_product(const Symbol2D& a_theta, const Symbol2D& b_theta, Theta theta);

struct Expectation {
  cplx phase_space;  // int int conj(a^theta) W^theta(psi, psi)
  cplx kernel;       // <a psi, psi> by kernel action
  bool self_adjoint;
};

/// Expectation value through the theta-symbol and the fractional Wigner
/// function, alongside the kernel-action value. Warns when the operator is
/// not self-adjoint.
Expectation expectation(const Symbol2D& a, const SampledFunction1D& psi, Theta theta);

}  // namespace mwt
