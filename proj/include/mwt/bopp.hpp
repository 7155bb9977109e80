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
#include <array>
#include <optional>
#include <vector>

#include "mwt/grid.hpp"
#include "mwt/weyl.hpp"
#include "mwt/wigner.hpp"

namespace mwt {

/// Polynomial symbol sum c[m][n] x^m xi^n of total degree <= 4.
struct PolynomialSymbol {
  std::array<std::array<cplx, 5>, 5> coeff{};

  static PolynomialSymbol constant(cplx c);
  static PolynomialSymbol position();
  static PolynomialSymbol momentum();
  /// (x^2 + xi^2) / 2
  static PolynomialSymbol harmonic_oscillator();

  /// Adds c x^m xi^n; throws when m + n > 4.
  PolynomialSymbol& add(int m, int n, cplx c);
  int degree() const;
  bool is_real() const;
  cplx operator()(double x, double xi) const;
  Symbol2D sample(const Grid1D& g) const;
  /// Weyl-ordered polynomial in X = diag(x) and the spectral multiplier xi.
  /// Avoids sampling symbols that are not periodic in x.
  OperatorKernel kernel(const Grid1D& g) const;
};

/// How a phase-space operator acts on PhaseFunction2D over (grid, dual grid).
///   extended:        the 1D kernel applied along x for every p column
///   bopp_conjugated: S o extended o S^{-1} with S = U(theta0)
///   bopp_direct:     a(X, P) with X = x + (i/2) d/dp, P = p - (i/2) d/dx,
///                    Weyl ordered (polynomial symbols only)
enum class Representation { extended, bopp_conjugated, bopp_direct };

const char* to_string(Representation r);

class PhaseOperator {
 public:
  PhaseOperator(Symbol2D symbol, Representation rep);
  PhaseOperator(const PolynomialSymbol& poly, const Grid1D& g, Representation rep);

  Representation representation() const { return rep_; }
  const Symbol2D& base_symbol() const { return symbol_; }
  const OperatorKernel& kernel() const { return kernel_; }
  const std::optional<PolynomialSymbol>& polynomial() const { return poly_; }
  const Grid1D& grid() const { return symbol_.grid_x; }
  PhaseOperator with_representation(Representation rep) const;

  /// Dispatches on the representation.
  PhaseFunction2D apply(const PhaseFunction2D& psi) const;

 private:
  Representation rep_;
  Symbol2D symbol_;
  OperatorKernel kernel_;
  std::optional<PolynomialSymbol> poly_;
};

PhaseFunction2D apply_extended(const PhaseOperator& a, const PhaseFunction2D& psi);
/// Bopp operator S A S^{-1}. Uses the direct realization when the operator
/// is in bopp_direct form, the conjugated one otherwise.
PhaseFunction2D apply_bopp(const PhaseOperator& a, const PhaseFunction2D& psi);

/// T psi = psi (x) conj(phi^), identical to windowed_transform at theta = 0.
PhaseFunction2D intertwiner_T(const SampledFunction1D& psi, const Window& w);
SampledFunction1D intertwiner_T_adjoint(const PhaseFunction2D& psi, const Window& w);

/// Angle whose windowed transform intertwines the representation: 0 for
/// extended, theta0 for the Bopp forms.
Theta intertwining_angle(Representation rep);

struct ResidualReport {
  double residual = 0.0;
  /// True when the reference side vanished and the residual is absolute.
  bool absolute = false;
};

/// ||A W psi - W (a psi)|| / ||W (a psi)|| with W the intertwining transform.
ResidualReport bopp_intertwining_residual(const PhaseOperator& a, const SampledFunction1D& psi, const Window& w);

/// Dense matrix of the operator on the flattened (row-major) phase grid.
Eigen::MatrixXcd assemble_dense(const PhaseOperator& a);

struct SpectralOptions {
  /// Eigenvalues closer than this are one degenerate cluster.
  double gap_threshold = 1e-3;
  /// Cluster-to-1D matching tolerance.
  double pairing_tolerance = 1e-3;
  /// Pull-backs with norm below this are reported as zero.
  double zero_pullback = 1e-10;
  /// Number of Hermite windows in the completeness Gram check.
  int gram_windows = 3;
};

struct SpectralReport {
  std::vector<double> eigenvalues;              // lowest distinct clusters
  std::vector<std::size_t> multiplicities;
  std::vector<double> residuals;                // max ||Av - lv|| / ||v|| per cluster
  std::vector<long> pairing;                    // index into one_d_eigenvalues, -1 if none
  std::vector<double> one_d_eigenvalues;        // lowest eigenvalues of the 1D operator
  std::vector<double> pushforward_residuals;    // for W psi_l, l over the 1D eigenvectors
  std::vector<double> pullback_norms;           // ||W* v|| for one vector per cluster
  std::vector<double> pullback_residuals;       // eigen-residual of W* v (NaN when zero)
  std::vector<bool> pullback_zero;
  double gram_deviation = 0.0;                  // max |G - I| over Hermite windows x eigenstates
  double hermiticity = 0.0;                     // max |M - M^H| / max |M|
  std::size_t computed = 0;                     // eigenpairs requested from the solver
};

/// Dense spectral comparison of the phase-space operator with its 1D
/// counterpart. Requires a real symbol and at most 64 x 64 phase grids.
SpectralReport bopp_spectrum(const PhaseOperator& a, std::size_t count, const Window& w,
                             const SpectralOptions& opt = {});
SpectralReport bopp_spectrum(const Symbol2D& a, std::size_t count, const Window& w,
                             const SpectralOptions& opt = {});

enum class Integrator { exact, krylov, crank_nicolson };

const char* to_string(Integrator i);

struct EvolutionOptions {
  Integrator integrator = Integrator::exact;
  std::size_t krylov_dim = 30;
  double solver_tolerance = 1e-13;
  bool record_states = false;
};

struct EvolutionResult {
  SampledFunction1D psi;
  PhaseFunction2D phase;
  double divergence = 0.0;                // final ||Psi - W psi|| / ||Psi||
  std::vector<double> times;
  std::vector<double> divergences;        // after every step
  std::vector<SampledFunction1D> states;  // 1D states per step when recorded
  double norm_drift_1d = 0.0;             // max | ||psi(t)|| - ||psi0|| | / t_final
  double norm_drift_phase = 0.0;
  Integrator integrator_1d = Integrator::exact;
  Integrator integrator_phase = Integrator::exact;
};

/// Solves i psi' = a psi and i Psi' = A Psi from psi0 and W psi0 with the
/// same integrator and compares Psi(t) with W psi(t).
EvolutionResult evolve_pair(const PhaseOperator& a, const SampledFunction1D& psi0, const Window& w,
                            double t_final, std::size_t steps, const EvolutionOptions& opt = {});

}  // namespace mwt
