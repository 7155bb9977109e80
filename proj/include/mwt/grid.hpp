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

#include <cstddef>
#include <vector>

#include "mwt/types.hpp"

namespace mwt {

/// Uniform periodic grid x_j = x_min + j*dx, j = 0..N-1.
///
/// The dual (frequency) grid has spacing 2*pi/(N*dx) and nodes
/// xi_m = (m - N/2)*dxi stored in ascending order, so that dx*dxi*N = 2*pi.
class Grid1D {
 public:
  Grid1D() = default;
  /// N must be even and positive, dx positive.
  Grid1D(std::size_t N, double x_min, double dx);

  /// Grid symmetric about 0: x_min = -N*dx/2.
  static Grid1D centered(std::size_t N, double dx);
  /// Symmetric grid of total length L.
  static Grid1D with_length(std::size_t N, double L);
  /// Symmetric grid with dx = sqrt(2*pi/N); its dual has the same nodes.
  static Grid1D self_dual(std::size_t N);

  std::size_t size() const { return N_; }
  double x_min() const { return x_min_; }
  double dx() const { return dx_; }
  double length() const { return static_cast<double>(N_) * dx_; }
  double node(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }
  std::vector<double> nodes() const;

  double dual_spacing() const;
  /// The frequency grid, itself a symmetric Grid1D.
  Grid1D dual() const;

  /// True when x_min = -N*dx/2 up to rounding.
  bool is_symmetric() const;
  /// Same N and, up to rounding, the same nodes.
  bool same_nodes(const Grid1D& other) const;

  bool operator==(const Grid1D& other) const = default;

 private:
  std::size_t N_ = 0;
  double x_min_ = 0.0;
  double dx_ = 1.0;
};

/// Complex samples of a wavefunction on a grid.
struct SampledFunction1D {
  Grid1D grid;
  cvec values;

  SampledFunction1D() = default;
  explicit SampledFunction1D(const Grid1D& g) : grid(g), values(g.size()) {}
  SampledFunction1D(const Grid1D& g, cvec v);

  std::size_t size() const { return values.size(); }
  cplx& operator[](std::size_t j) { return values[j]; }
  const cplx& operator[](std::size_t j) const { return values[j]; }
  /// sqrt(dx * sum |v_j|^2)
  double norm() const;
};

/// Complex samples Psi(x_j, p_m) stored row-major (x index slow, p index fast).
struct PhaseFunction2D {
  Grid1D grid_x;
  Grid1D grid_p;
  cvec values;

  PhaseFunction2D() = default;
  PhaseFunction2D(const Grid1D& gx, const Grid1D& gp);
  PhaseFunction2D(const Grid1D& gx, const Grid1D& gp, cvec v);

  std::size_t rows() const { return grid_x.size(); }
  std::size_t cols() const { return grid_p.size(); }
  cplx& operator()(std::size_t j, std::size_t m) { return values[j * cols() + m]; }
  const cplx& operator()(std::size_t j, std::size_t m) const { return values[j * cols() + m]; }
  cplx* row(std::size_t j) { return values.data() + j * cols(); }
  const cplx* row(std::size_t j) const { return values.data() + j * cols(); }
  double cell() const { return grid_x.dx() * grid_p.dx(); }
  /// sqrt(dx * dp * sum |v|^2)
  double norm() const;
};

enum class Direction { forward, inverse };
enum class Axis { x, p };

/// Unitary transform (2pi)^{-1/2} dx sum_j exp(-+ i xi_m x_j) f(x_j), evaluated
/// on the dual grid. The sign is - for forward and + for inverse.
SampledFunction1D fourier_1d(const SampledFunction1D& f, Direction dir);

/// fourier_1d along one axis for every fixed value of the other axis.
PhaseFunction2D partial_fourier(const PhaseFunction2D& psi, Axis axis, Direction dir);

/// values[j, k] = psi_j * chi_k on (psi.grid, chi.grid).
PhaseFunction2D tensor_outer(const SampledFunction1D& psi, const SampledFunction1D& chi);

SampledFunction1D conj(const SampledFunction1D& f);
PhaseFunction2D conj(const PhaseFunction2D& f);

/// Hermitian inner product  int f conj(g).
cplx inner(const SampledFunction1D& f, const SampledFunction1D& g);
cplx inner(const PhaseFunction2D& f, const PhaseFunction2D& g);
/// Bilinear pairing  int f g.
cplx pairing(const SampledFunction1D& f, const SampledFunction1D& g);
cplx pairing(const PhaseFunction2D& f, const PhaseFunction2D& g);

/// Max |a - b| over samples; grids must have the same shape.
double max_abs_diff(const cvec& a, const cvec& b);
double max_abs(const cvec& a);
/// sqrt(sum |a - b|^2) / sqrt(sum |b|^2)
double relative_l2(const cvec& a, const cvec& b);

/// Elementwise arithmetic helpers.
PhaseFunction2D operator+(const PhaseFunction2D& a, const PhaseFunction2D& b);
PhaseFunction2D operator-(const PhaseFunction2D& a, const PhaseFunction2D& b);
PhaseFunction2D operator*(cplx s, const PhaseFunction2D& a);
SampledFunction1D operator+(const SampledFunction1D& a, const SampledFunction1D& b);
SampledFunction1D operator-(const SampledFunction1D& a, const SampledFunction1D& b);
SampledFunction1D operator*(cplx s, const SampledFunction1D& a);

/// Throws ConfigurationError when the grid is not symmetric about 0.
void require_symmetric(const Grid1D& g, const char* what);

}  // namespace mwt
