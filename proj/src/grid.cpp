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

#include "mwt/grid.hpp"

#include <cmath>
#include <string>

#include "fft.hpp"
#include "mwt/error.hpp"
#include "mwt/parallel.hpp"
#include "mwt/simd.hpp"

namespace mwt {

Grid1D::Grid1D(std::size_t N, double x_min, double dx) : N_(N), x_min_(x_min), dx_(dx) {
  if (N == 0 || (N % 2) != 0) throw ConfigurationError("grid size must be positive and even");
  if (!(dx > 0.0) || !std::isfinite(dx)) throw ConfigurationError("grid spacing must be positive");
  if (!std::isfinite(x_min)) throw ConfigurationError("grid origin must be finite");
}

Grid1D Grid1D::centered(std::size_t N, double dx) {
  return Grid1D(N, -0.5 * static_cast<double>(N) * dx, dx);
}

Grid1D Grid1D::with_length(std::size_t N, double L) {
  return centered(N, L / static_cast<double>(N));
}

Grid1D Grid1D::self_dual(std::size_t N) {
  return centered(N, std::sqrt(kTwoPi / static_cast<double>(N)));
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> x(N_);
  for (std::size_t j = 0; j < N_; ++j) x[j] = node(j);
  return x;
}

double Grid1D::dual_spacing() const { return kTwoPi / (static_cast<double>(N_) * dx_); }

Grid1D Grid1D::dual() const { return centered(N_, dual_spacing()); }

bool Grid1D::is_symmetric() const {
  const double half = 0.5 * static_cast<double>(N_) * dx_;
  return std::abs(x_min_ + half) <= 1e-12 * half;
}

bool Grid1D::same_nodes(const Grid1D& o) const {
  if (N_ != o.N_) return false;
  const double tol = 1e-12 * std::max(dx_, o.dx_);
  return std::abs(dx_ - o.dx_) <= tol && std::abs(x_min_ - o.x_min_) <= tol * static_cast<double>(N_);
}

void require_symmetric(const Grid1D& g, const char* what) {
  if (!g.is_symmetric())
    throw ConfigurationError(std::string(what) + ": grid must be symmetric about 0 (x_min = -N*dx/2)");
}

SampledFunction1D::SampledFunction1D(const Grid1D& g, cvec v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw ConfigurationError("sample count does not match grid size");
}

double SampledFunction1D::norm() const {
  return std::sqrt(grid.dx() * simd::active().norm2(values.data(), values.size()));
}

PhaseFunction2D::PhaseFunction2D(const Grid1D& gx, const Grid1D& gp)
    : grid_x(gx), grid_p(gp), values(gx.size() * gp.size()) {}

PhaseFunction2D::PhaseFunction2D(const Grid1D& gx, const Grid1D& gp, cvec v)
    : grid_x(gx), grid_p(gp), values(std::move(v)) {
  if (values.size() != gx.size() * gp.size())
    throw ConfigurationError("phase-space sample count does not match grid shape");
}

double PhaseFunction2D::norm() const {
  return std::sqrt(cell() * simd::active().norm2(values.data(), values.size()));
}

namespace {

double transform_scale(const Grid1D& g) { return g.dx() / std::sqrt(kTwoPi); }
int transform_sign(Direction d) { return d == Direction::forward ? -1 : +1; }

}  // namespace

SampledFunction1D fourier_1d(const SampledFunction1D& f, Direction dir) {
  require_symmetric(f.grid, "fourier_1d");
  SampledFunction1D out(f.grid.dual());
  detail::centered_dft(f.values.data(), out.values.data(), f.size(), transform_sign(dir),
                       transform_scale(f.grid));
  return out;
}

PhaseFunction2D partial_fourier(const PhaseFunction2D& psi, Axis axis, Direction dir) {
  const int sign = transform_sign(dir);
  const std::size_t nx = psi.rows(), np = psi.cols();
  if (axis == Axis::p) {
    require_symmetric(psi.grid_p, "partial_fourier");
    PhaseFunction2D out(psi.grid_x, psi.grid_p.dual());
    const double scale = transform_scale(psi.grid_p);
    parallel_for(nx, [&](std::size_t j) {
      detail::centered_dft(psi.row(j), out.row(j), np, sign, scale);
    });
    return out;
  }
  require_symmetric(psi.grid_x, "partial_fourier");
  PhaseFunction2D out(psi.grid_x.dual(), psi.grid_p);
  const double scale = transform_scale(psi.grid_x);
  parallel_for(np, [&](std::size_t m) {
    cvec col(nx), res(nx);
    for (std::size_t j = 0; j < nx; ++j) col[j] = psi(j, m);
    detail::centered_dft(col.data(), res.data(), nx, sign, scale);
    for (std::size_t j = 0; j < nx; ++j) out(j, m) = res[j];
  });
  return out;
}

PhaseFunction2D tensor_outer(const SampledFunction1D& psi, const SampledFunction1D& chi) {
  PhaseFunction2D out(psi.grid, chi.grid);
  for (std::size_t j = 0; j < psi.size(); ++j)
    for (std::size_t k = 0; k < chi.size(); ++k) out(j, k) = psi[j] * chi[k];
  return out;
}

SampledFunction1D conj(const SampledFunction1D& f) {
  SampledFunction1D out(f.grid);
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = std::conj(f[j]);
  return out;
}

PhaseFunction2D conj(const PhaseFunction2D& f) {
  PhaseFunction2D out(f.grid_x, f.grid_p);
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = std::conj(f.values[i]);
  return out;
}

namespace {

void require_same_shape(std::size_t a, std::size_t b) {
  if (a != b) throw ConfigurationError("operands have different shapes");
}

}  // namespace

cplx inner(const SampledFunction1D& f, const SampledFunction1D& g) {
  require_same_shape(f.size(), g.size());
  return f.grid.dx() * simd::active().dotc(g.values.data(), f.values.data(), f.size());
}

cplx inner(const PhaseFunction2D& f, const PhaseFunction2D& g) {
  require_same_shape(f.values.size(), g.values.size());
  return f.cell() * simd::active().dotc(g.values.data(), f.values.data(), f.values.size());
}

cplx pairing(const SampledFunction1D& f, const SampledFunction1D& g) {
  require_same_shape(f.size(), g.size());
  return f.grid.dx() * simd::active().dotu(f.values.data(), g.values.data(), f.size());
}

cplx pairing(const PhaseFunction2D& f, const PhaseFunction2D& g) {
  require_same_shape(f.values.size(), g.values.size());
  return f.cell() * simd::active().dotu(f.values.data(), g.values.data(), f.values.size());
}

double max_abs_diff(const cvec& a, const cvec& b) {
  require_same_shape(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const cvec& a) {
  double m = 0.0;
  for (const cplx& v : a) m = std::max(m, std::abs(v));
  return m;
}

double relative_l2(const cvec& a, const cvec& b) {
  require_same_shape(a.size(), b.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

PhaseFunction2D operator+(const PhaseFunction2D& a, const PhaseFunction2D& b) {
  require_same_shape(a.values.size(), b.values.size());
  PhaseFunction2D out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

PhaseFunction2D operator-(const PhaseFunction2D& a, const PhaseFunction2D& b) {
  require_same_shape(a.values.size(), b.values.size());
  PhaseFunction2D out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

PhaseFunction2D operator*(cplx s, const PhaseFunction2D& a) {
  PhaseFunction2D out = a;
  for (cplx& v : out.values) v *= s;
  return out;
}

SampledFunction1D operator+(const SampledFunction1D& a, const SampledFunction1D& b) {
  require_same_shape(a.size(), b.size());
  SampledFunction1D out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

SampledFunction1D operator-(const SampledFunction1D& a, const SampledFunction1D& b) {
  require_same_shape(a.size(), b.size());
  SampledFunction1D out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

SampledFunction1D operator*(cplx s, const SampledFunction1D& a) {
  SampledFunction1D out = a;
  for (cplx& v : out.values) v *= s;
  return out;
}

}  // namespace mwt
