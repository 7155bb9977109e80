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

#include <complex>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "mwt/bopp.hpp"
#include "mwt/error.hpp"
#include "mwt/metaplectic.hpp"
#include "mwt/parallel.hpp"
#include "mwt/states.hpp"
#include "mwt/symplectic.hpp"
#include "phase_ops.hpp"

namespace mwt {

PolynomialSymbol PolynomialSymbol::constant(cplx c) { return PolynomialSymbol{}.add(0, 0, c); }
PolynomialSymbol PolynomialSymbol::position() { return PolynomialSymbol{}.add(1, 0, 1.0); }
PolynomialSymbol PolynomialSymbol::momentum() { return PolynomialSymbol{}.add(0, 1, 1.0); }
PolynomialSymbol PolynomialSymbol::harmonic_oscillator() {
  PolynomialSymbol p;
  p.add(2, 0, 0.5).add(0, 2, 0.5);
  return p;
}

PolynomialSymbol& PolynomialSymbol::add(int m, int n, cplx c) {
  if (m < 0 || n < 0 || m + n > 4) throw ConfigurationError("polynomial symbols are limited to degree 4");
  coeff[m][n] += c;
  return *this;
}

int PolynomialSymbol::degree() const {
  int d = 0;
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n + m < 5; ++n)
      if (coeff[m][n] != 0.0) d = std::max(d, m + n);
  return d;
}

bool PolynomialSymbol::is_real() const {
  for (const auto& row : coeff)
    for (const cplx& c : row)
      if (c.imag() != 0.0) return false;
  return true;
}

cplx PolynomialSymbol::operator()(double x, double xi) const {
  cplx s = 0.0;
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n + m < 5; ++n)
      if (coeff[m][n] != 0.0) s += coeff[m][n] * std::pow(x, m) * std::pow(xi, n);
  return s;
}

Symbol2D PolynomialSymbol::sample(const Grid1D& g) const {
  return sample_symbol(g, [this](double x, double xi) { return (*this)(x, xi); }, degree() > 0);
}

OperatorKernel PolynomialSymbol::kernel(const Grid1D& g) const {
  const Eigen::Index n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) X(j, j) = g.node(static_cast<std::size_t>(j));
  const Eigen::MatrixXcd P =
      symbol_to_kernel(sample_symbol(g, [](double, double xi) { return cplx(xi); }, true)).matrix();
  const auto mpow = [n](const Eigen::MatrixXcd& a, int k) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
  };
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < 5; ++m)
    for (int q = 0; m + q < 5; ++q) {
      if (coeff[m][q] == 0.0) continue;
      const Eigen::MatrixXcd Pq = mpow(P, q);
      double binom = 1.0;
      for (int k = 0; k <= m; ++k) {
        if (k > 0) binom = binom * (m - k + 1) / k;
        M += (coeff[m][q] * binom / std::pow(2.0, m)) * (mpow(X, k) * Pq * mpow(X, m - k));
      }
    }
  return OperatorKernel(g, M / g.dx());
}

const char* to_string(Representation r) {
  switch (r) {
    case Representation::extended: return "extended";
    case Representation::bopp_conjugated: return "bopp_conjugated";
    case Representation::bopp_direct: return "bopp_direct";
  }
  return "?";
}

PhaseOperator::PhaseOperator(Symbol2D symbol, Representation rep)
    : rep_(rep), symbol_(std::move(symbol)), kernel_(symbol_to_kernel(symbol_)) {
  if (rep_ == Representation::bopp_direct)
    throw ConfigurationError("bopp_direct needs a polynomial symbol");
}

PhaseOperator::PhaseOperator(const PolynomialSymbol& poly, const Grid1D& g, Representation rep)
    : rep_(rep), symbol_(poly.sample(g)), kernel_(poly.kernel(g)), poly_(poly) {}

PhaseOperator PhaseOperator::with_representation(Representation rep) const {
  PhaseOperator out = *this;
  if (rep == Representation::bopp_direct && !poly_) throw ConfigurationError("bopp_direct needs a polynomial symbol");
  out.rep_ = rep;
  return out;
}

namespace {

void require_operator_grid(const PhaseOperator& a, const PhaseFunction2D& psi) {
  if (!psi.grid_x.same_nodes(a.grid()) || !psi.grid_p.same_nodes(a.grid().dual()))
    throw ConfigurationError("phase function must live on (operator grid, dual grid)");
}

using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// X = x + (i/2) d/dp and P = p - (i/2) d/dx.
PhaseFunction2D bopp_X(const PhaseFunction2D& f) {
  return detail::times_x(f) + cplx(0.0, 0.5) * detail::derivative_p(f);
}

PhaseFunction2D bopp_P(const PhaseFunction2D& f) {
  return detail::times_p(f) - cplx(0.0, 0.5) * detail::derivative_x(f);
}

PhaseFunction2D power(PhaseFunction2D f, int k, PhaseFunction2D (*op)(const PhaseFunction2D&)) {
  for (int i = 0; i < k; ++i) f = op(f);
  return f;
}

// Weyl ordering of x^m xi^n: 2^{-m} sum_k C(m, k) X^k P^n X^{m-k}.
PhaseFunction2D apply_direct(const PolynomialSymbol& poly, const PhaseFunction2D& psi) {
  PhaseFunction2D out(psi.grid_x, psi.grid_p);
  for (int m = 0; m < 5; ++m)
    for (int n = 0; m + n < 5; ++n) {
      const cplx c = poly.coeff[m][n];
      if (c == 0.0) continue;
      double binom = 1.0;
      for (int k = 0; k <= m; ++k) {
        if (k > 0) binom = binom * (m - k + 1) / k;
        PhaseFunction2D g = power(psi, m - k, bopp_X);
        g = power(g, n, bopp_P);
        g = power(g, k, bopp_X);
        const cplx w = c * binom / std::pow(2.0, m);
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += w * g.values[i];
      }
    }
  return out;
}

}  // namespace

PhaseFunction2D apply_extended(const PhaseOperator& a, const PhaseFunction2D& psi) {
  const Grid1D& g = a.grid();
  if (!psi.grid_x.same_nodes(g)) throw ConfigurationError("apply_extended: x grid differs from operator grid");
  const Eigen::Index nx = static_cast<Eigen::Index>(psi.rows()), np = static_cast<Eigen::Index>(psi.cols());
  const Eigen::Map<const RowMajor> in(psi.values.data(), nx, np);
  PhaseFunction2D out(psi.grid_x, psi.grid_p);
  Eigen::Map<RowMajor> res(out.values.data(), nx, np);
  res.noalias() = g.dx() * (a.kernel().K * in);
  return out;
}

PhaseFunction2D apply_bopp(const PhaseOperator& a, const PhaseFunction2D& psi) {
  require_operator_grid(a, psi);
  if (a.representation() == Representation::bopp_direct) return apply_direct(*a.polynomial(), psi);
  const double t0 = FlowParams::theta0();
  return apply_U(apply_extended(a, apply_U_inverse(psi, t0)), t0);
}

PhaseFunction2D PhaseOperator::apply(const PhaseFunction2D& psi) const {
  if (rep_ == Representation::extended) return apply_extended(*this, psi);
  return apply_bopp(*this, psi);
}

PhaseFunction2D intertwiner_T(const SampledFunction1D& psi, const Window& w) {
  return windowed_transform(psi, w, Theta(0.0));
}

SampledFunction1D intertwiner_T_adjoint(const PhaseFunction2D& psi, const Window& w) {
  return windowed_adjoint(psi, w, Theta(0.0));
}

Theta intertwining_angle(Representation rep) {
  return rep == Representation::extended ? Theta(0.0) : Theta::wigner();
}

ResidualReport bopp_intertwining_residual(const PhaseOperator& a, const SampledFunction1D& psi, const Window& w) {
  const Theta th = intertwining_angle(a.representation());
  const PhaseFunction2D lhs = a.apply(windowed_transform(psi, w, th));
  const PhaseFunction2D rhs = windowed_transform(a.kernel().apply(psi), w, th);
  const double diff = (lhs - rhs).norm(), ref = rhs.norm();
  if (ref <= 1e-14 * std::max(psi.norm(), 1e-300)) return {diff, true};
  return {diff / ref, false};
}

Eigen::MatrixXcd assemble_dense(const PhaseOperator& a) {
  const Grid1D gx = a.grid(), gp = gx.dual();
  const std::size_t dim = gx.size() * gp.size();
  Eigen::MatrixXcd M(dim, dim);
  parallel_for(dim, [&](std::size_t c) {
    PhaseFunction2D e(gx, gp);
    e.values[c] = 1.0;
    const PhaseFunction2D col = a.apply(e);
    for (std::size_t r = 0; r < dim; ++r) M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col.values[r];
  });
  return M;
}

SpectralReport bopp_spectrum(const Symbol2D& a, std::size_t count, const Window& w, const SpectralOptions& opt) {
  return bopp_spectrum(PhaseOperator(a, Representation::bopp_conjugated), count, w, opt);
}

SpectralReport bopp_spectrum(const PhaseOperator& a, std::size_t count, const Window& w, const SpectralOptions& opt) {
  const Symbol2D& s = a.base_symbol();
  double im = 0.0, mag = 0.0;
  for (const cplx& v : s.values) {
    im = std::max(im, std::abs(v.imag()));
    mag = std::max(mag, std::abs(v));
  }
  if (im > 1e-12 * std::max(mag, 1.0)) throw ConfigurationError("bopp_spectrum needs a real symbol");
  const Grid1D gx = a.grid(), gp = gx.dual();
  if (gx.size() > 64) throw ConfigurationError("dense phase-space spectra are limited to 64 x 64 grids");
  if (count == 0) throw ConfigurationError("count must be positive");
  const std::size_t n = gx.size(), dim = n * gp.size();

  SpectralReport rep;
  Eigen::MatrixXcd M = assemble_dense(a);
  const double mmax = M.cwiseAbs().maxCoeff();
  rep.hermiticity = (M - M.adjoint()).cwiseAbs().maxCoeff() / std::max(mmax, 1e-300);
  M = 0.5 * (M + M.adjoint()).eval();

  // Lowest (count + 1) * N_p eigenpairs: enough for count clusters when each
  // 1D level carries the window multiplicity N_p.
  const lapack_int nd = static_cast<lapack_int>(dim);
  const lapack_int iu = static_cast<lapack_int>(std::min(dim, (count + 1) * gp.size()));
  std::vector<double> evals(dim);
  Eigen::MatrixXcd Z(dim, iu);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(iu));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', nd, M.data(), nd, 0.0, 0.0, 1, iu, 0.0, &found,
                     evals.data(), Z.data(), nd, support.data());
  if (info != 0) throw NumericalError("zheevr failed with info = " + std::to_string(info));
  rep.computed = static_cast<std::size_t>(found);

  // 1D reference spectrum.
  Eigen::MatrixXcd H1 = a.kernel().matrix();
  H1 = 0.5 * (H1 + H1.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H1);
  const Eigen::VectorXd l1 = es.eigenvalues();
  rep.one_d_eigenvalues.assign(l1.data(), l1.data() + l1.size());

  // Clusters.
  std::vector<std::size_t> first;
  for (lapack_int i = 0; i < found; ++i) {
    if (i == 0 || evals[i] - evals[i - 1] > opt.gap_threshold * std::max(1.0, std::abs(evals[i]))) first.push_back(i);
  }
  first.push_back(static_cast<std::size_t>(found));
  const std::size_t clusters = std::min(count, first.size() - 1);
  const auto as_phase = [&](Eigen::Index col) {
    PhaseFunction2D v(gx, gp);
    for (std::size_t r = 0; r < dim; ++r) v.values[r] = Z(static_cast<Eigen::Index>(r), col);
    return v;
  };
  const Theta th = intertwining_angle(a.representation());
  for (std::size_t c = 0; c < clusters; ++c) {
    const std::size_t lo = first[c], hi = first[c + 1];
    double mean = 0.0, worst = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      mean += evals[i];
      const PhaseFunction2D v = as_phase(static_cast<Eigen::Index>(i));
      const PhaseFunction2D r = a.apply(v) - evals[i] * v;
      worst = std::max(worst, r.norm() / v.norm());
    }
    mean /= static_cast<double>(hi - lo);
    rep.eigenvalues.push_back(mean);
    rep.multiplicities.push_back(hi - lo);
    rep.residuals.push_back(worst);
    long best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < l1.size(); ++k)
      if (std::abs(l1(k) - mean) < dist) {
        dist = std::abs(l1(k) - mean);
        best = static_cast<long>(k);
      }
    rep.pairing.push_back(dist <= opt.pairing_tolerance ? best : -1);

    // Pull-back of one eigenvector of the cluster.
    const PhaseFunction2D v = as_phase(static_cast<Eigen::Index>(lo));
    const SampledFunction1D u = windowed_adjoint(v, w, th);
    const double ratio = u.norm() / v.norm();
    rep.pullback_norms.push_back(ratio);
    if (ratio < opt.zero_pullback) {
      rep.pullback_zero.push_back(true);
      rep.pullback_residuals.push_back(std::numeric_limits<double>::quiet_NaN());
    } else {
      rep.pullback_zero.push_back(false);
      rep.pullback_residuals.push_back((a.kernel().apply(u) - evals[lo] * u).norm() / u.norm());
    }
  }

  // Push-forward of the 1D eigenvectors and the Gram check.
  const std::size_t k1 = std::min<std::size_t>(count, n);
  std::vector<SampledFunction1D> eig1;
  for (std::size_t i = 0; i < k1; ++i) {
    SampledFunction1D psi(gx);
    for (std::size_t j = 0; j < n; ++j) psi[j] = es.eigenvectors()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
    const double nn = psi.norm();
    for (cplx& z : psi.values) z /= nn;
    const PhaseFunction2D Psi = windowed_transform(psi, w, th);
    rep.pushforward_residuals.push_back((a.apply(Psi) - l1(static_cast<Eigen::Index>(i)) * Psi).norm() / Psi.norm());
    eig1.push_back(std::move(psi));
  }
  std::vector<PhaseFunction2D> family;
  for (int g = 0; g < opt.gram_windows; ++g) {
    const Window wg(states::hermite(gx, g));
    for (const auto& psi : eig1) family.push_back(windowed_transform(psi, wg, th));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      const cplx gij = inner(family[i], family[j]);
      rep.gram_deviation = std::max(rep.gram_deviation, std::abs(gij - (i == j ? 1.0 : 0.0)));
    }
  return rep;
}

}  // namespace mwt
