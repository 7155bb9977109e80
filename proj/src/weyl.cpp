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

#include "mwt/weyl.hpp"

#include <cmath>

#include "fft.hpp"
#include "mwt/error.hpp"
#include "mwt/metaplectic.hpp"
#include "mwt/parallel.hpp"
#include "mwt/simd.hpp"
#include "mwt/symplectic.hpp"

namespace mwt {

OperatorKernel::OperatorKernel(const Grid1D& g, Eigen::MatrixXcd k) : grid(g), K(std::move(k)) {
  if (K.rows() != static_cast<Eigen::Index>(g.size()) || K.cols() != K.rows())
    throw ConfigurationError("kernel shape does not match grid");
}

OperatorKernel OperatorKernel::identity(const Grid1D& g) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.size());
  return {g, Eigen::MatrixXcd::Identity(n, n) / g.dx()};
}

OperatorKernel OperatorKernel::rank_one(const SampledFunction1D& psi, const SampledFunction1D& phi) {
  if (!psi.grid.same_nodes(phi.grid)) throw ConfigurationError("rank_one: grids differ");
  const Eigen::Index n = static_cast<Eigen::Index>(psi.size());
  Eigen::MatrixXcd k(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < n; ++l) k(j, l) = psi[j] * std::conj(phi[l]);
  return {psi.grid, k};
}

OperatorKernel OperatorKernel::from_function(const Grid1D& g, const std::function<cplx(double, double)>& f) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXcd k(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < n; ++l) k(j, l) = f(g.node(j), g.node(l));
  return {g, k};
}

SampledFunction1D OperatorKernel::apply(const SampledFunction1D& psi) const {
  if (!psi.grid.same_nodes(grid)) throw ConfigurationError("kernel and state grids differ");
  const Eigen::Map<const Eigen::VectorXcd> v(psi.values.data(), static_cast<Eigen::Index>(psi.size()));
  const Eigen::VectorXcd r = grid.dx() * (K * v);
  return {grid, cvec(r.data(), r.data() + r.size())};
}

OperatorKernel OperatorKernel::adjoint() const { return {grid, K.adjoint()}; }

bool OperatorKernel::is_self_adjoint(double tol) const {
  const double scale = K.cwiseAbs().maxCoeff();
  return (K - K.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(scale, 1e-300);
}

OperatorKernel compose(const OperatorKernel& a, const OperatorKernel& b) {
  if (!a.grid.same_nodes(b.grid)) throw ConfigurationError("compose: grids differ");
  return {a.grid, a.grid.dx() * (a.K * b.K)};
}

Symbol2D sample_symbol(const Grid1D& g, const std::function<cplx(double, double)>& f, bool growth) {
  require_symmetric(g, "sample_symbol");
  Symbol2D s(g, g.dual());
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t m = 0; m < g.size(); ++m) s(j, m) = f(g.node(j), s.grid_p.node(m));
  s.polynomial_growth = growth;
  return s;
}

namespace {

long wrap(long i, long n) { return ((i % n) + n) % n; }

void require_symbol_grids(const PhaseFunction2D& a) {
  require_symmetric(a.grid_x, "symbol");
  if (!a.grid_p.same_nodes(a.grid_x.dual()))
    throw ConfigurationError("symbol must live on (grid, dual grid)");
}

}  // namespace

Symbol2D kernel_to_symbol(const OperatorKernel& k) {
  require_symmetric(k.grid, "kernel_to_symbol");
  const long n = static_cast<long>(k.grid.size());
  const Grid1D gp = k.grid.dual();
  const double dx = k.grid.dx();
  // G(l + N/2, j): kernel value at midpoint x_j and separation l*dx.
  Eigen::MatrixXcd G(n, n);
  cvec diag(n), shifted(n);
  for (long l = -n / 2; l < n / 2; ++l) {
    for (long kk = 0; kk < n; ++kk) diag[kk] = k.K(wrap(kk + l, n), kk);
    const long li = l + n / 2;
    if (wrap(l, 2) == 0) {
      for (long j = 0; j < n; ++j) G(li, j) = diag[wrap(j - l / 2, n)];
    } else {
      // diag[kk] sits at midpoint kk + l/2; move it back by half a cell.
      detail::half_shift(diag.data(), shifted.data(), static_cast<std::size_t>(n), -1);
      const long s = (l - 1) / 2;  // exact: l - 1 is even
      for (long j = 0; j < n; ++j) G(li, j) = shifted[wrap(j - s, n)];
    }
  }
  Eigen::MatrixXcd E(n, n);  // E(m, l + N/2) = dx e^{-i p_m l dx}
  for (long m = 0; m < n; ++m)
    for (long l = -n / 2; l < n / 2; ++l) {
      const double a = -gp.node(static_cast<std::size_t>(m)) * static_cast<double>(l) * dx;
      E(m, l + n / 2) = dx * cplx(std::cos(a), std::sin(a));
    }
  const Eigen::MatrixXcd at = E * G;  // at(m, j)
  Symbol2D s(k.grid, gp);
  for (long j = 0; j < n; ++j)
    for (long m = 0; m < n; ++m) s(static_cast<std::size_t>(j), static_cast<std::size_t>(m)) = at(m, j);
  return s;
}

Symbol2D kernel_to_symbol_metaplectic(const OperatorKernel& k) {
  require_symmetric(k.grid, "kernel_to_symbol_metaplectic");
  PhaseFunction2D kf(k.grid, k.grid);
  for (std::size_t j = 0; j < k.grid.size(); ++j)
    for (std::size_t l = 0; l < k.grid.size(); ++l)
      kf(j, l) = k.K(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
  const PhaseFunction2D mixed = partial_fourier(kf, Axis::p, Direction::inverse);
  return Symbol2D(std::sqrt(kTwoPi) * apply_U(mixed, FlowParams::theta0()));
}

OperatorKernel symbol_to_kernel(const Symbol2D& a) {
  require_symbol_grids(a);
  const long n = static_cast<long>(a.rows());
  const double dx = a.grid_x.dx(), dxi = a.grid_p.dx();
  // ah: rows 2k hold a(x_k, .), rows 2k+1 hold a(x_k + dx/2, .).
  Eigen::MatrixXcd ah(2 * n, n);
  cvec col(n), shifted(n);
  for (long m = 0; m < n; ++m) {
    for (long j = 0; j < n; ++j) col[j] = a(static_cast<std::size_t>(j), static_cast<std::size_t>(m));
    detail::half_shift(col.data(), shifted.data(), static_cast<std::size_t>(n), +1);
    for (long j = 0; j < n; ++j) {
      ah(2 * j, m) = col[j];
      ah(2 * j + 1, m) = shifted[j];
    }
  }
  Eigen::MatrixXcd ph(n, n);  // ph(m, l + N/2) = dxi/(2pi) e^{i l dx xi_m}
  for (long m = 0; m < n; ++m)
    for (long l = -n / 2; l < n / 2; ++l) {
      const double t = static_cast<double>(l) * dx * a.grid_p.node(static_cast<std::size_t>(m));
      ph(m, l + n / 2) = dxi / kTwoPi * cplx(std::cos(t), std::sin(t));
    }
  const Eigen::MatrixXcd P = ah * ph;  // P(s, l + N/2), s on the half grid
  Eigen::MatrixXcd K(n, n);
  for (long l = -n / 2; l < n / 2; ++l)
    for (long kk = 0; kk < n; ++kk) K(wrap(kk + l, n), kk) = P(wrap(2 * kk + l, 2 * n), l + n / 2);
  return {a.grid_x, K};
}

namespace {

bool is_theta0(const Theta& t) { return t.value() == FlowParams::theta0(); }

void warn_growth(const Symbol2D& a, const char* what) {
  if (a.polynomial_growth)
    warn(std::string(what) + ": symbol of polynomial growth under U(alpha) is dominated by wrap-around");
}

}  // namespace

Symbol2D theta_symbol(const Symbol2D& a, Theta theta) {
  require_symbol_grids(a);
  if (is_theta0(theta)) return a;
  warn_growth(a, "theta_symbol");
  Symbol2D out(apply_U(a, theta.value() - FlowParams::theta0()));
  out.polynomial_growth = a.polynomial_growth;
  return out;
}

Symbol2D weyl_from_theta_symbol(const Symbol2D& a_theta, Theta theta) {
  require_symbol_grids(a_theta);
  if (is_theta0(theta)) return a_theta;
  warn_growth(a_theta, "weyl_from_theta_symbol");
  Symbol2D out(apply_U_inverse(a_theta, theta.value() - FlowParams::theta0()));
  out.polynomial_growth = a_theta.polynomial_growth;
  return out;
}

namespace {

// Trigonometric upsampling of a periodic sequence from n to n*r samples.
void upsample(const cplx* in, cplx* out, std::size_t n, std::size_t r) {
  const std::size_t m = n * r;
  cvec f(n), g(m, 0.0);
  detail::plain_dft(in, f.data(), n, -1);
  const long nn = static_cast<long>(n), mm = static_cast<long>(m);
  for (long q = -nn / 2; q < nn / 2; ++q) g[wrap(q, mm)] = f[wrap(q, nn)] / static_cast<double>(n);
  detail::plain_dft(g.data(), out, m, +1);
}

PhaseFunction2D upsample_2d(const PhaseFunction2D& a, std::size_t r) {
  const std::size_t n1 = a.rows(), n2 = a.cols();
  cvec rows(n1 * n2 * r);
  for (std::size_t j = 0; j < n1; ++j) upsample(a.row(j), rows.data() + j * n2 * r, n2, r);
  PhaseFunction2D out(Grid1D(n1 * r, a.grid_x.x_min(), a.grid_x.dx() / r),
                      Grid1D(n2 * r, a.grid_p.x_min(), a.grid_p.dx() / r));
  cvec col(n1), res(n1 * r);
  for (std::size_t m = 0; m < n2 * r; ++m) {
    for (std::size_t j = 0; j < n1; ++j) col[j] = rows[j * n2 * r + m];
    upsample(col.data(), res.data(), n1, r);
    for (std::size_t j = 0; j < n1 * r; ++j) out(j, m) = res[j];
  }
  return out;
}

Symbol2D moyal_quadrature(const Symbol2D& a, const Symbol2D& b, int refine) {
  const long n = static_cast<long>(a.rows());
  if (a.rows() > 32 || a.cols() > 32)
    throw ConfigurationError("quadrature star product is limited to N <= 32 per axis");
  if (a.rows() != a.cols() || refine < 1) throw ConfigurationError("quadrature needs square grids and refine >= 1");
  const long r = refine, nf = n * r, nw = 2 * nf;
  const PhaseFunction2D af = upsample_2d(a, static_cast<std::size_t>(r));
  const PhaseFunction2D bf = upsample_2d(b, static_cast<std::size_t>(r));
  const double hx = af.grid_x.dx(), hp = af.grid_p.dx();
  const auto xf = af.grid_x.nodes(), pf = af.grid_p.nodes();
  std::vector<double> wx(nw), wp(nw);
  for (long i = 0; i < nw; ++i) {
    wx[i] = static_cast<double>(i - nw / 2) * hx;
    wp[i] = static_cast<double>(i - nw / 2) * hp;
  }
  // B(w) = sum_v e^{-2i (w_p v_x - v_p w_x)} b(v) hx hp, stored Bt(w_x, w_p).
  Eigen::MatrixXcd bm(nf, nf), e1(nf, nw), e2(nw, nf);
  for (long i = 0; i < nf; ++i)
    for (long j = 0; j < nf; ++j) bm(i, j) = bf(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  for (long v = 0; v < nf; ++v)
    for (long w = 0; w < nw; ++w) {
      e1(v, w) = std::exp(kI * (2.0 * wx[w] * pf[v])) * hp;
      e2(w, v) = std::exp(kI * (-2.0 * wp[w] * xf[v])) * hx;
    }
  const Eigen::MatrixXcd t1 = bm * e1;    // (v_x, w_x)
  const Eigen::MatrixXcd bw = e2 * t1;    // (w_p, w_x)
  std::vector<cvec> brow(nw, cvec(nw));   // brow[w_x][w_p], contiguous in w_p
  for (long i = 0; i < nw; ++i)
    for (long j = 0; j < nw; ++j) brow[i][j] = bw(j, i);
  const Grid1D gp = a.grid_p;
  Symbol2D out(a.grid_x, gp);
  const auto& k = simd::active();
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double zx = a.grid_x.node(i);
    const long zi = static_cast<long>(i) * r;
    cvec c(nf * nf), ex(nf);
    for (long ux = 0; ux < nf; ++ux)
      for (long up = 0; up < nf; ++up)
        c[ux * nf + up] = std::exp(kI * (2.0 * pf[up] * zx)) * af(static_cast<std::size_t>(ux), static_cast<std::size_t>(up));
    for (long j = 0; j < n; ++j) {
      const double zp = gp.node(static_cast<std::size_t>(j));
      const long zj = j * r;
      cplx s = 0.0;
      for (long ux = 0; ux < nf; ++ux) {
        const cplx inner = k.dotu(c.data() + ux * nf, brow[ux - zi + nw / 2].data() + (nw / 2 - zj), nf);
        s += std::exp(kI * (-2.0 * xf[ux] * zp)) * inner;
      }
      out(i, static_cast<std::size_t>(j)) = s * hx * hp / (kPi * kPi);
    }
  });
  return out;
}

}  // namespace

Symbol2D moyal_product(const Symbol2D& a, const Symbol2D& b, StarMethod method, int refine) {
  require_symbol_grids(a);
  require_symbol_grids(b);
  if (!a.grid_x.same_nodes(b.grid_x)) throw ConfigurationError("moyal_product: symbol grids differ");
  Symbol2D out = method == StarMethod::kernel
                     ? kernel_to_symbol(compose(symbol_to_kernel(a), symbol_to_kernel(b)))
                     : moyal_quadrature(a, b, refine);
  out.polynomial_growth = a.polynomial_growth || b.polynomial_growth;
  return out;
}

Symbol2D theta_product(const Symbol2D& a_theta, const Symbol2D& b_theta, Theta theta) {
  if (is_theta0(theta)) return moyal_product(a_theta, b_theta);
  const Symbol2D a = weyl_from_theta_symbol(a_theta, theta);
  const Symbol2D b = weyl_from_theta_symbol(b_theta, theta);
  return theta_symbol(moyal_product(a, b), theta);
}

Expectation expectation(const Symbol2D& a, const SampledFunction1D& psi, Theta theta) {
  const OperatorKernel k = symbol_to_kernel(a);
  Expectation e{};
  e.self_adjoint = k.is_self_adjoint(1e-8);
  if (!e.self_adjoint) warn("expectation: operator is not self-adjoint; value may be complex");
  const Symbol2D at = theta_symbol(a, theta);
  const PhaseFunction2D w = wigner_fractional(psi, psi, theta);
  e.phase_space = pairing(conj(at), w);
  e.kernel = inner(k.apply(psi), psi);
  return e;
}

}  // namespace mwt
