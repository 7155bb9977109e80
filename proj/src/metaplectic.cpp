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

#include "mwt/metaplectic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "fft.hpp"
#include "phase_ops.hpp"
#include "mwt/error.hpp"
#include "mwt/parallel.hpp"
#include "mwt/simd.hpp"
#include "mwt/symplectic.hpp"

namespace mwt {

Eigen::Matrix2d ShearFactor::matrix() const {
  Eigen::Matrix2d m;
  switch (kind) {
    case FactorKind::shear_x: m << 1.0, amount, 0.0, 1.0; break;
    case FactorKind::shear_xi: m << 1.0, 0.0, amount, 1.0; break;
    case FactorKind::quarter_turn: m << 0.0, 1.0, -1.0, 0.0; break;
    case FactorKind::inverse_quarter_turn: m << 0.0, -1.0, 1.0, 0.0; break;
  }
  return m;
}

Eigen::Matrix2d ShearFactorization::product() const {
  Eigen::Matrix2d p = Eigen::Matrix2d::Identity();
  for (const auto& f : factors) p = p * f.matrix();
  return p;
}

double ShearFactorization::max_shear() const {
  double m = 0.0;
  for (const auto& f : factors)
    if (f.kind == FactorKind::shear_x || f.kind == FactorKind::shear_xi) m = std::max(m, std::abs(f.amount));
  return m;
}

namespace {

// A = shear_x(b) shear_xi(c) shear_x(d) = [[1 + bc, b + d(1 + bc)], [c, 1 + cd]].
std::optional<ShearFactorization> three_shears(const Eigen::Matrix2d& A, double threshold) {
  const double c = A(1, 0);
  if (!(std::abs(c) > threshold)) return std::nullopt;
  const double b = (A(0, 0) - 1.0) / c, d = (A(1, 1) - 1.0) / c;
  ShearFactorization f;
  if (b != 0.0) f.factors.push_back({FactorKind::shear_x, b});
  f.factors.push_back({FactorKind::shear_xi, c});
  if (d != 0.0) f.factors.push_back({FactorKind::shear_x, d});
  return f;
}

}  // namespace

ShearFactorization factorize_shears(const Eigen::Matrix2d& A, bool allow_turns, double pivot_threshold) {
  if ((A - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-14) return {};
  std::vector<ShearFactorization> candidates;
  if (auto f = three_shears(A, pivot_threshold)) candidates.push_back(*f);
  if (allow_turns) {
    const ShearFactor turn{FactorKind::quarter_turn, 0.0};
    const ShearFactor back{FactorKind::inverse_quarter_turn, 0.0};
    // A = R (R^{-1} A) and A = R^{-1} (R A).
    if (auto f = three_shears(back.matrix() * A, pivot_threshold)) {
      f->factors.insert(f->factors.begin(), turn);
      candidates.push_back(*f);
    }
    if (auto f = three_shears(turn.matrix() * A, pivot_threshold)) {
      f->factors.insert(f->factors.begin(), back);
      candidates.push_back(*f);
    }
  }
  if (candidates.empty())
    throw InternalError("no shear factorization with a usable pivot (quarter turns unavailable on these grids)");
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const auto& a, const auto& b) { return a.max_shear() < b.max_shear(); });
}

Eigen::Matrix2d coordinate_map(double theta) { return flow_matrix(-theta).block_x_xip(); }

namespace {

// out(x, xi) = phi(x + b xi, xi): translate every column.
void shear_x(const PhaseFunction2D& in, PhaseFunction2D& out, double b) {
  const std::size_t nx = in.rows(), np = in.cols();
  const auto eta = in.grid_x.dual().nodes();
  parallel_for(np, [&](std::size_t m) {
    cvec col(nx), res(nx);
    for (std::size_t j = 0; j < nx; ++j) col[j] = in(j, m);
    detail::translate(col.data(), res.data(), nx, eta.data(), b * in.grid_p.node(m));
    for (std::size_t j = 0; j < nx; ++j) out(j, m) = res[j];
  });
}

// out(x, xi) = phi(x, xi + c x): translate every row.
void shear_xi(const PhaseFunction2D& in, PhaseFunction2D& out, double c) {
  const auto eta = in.grid_p.dual().nodes();
  parallel_for(in.rows(), [&](std::size_t j) {
    detail::translate(in.row(j), out.row(j), in.cols(), eta.data(), c * in.grid_x.node(j));
  });
}

// phi(xi, -x): out[j][m] = in[m][(N - j) % N]. phi(-xi, x): out[j][m] = in[(N - m) % N][j].
void turn(const PhaseFunction2D& in, PhaseFunction2D& out, bool inverse) {
  const std::size_t n = in.rows();
  if (in.cols() != n || !in.grid_x.same_nodes(in.grid_p))
    throw ConfigurationError("quarter turn needs coinciding x and xi grids");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m)
      out(j, m) = inverse ? in((n - m) % n, j) : in(m, (n - j) % n);
}

void apply_factor(PhaseFunction2D& phi, PhaseFunction2D& tmp, const ShearFactor& f, bool invert) {
  switch (f.kind) {
    case FactorKind::shear_x: shear_x(phi, tmp, invert ? -f.amount : f.amount); break;
    case FactorKind::shear_xi: shear_xi(phi, tmp, invert ? -f.amount : f.amount); break;
    case FactorKind::quarter_turn: turn(phi, tmp, invert); break;
    case FactorKind::inverse_quarter_turn: turn(phi, tmp, !invert); break;
  }
  std::swap(phi.values, tmp.values);
}

void require_phase_grids(const PhaseFunction2D& phi, const char* what) {
  require_symmetric(phi.grid_x, what);
  require_symmetric(phi.grid_p, what);
}

// Periodic trigonometric interpolation kernel for an even-N grid of length L,
// with the symmetric (cosine) Nyquist term: sin(N pi tau) / (N tan(pi tau)).
double trig_kernel(double t, double L, std::size_t N) {
  const double tau = t / L;
  const double tn = std::tan(kPi * tau);
  if (std::abs(tn) < 1e-13) {
    const double c = std::cos(kPi * tau);
    return std::cos(static_cast<double>(N) * kPi * tau) * c * c;
  }
  return std::sin(static_cast<double>(N) * kPi * tau) / (static_cast<double>(N) * tn);
}

// Keys cubic convolution weights (a = -1/2) for fractional offset s in [0, 1).
void cubic_weights(double s, double w[4]) {
  const auto k = [](double t) {
    t = std::abs(t);
    if (t < 1.0) return 1.5 * t * t * t - 2.5 * t * t + 1.0;
    if (t < 2.0) return -0.5 * t * t * t + 2.5 * t * t - 4.0 * t + 2.0;
    return 0.0;
  };
  w[0] = k(1.0 + s);
  w[1] = k(s);
  w[2] = k(1.0 - s);
  w[3] = k(2.0 - s);
}

PhaseFunction2D resample(const PhaseFunction2D& phi, const Eigen::Matrix2d& A, Interpolation interp) {
  const Grid1D& gx = phi.grid_x;
  const Grid1D& gp = phi.grid_p;
  const std::size_t nx = phi.rows(), np = phi.cols();
  PhaseFunction2D out(gx, gp);
  const auto& k = simd::active();
  parallel_for(nx, [&](std::size_t j) {
    cvec wv(np), tmp(nx);
    std::vector<double> wx(nx);
    for (std::size_t m = 0; m < np; ++m) {
      const double x = gx.node(j), xi = gp.node(m);
      const double u = A(0, 0) * x + A(0, 1) * xi;
      const double v = A(1, 0) * x + A(1, 1) * xi;
      if (interp == Interpolation::trigonometric) {
        for (std::size_t a = 0; a < nx; ++a) wx[a] = trig_kernel(u - gx.node(a), gx.length(), nx);
        for (std::size_t b = 0; b < np; ++b) wv[b] = trig_kernel(v - gp.node(b), gp.length(), np);
        for (std::size_t a = 0; a < nx; ++a) tmp[a] = k.dotu(phi.row(a), wv.data(), np);
        cplx s = 0.0;
        for (std::size_t a = 0; a < nx; ++a) s += wx[a] * tmp[a];
        out(j, m) = s;
      } else {
        const double fu = (u - gx.x_min()) / gx.dx(), fv = (v - gp.x_min()) / gp.dx();
        const double iu = std::floor(fu), iv = std::floor(fv);
        double w1[4], w2[4];
        cubic_weights(fu - iu, w1);
        cubic_weights(fv - iv, w2);
        cplx s = 0.0;
        const long n1 = static_cast<long>(nx), n2 = static_cast<long>(np);
        for (int a = 0; a < 4; ++a) {
          const long ra = ((static_cast<long>(iu) - 1 + a) % n1 + n1) % n1;
          for (int b = 0; b < 4; ++b) {
            const long cb = ((static_cast<long>(iv) - 1 + b) % n2 + n2) % n2;
            s += w1[a] * w2[b] * phi(static_cast<std::size_t>(ra), static_cast<std::size_t>(cb));
          }
        }
        out(j, m) = s;
      }
    }
  });
  return out;
}

}  // namespace

PhaseFunction2D apply_factorization(const PhaseFunction2D& phi, const ShearFactorization& f) {
  PhaseFunction2D cur = phi, tmp(phi.grid_x, phi.grid_p);
  for (const auto& factor : f.factors) apply_factor(cur, tmp, factor, false);
  return cur;
}

PhaseFunction2D apply_factorization_inverse(const PhaseFunction2D& phi, const ShearFactorization& f) {
  PhaseFunction2D cur = phi, tmp(phi.grid_x, phi.grid_p);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) apply_factor(cur, tmp, *it, true);
  return cur;
}

namespace {

ShearFactorization plan_for(const PhaseFunction2D& phi, double theta) {
  const bool turns = phi.rows() == phi.cols() && phi.grid_x.same_nodes(phi.grid_p);
  return factorize_shears(coordinate_map(theta), turns);
}

}  // namespace

PhaseFunction2D apply_T(const PhaseFunction2D& phi, double theta, TMethod method, Interpolation interp) {
  require_phase_grids(phi, "apply_T");
  if (method == TMethod::resample) return resample(phi, coordinate_map(theta), interp);
  return apply_factorization(phi, plan_for(phi, theta));
}

namespace {

PhaseFunction2D to_mixed(const PhaseFunction2D& psi) {
  require_phase_grids(psi, "apply_U");
  PhaseFunction2D phi = partial_fourier(psi, Axis::p, Direction::forward);
  return phi;
}

PhaseFunction2D from_mixed(const PhaseFunction2D& phi, const Grid1D& grid_p) {
  PhaseFunction2D out = partial_fourier(phi, Axis::p, Direction::inverse);
  out.grid_p = grid_p;
  return out;
}

}  // namespace

PhaseFunction2D apply_U(const PhaseFunction2D& psi, double theta) {
  PhaseFunction2D phi = to_mixed(psi);
  phi = apply_factorization(phi, plan_for(phi, theta));
  return from_mixed(phi, psi.grid_p);
}

PhaseFunction2D apply_U_inverse(const PhaseFunction2D& psi, double theta) {
  PhaseFunction2D phi = to_mixed(psi);
  phi = apply_factorization_inverse(phi, plan_for(phi, theta));
  return from_mixed(phi, psi.grid_p);
}

namespace detail {

PhaseFunction2D derivative_x(const PhaseFunction2D& f) {
  PhaseFunction2D out(f.grid_x, f.grid_p);
  const std::size_t nx = f.rows();
  const auto eta = f.grid_x.dual().nodes();
  parallel_for(f.cols(), [&](std::size_t m) {
    cvec col(nx), res(nx);
    for (std::size_t j = 0; j < nx; ++j) col[j] = f(j, m);
    detail::spectral_derivative(col.data(), res.data(), nx, eta.data());
    for (std::size_t j = 0; j < nx; ++j) out(j, m) = res[j];
  });
  return out;
}

PhaseFunction2D derivative_p(const PhaseFunction2D& f) {
  PhaseFunction2D out(f.grid_x, f.grid_p);
  const auto eta = f.grid_p.dual().nodes();
  parallel_for(f.rows(), [&](std::size_t j) {
    detail::spectral_derivative(f.row(j), out.row(j), f.cols(), eta.data());
  });
  return out;
}

PhaseFunction2D times_x(const PhaseFunction2D& f) {
  PhaseFunction2D out = f;
  for (std::size_t j = 0; j < f.rows(); ++j)
    for (std::size_t m = 0; m < f.cols(); ++m) out(j, m) *= f.grid_x.node(j);
  return out;
}

PhaseFunction2D times_p(const PhaseFunction2D& f) {
  PhaseFunction2D out = f;
  for (std::size_t j = 0; j < f.rows(); ++j)
    for (std::size_t m = 0; m < f.cols(); ++m) out(j, m) *= f.grid_p.node(m);
  return out;
}

}  // namespace detail

using detail::derivative_p;
using detail::derivative_x;
using detail::times_p;
using detail::times_x;

PhaseFunction2D apply_generator(const PhaseFunction2D& psi) {
  const PhaseFunction2D phi = to_mixed(psi);
  const PhaseFunction2D dx = derivative_x(phi);
  const PhaseFunction2D dxi = derivative_p(phi);
  const PhaseFunction2D x_dx = times_x(dx), dx_x = derivative_x(times_x(phi));
  const PhaseFunction2D xi_dxi = times_p(dxi), dxi_xi = derivative_p(times_p(phi));
  const PhaseFunction2D xi_dx = times_p(dx), x_dxi = times_x(dxi);
  PhaseFunction2D h(phi.grid_x, phi.grid_p);
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    h.values[i] = kI * (-2.0 * xi_dx.values[i] + 0.5 * (x_dx.values[i] + dx_x.values[i]) -
                        0.5 * (xi_dxi.values[i] + dxi_xi.values[i]) + 4.0 * x_dxi.values[i]);
  }
  return from_mixed(h, psi.grid_p);
}

}  // namespace mwt
