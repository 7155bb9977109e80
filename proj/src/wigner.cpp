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

#include "mwt/wigner.hpp"

#include <cmath>
#include <string>

#include "fft.hpp"
#include "mwt/error.hpp"
#include "mwt/metaplectic.hpp"
#include "mwt/parallel.hpp"
#include "mwt/simd.hpp"
#include "mwt/states.hpp"
#include "mwt/symplectic.hpp"

namespace mwt {

Window::Window(SampledFunction1D phi) : phi_(std::move(phi)) {
  require_symmetric(phi_.grid, "Window");
  const double n = phi_.norm();
  if (!(n > 0.0)) throw ConfigurationError("window must be nonzero");
  if (std::abs(n - 1.0) > 1e-6) warn("window norm " + std::to_string(n) + " renormalized to 1");
  for (cplx& v : phi_.values) v /= n;
  phi_hat_ = fourier_1d(phi_, Direction::forward);
}

Window Window::gaussian(const Grid1D& g) { return Window(states::gaussian(g)); }

Theta::Theta(double theta) {
  const double period = FlowParams::period();
  double r = std::fmod(theta, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  value_ = r;
}

Theta Theta::wigner() { return Theta(FlowParams::theta0()); }

namespace {

void require_same_grid(const SampledFunction1D& a, const SampledFunction1D& b) {
  if (!a.grid.same_nodes(b.grid)) throw ConfigurationError("functions live on different grids");
  require_symmetric(a.grid, "wigner");
}

// Samples at x_min + s*dx/2, s = 0..2N-1.
cvec half_grid(const SampledFunction1D& f, HalfShift mode) {
  const std::size_t n = f.size();
  cvec h(2 * n), shifted(n);
  if (mode == HalfShift::upsampled) {
    detail::half_shift(f.values.data(), shifted.data(), n, +1);
  } else {
    const double L = f.grid.length();
    for (std::size_t k = 0; k < n; ++k) {
      const double t = (static_cast<double>(k) + 0.5) * f.grid.dx();
      cplx s = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        const double tau = (t - static_cast<double>(a) * f.grid.dx()) / L;
        s += f[a] * (std::sin(static_cast<double>(n) * kPi * tau) / (static_cast<double>(n) * std::tan(kPi * tau)));
      }
      shifted[k] = s;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    h[2 * k] = f[k];
    h[2 * k + 1] = shifted[k];
  }
  return h;
}

}  // namespace

PhaseFunction2D wigner_direct(const SampledFunction1D& psi, const SampledFunction1D& phi, HalfShift mode) {
  require_same_grid(psi, phi);
  const std::size_t n = psi.size();
  const long n2 = 2 * static_cast<long>(n);
  const cvec ph = half_grid(psi, mode), fh = half_grid(phi, mode);
  const Grid1D gp = psi.grid.dual();
  // exp(i p_m l dx) = exp(2 pi i (m - N/2) l / N) depends on l mod N only.
  std::vector<cvec> table(n, cvec(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l) {
      const double a = kTwoPi * (static_cast<double>(m) - 0.5 * static_cast<double>(n)) * static_cast<double>(l) /
                       static_cast<double>(n);
      table[m][l] = {std::cos(a), std::sin(a)};
    }
  PhaseFunction2D out(psi.grid, gp);
  const double scale = psi.grid.dx() / kTwoPi;
  const auto& k = simd::active();
  parallel_for(n, [&](std::size_t j) {
    const long c = 2 * static_cast<long>(j);
    const long lmax = std::min(c, n2 - 1 - c);
    // v[l + lmax] = psi(x - l dx/2) conj phi(x + l dx/2); the phase for l is
    // table[m][l mod N], so gather a matching phase row per m.
    const std::size_t len = static_cast<std::size_t>(2 * lmax + 1);
    cvec v(len), row(len);
    for (long l = -lmax; l <= lmax; ++l) v[static_cast<std::size_t>(l + lmax)] = ph[c - l] * std::conj(fh[c + l]);
    for (std::size_t m = 0; m < n; ++m) {
      const long nn = static_cast<long>(n);
      for (long l = -lmax; l <= lmax; ++l) row[static_cast<std::size_t>(l + lmax)] = table[m][((l % nn) + nn) % nn];
      out(j, m) = scale * k.dotu(v.data(), row.data(), len);
    }
  });
  return out;
}

PhaseFunction2D wigner_fractional(const SampledFunction1D& psi, const SampledFunction1D& phi, Theta theta) {
  require_same_grid(psi, phi);
  const PhaseFunction2D t = tensor_outer(psi, conj(fourier_1d(phi, Direction::forward)));
  return (1.0 / std::sqrt(kTwoPi)) * apply_U(t, theta.value());
}

PhaseFunction2D wigner_metaplectic(const SampledFunction1D& psi, const SampledFunction1D& phi) {
  return wigner_fractional(psi, phi, Theta::wigner());
}

PhaseFunction2D windowed_transform(const SampledFunction1D& psi, const Window& w, Theta theta) {
  if (!psi.grid.same_nodes(w.grid())) throw ConfigurationError("state and window grids differ");
  return apply_U(tensor_outer(psi, conj(w.transform())), theta.value());
}

SampledFunction1D windowed_adjoint(const PhaseFunction2D& psi, const Window& w, Theta theta) {
  if (!psi.grid_x.same_nodes(w.grid()) || !psi.grid_p.same_nodes(w.transform().grid))
    throw ConfigurationError("phase grid is not (window grid, dual window grid)");
  const PhaseFunction2D back = apply_U_inverse(psi, theta.value());
  SampledFunction1D out(psi.grid_x);
  const double dp = psi.grid_p.dx();
  const auto& k = simd::active();
  for (std::size_t j = 0; j < psi.rows(); ++j)
    out[j] = dp * k.dotu(back.row(j), w.transform().values.data(), psi.cols());
  return out;
}

PhaseFunction2D windowed_projection(const PhaseFunction2D& psi, const Window& w, Theta theta) {
  return windowed_transform(windowed_adjoint(psi, w, theta), w, theta);
}

SampledFunction1D position_marginal(const PhaseFunction2D& w) {
  SampledFunction1D out(w.grid_x);
  for (std::size_t j = 0; j < w.rows(); ++j) {
    cplx s = 0.0;
    for (std::size_t m = 0; m < w.cols(); ++m) s += w(j, m);
    out[j] = w.grid_p.dx() * s;
  }
  return out;
}

}  // namespace mwt
