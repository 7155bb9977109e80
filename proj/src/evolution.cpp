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

#include <cmath>
#include <functional>
#include <string>

#include "mwt/bopp.hpp"
#include "mwt/error.hpp"
#include "mwt/metaplectic.hpp"
#include "mwt/symplectic.hpp"

namespace mwt {

const char* to_string(Integrator i) {
  switch (i) {
    case Integrator::exact: return "exact";
    case Integrator::krylov: return "krylov";
    case Integrator::crank_nicolson: return "crank_nicolson";
  }
  return "?";
}

namespace {

using Op = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

// exp(-i tau H) v by Lanczos with full reorthogonalization.
Eigen::VectorXcd krylov_step(const Op& H, const Eigen::VectorXcd& v, double tau, std::size_t m, std::size_t steps) {
  const double beta0 = v.norm();
  if (beta0 == 0.0) return v;
  const Eigen::Index dim = v.size();
  const Eigen::Index mm = std::min<Eigen::Index>(static_cast<Eigen::Index>(m), dim);
  Eigen::MatrixXcd V(dim, mm + 1);
  Eigen::VectorXd alpha(mm), beta(mm);
  V.col(0) = v / beta0;
  Eigen::Index k = 0;
  double last_beta = 0.0;
  bool invariant = false;  // happy breakdown: the Krylov space is H-invariant
  for (; k < mm; ++k) {
    Eigen::VectorXcd w = H(V.col(k));
    alpha(k) = V.col(k).dot(w).real();
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j <= k; ++j) w -= V.col(j).dot(w) * V.col(j);
    last_beta = w.norm();
    beta(k) = last_beta;
    if (last_beta < 1e-13 * std::abs(alpha(k)) + 1e-300) {
      ++k;
      invariant = true;
      break;
    }
    V.col(k + 1) = w / last_beta;
  }
  const Eigen::Index used = k;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(used, used);
  for (Eigen::Index i = 0; i < used; ++i) {
    T(i, i) = alpha(i);
    if (i + 1 < used) T(i, i + 1) = T(i + 1, i) = beta(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(used);
  for (Eigen::Index i = 0; i < used; ++i) {
    const cplx ph = std::exp(cplx(0.0, -tau * es.eigenvalues()(i)));
    y += ph * es.eigenvectors()(0, i) * es.eigenvectors().col(i).cast<cplx>();
  }
  // a posteriori error estimate of the truncated Krylov expansion
  const double err = invariant ? 0.0 : beta0 * last_beta * std::abs(y(used - 1));
  if (err > 1e-9 * beta0)
    throw NumericalError("Krylov step too large (estimated error " + std::to_string(err) +
                         "); try steps >= " + std::to_string(4 * steps));
  return beta0 * (V.leftCols(used) * y);
}

// Solves (I + i tau/2 H) x = b by BiCGSTAB.
Eigen::VectorXcd cn_solve(const Op& H, const Eigen::VectorXcd& b, double tau, double tol, std::size_t steps) {
  const cplx h(0.0, 0.5 * tau);
  const auto A = [&](const Eigen::VectorXcd& x) -> Eigen::VectorXcd { return x + h * H(x); };
  Eigen::VectorXcd x = b, r = b - A(x), rh = r, p = Eigen::VectorXcd::Zero(b.size()), v = p;
  cplx rho = 1.0, alpha = 1.0, omega = 1.0;
  const double bn = b.norm();
  for (int it = 0; it < 2000; ++it) {
    if (r.norm() <= tol * bn) return x;
    const cplx rho_new = rh.dot(r);
    const cplx beta = (rho_new / rho) * (alpha / omega);
    p = r + beta * (p - omega * v);
    v = A(p);
    alpha = rho_new / rh.dot(v);
    const Eigen::VectorXcd s = r - alpha * v;
    if (s.norm() <= tol * bn) return x + alpha * p;
    const Eigen::VectorXcd t = A(s);
    omega = t.dot(s) / t.dot(t);
    x += alpha * p + omega * s;
    r = s - omega * t;
    rho = rho_new;
  }
  throw NumericalError("Crank-Nicolson solve did not converge; try steps >= " + std::to_string(4 * steps));
}

Eigen::VectorXcd as_vec(const cvec& v) { return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size())); }
cvec as_cvec(const Eigen::VectorXcd& v) { return cvec(v.data(), v.data() + v.size()); }

Eigen::MatrixXcd unitary_from_hermitian(const Eigen::MatrixXcd& H, double tau) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (H + H.adjoint()));
  Eigen::VectorXcd ph(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < ph.size(); ++i) ph(i) = std::exp(cplx(0.0, -tau * es.eigenvalues()(i)));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Full eigendecomposition through LAPACK for the large dense case.
Eigen::MatrixXcd unitary_from_hermitian_lapack(Eigen::MatrixXcd H, double tau) {
  H = 0.5 * (H + H.adjoint()).eval();
  const lapack_int n = static_cast<lapack_int>(H.rows());
  Eigen::VectorXd w(n);
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, H.data(), n, w.data());
  if (info != 0) throw NumericalError("zheevd failed with info = " + std::to_string(info));
  Eigen::VectorXcd ph(n);
  for (lapack_int i = 0; i < n; ++i) ph(i) = std::exp(cplx(0.0, -tau * w(i)));
  return H * ph.asDiagonal() * H.adjoint();
}

}  // namespace

EvolutionResult evolve_pair(const PhaseOperator& a, const SampledFunction1D& psi0, const Window& w, double t_final,
                            std::size_t steps, const EvolutionOptions& opt) {
  if (steps == 0) throw ConfigurationError("steps must be positive");
  if (!std::isfinite(t_final)) throw ConfigurationError("t_final must be finite");
  if (!a.kernel().is_self_adjoint(1e-8)) throw ConfigurationError("evolve_pair needs a self-adjoint symbol");
  const Grid1D gx = a.grid(), gp = gx.dual();
  const Theta th = intertwining_angle(a.representation());
  const double tau = t_final / static_cast<double>(steps);
  const std::size_t n = gx.size(), dim = n * gp.size();

  EvolutionResult res;
  res.integrator_1d = opt.integrator;
  res.integrator_phase = opt.integrator;
  if (opt.integrator == Integrator::exact) {
    if (n > 256) res.integrator_1d = Integrator::crank_nicolson;
    if (a.representation() == Representation::bopp_direct ? dim > 4096 : n > 256)
      res.integrator_phase = Integrator::crank_nicolson;
  }

  const Eigen::MatrixXcd H1 = a.kernel().matrix();
  const Op op1 = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return H1 * v; };
  const Op op2 = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return as_vec(a.apply(PhaseFunction2D(gx, gp, as_cvec(v))).values);
  };

  // Step operators.
  Eigen::MatrixXcd P1, P2;
  if (res.integrator_1d == Integrator::exact) P1 = unitary_from_hermitian(H1, tau);
  if (res.integrator_phase == Integrator::exact && a.representation() == Representation::bopp_direct)
    P2 = unitary_from_hermitian_lapack(assemble_dense(a), tau);
  else if (res.integrator_phase == Integrator::exact && P1.size() == 0)
    P1 = unitary_from_hermitian(H1, tau);

  using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto step_1d = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    switch (res.integrator_1d) {
      case Integrator::exact: return P1 * v;
      case Integrator::krylov: return krylov_step(op1, v, tau, opt.krylov_dim, steps);
      case Integrator::crank_nicolson: {
        const Eigen::VectorXcd b = v - cplx(0.0, 0.5 * tau) * op1(v);
        return cn_solve(op1, b, tau, opt.solver_tolerance, steps);
      }
    }
    return v;
  };
  const auto step_phase = [&](const PhaseFunction2D& f) -> PhaseFunction2D {
    const Eigen::VectorXcd v = as_vec(f.values);
    switch (res.integrator_phase) {
      case Integrator::exact: {
        if (a.representation() == Representation::bopp_direct)
          return PhaseFunction2D(gx, gp, as_cvec(P2 * v));
        // (e^{-i tau a} (x) I) in the extended frame, conjugated by S if needed.
        const bool conj = a.representation() == Representation::bopp_conjugated;
        PhaseFunction2D g = conj ? apply_U_inverse(f, FlowParams::theta0()) : f;
        Eigen::Map<RowMajor> m(g.values.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(gp.size()));
        m = (P1 * m).eval();
        return conj ? apply_U(g, FlowParams::theta0()) : g;
      }
      case Integrator::krylov:
        return PhaseFunction2D(gx, gp, as_cvec(krylov_step(op2, v, tau, opt.krylov_dim, steps)));
      case Integrator::crank_nicolson: {
        const Eigen::VectorXcd b = v - cplx(0.0, 0.5 * tau) * op2(v);
        return PhaseFunction2D(gx, gp, as_cvec(cn_solve(op2, b, tau, opt.solver_tolerance, steps)));
      }
    }
    return f;
  };

  SampledFunction1D psi = psi0;
  PhaseFunction2D Psi = windowed_transform(psi0, w, th);
  const double n1 = psi.norm(), n2 = Psi.norm();
  double drift1 = 0.0, drift2 = 0.0;
  for (std::size_t s = 1; s <= steps; ++s) {
    psi = SampledFunction1D(gx, as_cvec(step_1d(as_vec(psi.values))));
    Psi = step_phase(Psi);
    const double t = tau * static_cast<double>(s);
    const PhaseFunction2D ref = windowed_transform(psi, w, th);
    res.times.push_back(t);
    res.divergences.push_back((Psi - ref).norm() / Psi.norm());
    drift1 = std::max(drift1, std::abs(psi.norm() - n1));
    drift2 = std::max(drift2, std::abs(Psi.norm() - n2));
    if (opt.record_states) res.states.push_back(psi);
  }
  const double span = std::abs(t_final) > 0.0 ? std::abs(t_final) : 1.0;
  res.norm_drift_1d = drift1 / span;
  res.norm_drift_phase = drift2 / span;
  res.divergence = res.divergences.back();
  res.psi = std::move(psi);
  res.phase = std::move(Psi);
  return res;
}

}  // namespace mwt
