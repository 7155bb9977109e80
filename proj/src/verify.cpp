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

// Acceptance criteria. Every tolerance below is fixed here on purpose: the
// suite must not be tunable from the command line.

#include "mwt/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "mwt/bopp.hpp"
#include "mwt/error.hpp"
#include "mwt/metaplectic.hpp"
#include "mwt/states.hpp"
#include "mwt/symplectic.hpp"
#include "mwt/weyl.hpp"
#include "mwt/wigner.hpp"

namespace mwt::verify {

bool Check::pass() const {
  if (!std::isfinite(value)) return false;
  return upper ? value <= tolerance : value >= tolerance;
}

bool CriterionReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return !checks.empty();
}

std::string CriterionReport::summary_line() const {
  // Report the failing check, or else the one closest to its bound.
  const Check* shown = nullptr;
  double worst = -1.0;
  for (const auto& c : checks) {
    double r = c.upper ? c.value / c.tolerance : c.tolerance / std::max(c.value, 1e-300);
    if (!c.pass()) r = 1e300;
    if (r > worst) {
      worst = r;
      shown = &c;
    }
  }
  char buf[512];
  if (shown == nullptr) {
    std::snprintf(buf, sizeof buf, "[FAIL] %2d %-10s %s  (no checks)", id, key.c_str(), title.c_str());
  } else {
    std::snprintf(buf, sizeof buf, "[%s] %2d %-10s %-34s %zu checks; %s: %.3e %s %.1e  (%.2fs)",
                  pass() ? "PASS" : "FAIL", id, key.c_str(), title.c_str(), checks.size(), shown->name.c_str(),
                  shown->value, shown->upper ? "<=" : ">=", shown->tolerance, seconds);
  }
  return buf;
}

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list{
      {1, "flow", "Flow algebra"},
      {2, "propagator", "Metaplectic propagator"},
      {3, "wigner", "Wigner equivalence"},
      {4, "moyal", "Moyal identity (standard, fractional)"},
      {5, "windowed", "Windowed calculus"},
      {6, "weyl", "Weyl calculus"},
      {7, "star", "Star products"},
      {8, "bopp", "Bopp representation"},
      {9, "spectral", "Spectral equivalence"},
      {10, "dynamics", "Dynamical equivalence"},
      {11, "symmetry", "Symmetry identities"},
  };
  return list;
}

int criterion_id(const std::string& name) {
  for (const auto& c : criteria())
    if (name == c.key || name == std::to_string(c.id)) return c.id;
  return 0;
}

namespace {

double theta0() { return FlowParams::theta0(); }

void normalize_max(PhaseFunction2D& f) {
  const double m = max_abs(f.values);
  for (cplx& v : f.values) v /= m;
}

double rel_max(const cvec& a, const cvec& b) { return max_abs_diff(a, b) / max_abs(b); }

Symbol2D random_symbol(const Grid1D& g, std::mt19937_64& rng) {
  return Symbol2D(states::random_smooth_2d(g, g.dual(), rng));
}

OperatorKernel random_kernel(const Grid1D& g, std::mt19937_64& rng) {
  const PhaseFunction2D f = states::random_smooth_2d(g, g, rng);
  Eigen::MatrixXcd K(g.size(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t k = 0; k < g.size(); ++k) K(j, k) = f(j, k);
  return {g, K};
}

// ---------------------------------------------------------------------------

void flow(CriterionReport& r, std::mt19937_64& rng) {
  Eigen::Matrix4d st = Eigen::Matrix4d::Zero();
  st(0, 0) = 0.5;  // x'  = x/2 + xi_p/2
  st(0, 3) = 0.5;
  st(1, 1) = 0.5;  // p'  = p/2 + xi_x/2
  st(1, 2) = 0.5;
  st(2, 2) = 1.0;  // xi_x' = xi_x - p
  st(2, 1) = -1.0;
  st(3, 3) = 1.0;  // xi_p' = xi_p - x
  st(3, 0) = -1.0;
  r.checks.push_back({"M(theta0) vs closed-form map", (flow_matrix(theta0()).m - st).cwiseAbs().maxCoeff(), 1e-14});

  std::uniform_real_distribution<double> th(-5.0, 5.0);
  const Eigen::Matrix4d J = symplectic_J();
  double symp = 0.0, group = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = th(rng), b = th(rng);
    const Eigen::Matrix4d M = flow_matrix(a).m;
    symp = std::max(symp, (M.transpose() * J * M - J).cwiseAbs().maxCoeff());
    group = std::max(group, (flow_matrix(a).m * flow_matrix(b).m - flow_matrix(a + b).m).cwiseAbs().maxCoeff());
  }
  r.checks.push_back({"M^T J M = J (100 random theta)", symp, 1e-12});
  r.checks.push_back({"group law (100 random pairs)", group, 1e-12});
  r.checks.push_back({"period 2pi/sqrt7",
                      (flow_matrix(FlowParams::period()).m - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-12});
  const double h = 1e-6;
  const Eigen::Matrix4d fd = (flow_matrix(h).m - flow_matrix(-h).m) / (2 * h);
  r.checks.push_back({"generator vs Hamiltonian field", (fd - hamiltonian_field_matrix()).cwiseAbs().maxCoeff(), 1e-8});
}

void propagator(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(128);
  PhaseFunction2D psi = states::random_smooth_2d(g, g.dual(), rng);
  normalize_max(psi);
  const double n0 = psi.norm();
  double drift = 0.0;
  for (double t : {0.3, theta0(), 1.7}) drift = std::max(drift, std::abs(apply_U(psi, t).norm() - n0) / n0);
  r.checks.push_back({"unitarity (relative norm drift)", drift, 1e-9});

  double group = 0.0;
  const double pairs[][2] = {{0.3, 0.5}, {theta0(), 1.1}, {1.7, -0.6}, {2.0, 1.0}};
  for (const auto& p : pairs)
    group = std::max(group, max_abs_diff(apply_U(apply_U(psi, p[1]), p[0]).values, apply_U(psi, p[0] + p[1]).values));
  r.checks.push_back({"group law U(a)U(b) = U(a+b)", group, 1e-6});

  const double per = FlowParams::period();
  r.checks.push_back({"U(2pi/sqrt7) = id", max_abs_diff(apply_U(psi, per).values, psi.values), 1e-6});
  r.checks.push_back({"U(0.9) U(period - 0.9) = id",
                      max_abs_diff(apply_U(apply_U(psi, per - 0.9), 0.9).values, psi.values), 1e-6});

  const double h = 1e-4;
  const PhaseFunction2D fd = (1.0 / (2 * h)) * (apply_U(psi, h) - apply_U(psi, -h));
  const PhaseFunction2D gen = cplx(0.0, -1.0) * apply_generator(psi);
  r.checks.push_back({"generator finite difference (rel L2)", relative_l2(fd.values, gen.values), 1e-5});
}

void wigner(CriterionReport& r, std::mt19937_64&) {
  const Grid1D g = Grid1D::self_dual(128);
  const auto gauss = states::gaussian(g);
  r.checks.push_back({"(gaussian, gaussian)",
                      max_abs_diff(wigner_metaplectic(gauss, gauss).values, wigner_direct(gauss, gauss).values), 1e-6});
  const auto h1 = states::hermite(g, 1), h2 = states::hermite(g, 2);
  r.checks.push_back({"(hermite1, hermite2)",
                      max_abs_diff(wigner_metaplectic(h1, h2).values, wigner_direct(h1, h2).values), 1e-6});
  const auto h3 = states::hermite(g, 3), coh = states::coherent(g, 1.0, -0.5);
  r.checks.push_back({"(hermite3, coherent)",
                      max_abs_diff(wigner_metaplectic(h3, coh).values, wigner_direct(h3, coh).values), 1e-6});
}

void moyal(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(128);
  const double thetas[] = {0.0, 0.1, theta0(), 2 * theta0()};
  const char* names[] = {"theta=0", "theta=0.1", "theta=theta0", "theta=2theta0"};
  for (int t = 0; t < 4; ++t) {
    double worst = 0.0;
    for (int q = 0; q < 20; ++q) {
      const auto p1 = states::random_smooth(g, rng), f1 = states::random_smooth(g, rng);
      const auto p2 = states::random_smooth(g, rng), f2 = states::random_smooth(g, rng);
      const Theta th(thetas[t]);
      const cplx lhs = inner(wigner_fractional(p1, f1, th), wigner_fractional(p2, f2, th));
      const cplx rhs = inner(p1, p2) * std::conj(inner(f1, f2)) / kTwoPi;
      // Normalized by (2pi)^{-1} |psi1||psi2||phi1||phi2|, the bound of both sides.
      const double scale = p1.norm() * p2.norm() * f1.norm() * f2.norm() / kTwoPi;
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    r.checks.push_back({std::string("fractional Moyal ") + names[t] + " (20 quartets)", worst, 1e-7});
  }
  const auto psi = states::random_smooth(g, rng), phi = states::random_smooth(g, rng);
  const double n = wigner_metaplectic(psi, phi).norm();
  r.checks.push_back({"|W(psi,phi)| = (2pi)^{-1/2}", std::abs(n - 1 / std::sqrt(kTwoPi)) * std::sqrt(kTwoPi), 1e-8});
}

void windowed(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(128);
  const Window w = Window::gaussian(g);
  double recon = 0.0, idem = 0.0, adj = 0.0, psa = 0.0;
  for (double t : {0.0, 0.4, theta0()}) {
    const Theta th(t);
    for (int i = 0; i < 5; ++i) {
      const auto psi = states::random_smooth(g, rng);
      recon = std::max(recon, max_abs_diff(windowed_adjoint(windowed_transform(psi, w, th), w, th).values, psi.values));
      PhaseFunction2D Psi = states::random_smooth_2d(g, g.dual(), rng);
      normalize_max(Psi);
      const PhaseFunction2D P1 = windowed_projection(Psi, w, th);
      idem = std::max(idem, max_abs_diff(windowed_projection(P1, w, th).values, P1.values));
      const auto xi = states::random_smooth(g, rng);
      const cplx a = inner(windowed_adjoint(Psi, w, th), xi), b = inner(Psi, windowed_transform(xi, w, th));
      adj = std::max(adj, std::abs(a - b) / (Psi.norm() * xi.norm()));
      PhaseFunction2D Phi = states::random_smooth_2d(g, g.dual(), rng);
      const cplx c = inner(P1, Phi), d = inner(Psi, windowed_projection(Phi, w, th));
      psa = std::max(psa, std::abs(c - d) / (Psi.norm() * Phi.norm()));
    }
  }
  r.checks.push_back({"reconstruction W*W = 1", recon, 1e-6});
  r.checks.push_back({"projection idempotency", idem, 1e-6});
  r.checks.push_back({"adjointness <W*Psi,xi> = <Psi,W xi>", adj, 1e-8});
  r.checks.push_back({"projection self-adjoint", psa, 1e-8});
}

void weyl(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(128);
  const Symbol2D a = random_symbol(g, rng);
  r.checks.push_back({"symbol -> kernel -> symbol", rel_max(kernel_to_symbol(symbol_to_kernel(a)).values, a.values), 1e-8});
  const OperatorKernel k = random_kernel(g, rng);
  const OperatorKernel k2 = symbol_to_kernel(kernel_to_symbol(k));
  const Eigen::MatrixXcd dk = k2.K - k.K;
  r.checks.push_back({"kernel -> symbol -> kernel", dk.cwiseAbs().maxCoeff() / k.K.cwiseAbs().maxCoeff(), 1e-8});

  const OperatorKernel ka = symbol_to_kernel(a);
  const Symbol2D b = kernel_to_symbol(ka.adjoint());
  double wk = 0.0, kerff = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto psi = states::random_smooth(g, rng), phi = states::random_smooth(g, rng);
    const cplx lhs = pairing(ka.apply(psi), conj(phi));
    const double scale = max_abs(a.values) * psi.norm() * phi.norm();
    wk = std::max(wk, std::abs(lhs - pairing(a, wigner_metaplectic(psi, phi))) / scale);
    for (double t : {0.0, 0.4, 2 * theta0()}) {
      const Theta th(t);
      const cplx rhs = pairing(conj(theta_symbol(b, th)), wigner_fractional(psi, phi, th));
      kerff = std::max(kerff, std::abs(lhs - rhs) / scale);
    }
  }
  r.checks.push_back({"kernel formula <a psi, conj phi> = <a, W>", wk, 1e-7});
  r.checks.push_back({"fractional kernel formula (theta=0,0.4,2theta0)", kerff, 1e-6});

  const auto psi = states::random_smooth(g, rng), phi = states::random_smooth(g, rng);
  const Symbol2D s1 = kernel_to_symbol(OperatorKernel::rank_one(psi, phi));
  r.checks.push_back({"rank-one symbol = 2pi W(psi,phi)",
                      max_abs_diff(s1.values, (kTwoPi * wigner_direct(psi, phi)).values), 1e-6});
  r.info.push_back({"metaplectic vs diagonal kernel_to_symbol (rank one)",
                    max_abs_diff(kernel_to_symbol_metaplectic(OperatorKernel::rank_one(psi, phi)).values, s1.values)});
}

Symbol2D gaussian_symbol(const Grid1D& g, double x0, double p0) {
  return sample_symbol(g, [=](double x, double xi) {
    return std::exp(-0.5 * ((x - x0) * (x - x0) + (xi - p0) * (xi - p0)));
  });
}

void star(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(128);
  const Symbol2D sx = sample_symbol(g, [](double x, double) { return x; }, true);
  const Symbol2D sxi = sample_symbol(g, [](double, double xi) { return xi; }, true);
  Symbol2D c = moyal_product(sx, sxi);
  const Symbol2D c2 = moyal_product(sxi, sx);
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] -= c2.values[i] + kI;
  // Weak form: pair c - i against cross-Wigner functions of localized states.
  double weak = 0.0;
  const double centers[][2] = {{0.0, 0.0}, {1.0, -0.5}, {-1.5, 1.0}, {2.0, 2.0}};
  for (const auto& u : centers)
    for (const auto& v : centers) {
      const auto psi = states::coherent(g, u[0], u[1]), phi = states::coherent(g, v[0], v[1]);
      weak = std::max(weak, std::abs(pairing(c, wigner_metaplectic(psi, phi))));
    }
  r.checks.push_back({"commutator x*xi - xi*x = i (weak form)", weak, 1e-6});
  double interior = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t m = 0; m < g.size(); ++m)
      if (std::abs(g.node(j)) <= 3.0 && std::abs(c.grid_p.node(m)) <= 3.0) interior = std::max(interior, std::abs(c(j, m)));
  r.info.push_back({"commutator pointwise |c - i| on |x|,|xi| <= 3", interior});

  const Grid1D g32 = Grid1D::self_dual(32);
  const Symbol2D a32 = gaussian_symbol(g32, 0.5, -0.3), b32 = gaussian_symbol(g32, -0.4, 0.6);
  r.checks.push_back({"kernel path vs 4D quadrature (N=32)",
                      max_abs_diff(moyal_product(a32, b32, StarMethod::kernel).values,
                                   moyal_product(a32, b32, StarMethod::quadrature, 2).values),
                      1e-4});

  const Symbol2D a = random_symbol(g, rng), b = random_symbol(g, rng), cc = random_symbol(g, rng);
  const Symbol2D left = moyal_product(moyal_product(a, b), cc), right = moyal_product(a, moyal_product(b, cc));
  r.checks.push_back({"associativity (Moyal, kernel path)", relative_l2(left.values, right.values), 1e-8});

  const Theta th(0.4);
  const Symbol2D at = theta_symbol(a, th), bt = theta_symbol(b, th), ct = theta_symbol(cc, th);
  const Symbol2D lt = theta_product(theta_product(at, bt, th), ct, th);
  const Symbol2D rt = theta_product(at, theta_product(bt, ct, th), th);
  r.checks.push_back({"associativity (theta-product, theta=0.4)", relative_l2(lt.values, rt.values), 1e-5});

  const OperatorKernel ka = OperatorKernel::from_function(g, [](double x, double y) {
    return std::exp(-0.5 * (x * x + y * y) + kI * 0.3 * (x - y));
  });
  const OperatorKernel kb = OperatorKernel::from_function(g, [](double x, double y) {
    return std::exp(-0.6 * (x - 0.5) * (x - 0.5) - 0.4 * (y + 0.3) * (y + 0.3));
  });
  double comp = 0.0;
  for (double t : {0.4, 2 * theta0()}) {
    const Theta tt(t);
    const Symbol2D lhs = theta_symbol(kernel_to_symbol(compose(ka, kb)), tt);
    const Symbol2D rhs =
        theta_product(theta_symbol(kernel_to_symbol(ka), tt), theta_symbol(kernel_to_symbol(kb), tt), tt);
    comp = std::max(comp, rel_max(rhs.values, lhs.values));
  }
  r.checks.push_back({"composition a^t *_t b^t = (ab)^t", comp, 1e-5});
}

void bopp(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(64);
  const Window w = Window::gaussian(g);
  PhaseFunction2D psi = states::random_smooth_2d(g, g.dual(), rng);
  normalize_max(psi);
  const std::pair<const char*, PolynomialSymbol> symbols[] = {
      {"x", PolynomialSymbol::position()},
      {"xi", PolynomialSymbol::momentum()},
      {"oscillator", PolynomialSymbol::harmonic_oscillator()}};
  for (const auto& [name, poly] : symbols) {
    const PhaseOperator conj(poly, g, Representation::bopp_conjugated);
    const PhaseOperator direct = conj.with_representation(Representation::bopp_direct);
    r.checks.push_back({std::string("conjugated vs direct, a = ") + name,
                        rel_max(conj.apply(psi).values, direct.apply(psi).values), 1e-6});
  }
  const PhaseOperator ho(PolynomialSymbol::harmonic_oscillator(), g, Representation::bopp_conjugated);
  const PhaseOperator px(PolynomialSymbol::position(), g, Representation::bopp_conjugated);
  const auto rnd = states::random_smooth(g, rng);
  for (Representation rep : {Representation::bopp_conjugated, Representation::bopp_direct}) {
    const std::string tag = std::string(" [") + to_string(rep) + "]";
    r.checks.push_back({"intertwining, oscillator, hermite0" + tag,
                        bopp_intertwining_residual(ho.with_representation(rep), states::hermite(g, 0), w).residual, 1e-5});
    r.checks.push_back({"intertwining, oscillator, random" + tag,
                        bopp_intertwining_residual(ho.with_representation(rep), rnd, w).residual, 1e-5});
    r.checks.push_back({"intertwining, x, random" + tag,
                        bopp_intertwining_residual(px.with_representation(rep), rnd, w).residual, 1e-5});
  }
}

void spectral(CriterionReport& r, std::mt19937_64&) {
  const Grid1D g = Grid1D::with_length(64, 16.0);
  const Window w = Window::gaussian(g);
  const PhaseOperator ho(PolynomialSymbol::harmonic_oscillator(), g, Representation::bopp_conjugated);
  const SpectralReport rep = bopp_spectrum(ho, 5, w);
  double dev = rep.eigenvalues.size() == 5 ? 0.0 : INFINITY;
  double mult = 0.0, unpaired = 0.0;
  for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
    dev = std::max(dev, std::abs(rep.eigenvalues[i] - (static_cast<double>(i) + 0.5)));
    mult = std::max(mult, std::abs(static_cast<double>(rep.multiplicities[i]) - static_cast<double>(g.size())));
    if (rep.pairing[i] != static_cast<long>(i)) unpaired += 1.0;
  }
  double res = 0.0;
  for (double v : rep.residuals) res = std::max(res, v);
  double push = 0.0;
  for (double v : rep.pushforward_residuals) push = std::max(push, v);
  r.checks.push_back({"lowest 5 eigenvalues vs {0.5..4.5}", dev, 1e-3});
  r.checks.push_back({"eigenpair residuals", res, 1e-8});
  r.checks.push_back({"multiplicity deviation from N_p", mult, 0.5});
  r.checks.push_back({"clusters not paired with 1D levels", unpaired, 0.5});
  r.checks.push_back({"push-forward residual W psi_l", push, 1e-4});
  r.info.push_back({"hermiticity of assembled A_B", rep.hermiticity});
  r.info.push_back({"Gram deviation (3 windows x 5 states)", rep.gram_deviation});
  for (std::size_t i = 0; i < rep.pullback_norms.size(); ++i)
    r.info.push_back({"pull-back norm, cluster " + std::to_string(i), rep.pullback_norms[i]});
}

void dynamics(CriterionReport& r, std::mt19937_64&) {
  const Grid1D g = Grid1D::self_dual(64);
  const Window w = Window::gaussian(g);
  const PhaseOperator ho(PolynomialSymbol::harmonic_oscillator(), g, Representation::bopp_conjugated);
  const auto h0 = states::hermite(g, 0);

  EvolutionOptions exact;
  const EvolutionResult e = evolve_pair(ho, h0, w, 2 * kPi, 64, exact);
  r.checks.push_back({"divergence at t=2pi [conjugated, exact]", e.divergence, 1e-4});
  r.checks.push_back({"norm drift per unit time [conjugated, exact]", std::max(e.norm_drift_1d, e.norm_drift_phase), 1e-8});
  r.checks.push_back({"psi(2pi) = e^{-i pi} psi0", max_abs_diff(e.psi.values, (cplx(-1.0, 0.0) * h0).values), 1e-6});

  EvolutionOptions kry;
  kry.integrator = Integrator::krylov;
  const EvolutionResult d = evolve_pair(ho.with_representation(Representation::bopp_direct), h0, w, 2 * kPi, 400, kry);
  r.checks.push_back({"divergence at t=2pi [direct, Krylov]", d.divergence, 1e-4});
  r.checks.push_back({"norm drift per unit time [direct, Krylov]", std::max(d.norm_drift_1d, d.norm_drift_phase), 1e-8});

  EvolutionOptions rec = exact;
  rec.record_states = true;
  const double x0 = 1.5, p0 = 0.5;
  const EvolutionResult c = evolve_pair(ho, states::coherent(g, x0, p0), w, kPi, 32, rec);
  double worst = 0.0, track = 0.0;
  for (double v : c.divergences) worst = std::max(worst, v);
  for (std::size_t s = 0; s < c.states.size(); ++s) {
    const double t = c.times[s];
    cplx mean = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) mean += g.node(j) * std::norm(c.states[s][j]) * g.dx();
    track = std::max(track, std::abs(mean.real() - (x0 * std::cos(t) + p0 * std::sin(t))));
  }
  r.checks.push_back({"coherent state divergence over [0, pi]", worst, 1e-4});
  r.checks.push_back({"coherent center on classical orbit", track, 1e-6});
}

void symmetry(CriterionReport& r, std::mt19937_64& rng) {
  const Grid1D g = Grid1D::self_dual(128);
  const auto psi = states::random_smooth(g, rng), phi = states::random_smooth(g, rng);
  const double a = 0.2;
  r.checks.push_back({"W^{t0+a}(psi,phi) = conj W^{t0-a}(phi,psi)",
                      max_abs_diff(wigner_fractional(psi, phi, Theta(theta0() + a)).values,
                                   conj(wigner_fractional(phi, psi, Theta(theta0() - a))).values),
                      1e-6});
  // Both conjugation identities need conj U(a) conj = U(-a), i.e. the time
  // reversal C = diag(1,1,-1,-1) to invert the flow. Reported for context.
  const Eigen::Matrix4d C = Eigen::Vector4d(1.0, 1.0, -1.0, -1.0).asDiagonal();
  r.info.push_back({"|C M(0.2) C - M(-0.2)| (time reversal of the flow)",
                    (C * flow_matrix(a).m * C - flow_matrix(-a).m).cwiseAbs().maxCoeff()});
  r.info.push_back({"W^{t0}(psi,phi) = conj W^{t0}(phi,psi) (alpha = 0)",
                    max_abs_diff(wigner_metaplectic(psi, phi).values, conj(wigner_metaplectic(phi, psi)).values)});
  const auto ch = states::chirp(g, 1.0);
  double im0 = 0.0, im1 = 0.0;
  for (const cplx& v : wigner_fractional(ch, ch, Theta::wigner()).values) im1 = std::max(im1, std::abs(v.imag()));
  for (const cplx& v : wigner_fractional(ch, ch, Theta(0.0)).values) im0 = std::max(im0, std::abs(v.imag()));
  r.checks.push_back({"realness of W^{theta0}(chirp)", im1, 1e-9});
  r.checks.push_back({"W^0(chirp) genuinely complex", im0, 0.01, false});

  // Self-adjoint operator with a Hermitian Gaussian kernel.
  const OperatorKernel k = OperatorKernel::from_function(g, [](double x, double y) {
    return std::exp(-0.5 * (x * x + y * y) - 0.2 * (x - y) * (x - y) + kI * 0.7 * (x - y));
  });
  const Symbol2D s = kernel_to_symbol(k);
  const double al = 0.15;
  r.checks.push_back({"a^{t0+a} = conj a^{t0-a} (self-adjoint)",
                      max_abs_diff(theta_symbol(s, Theta(theta0() + al)).values,
                                   conj(theta_symbol(s, Theta(theta0() - al))).values),
                      1e-6});
  double marg = 0.0;
  for (int m : {0, 2}) {
    const auto h = states::hermite(g, m);
    const SampledFunction1D pm = position_marginal(wigner_metaplectic(h, h));
    for (std::size_t j = 0; j < g.size(); ++j) marg = std::max(marg, std::abs(pm[j] - std::norm(h[j])));
  }
  r.checks.push_back({"position marginal = |psi|^2", marg, 1e-7});
}

}  // namespace

CriterionReport run_criterion(int id, std::uint64_t seed) {
  CriterionReport r;
  for (const auto& c : criteria())
    if (c.id == id) {
      r.id = c.id;
      r.key = c.key;
      r.title = c.title;
    }
  if (r.id == 0) throw ConfigurationError("unknown criterion " + std::to_string(id));
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case 1: flow(r, rng); break;
    case 2: propagator(r, rng); break;
    case 3: wigner(r, rng); break;
    case 4: moyal(r, rng); break;
    case 5: windowed(r, rng); break;
    case 6: weyl(r, rng); break;
    case 7: star(r, rng); break;
    case 8: bopp(r, rng); break;
    case 9: spectral(r, rng); break;
    case 10: dynamics(r, rng); break;
    case 11: symmetry(r, rng); break;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mwt::verify
