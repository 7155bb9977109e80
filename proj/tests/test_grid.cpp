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

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "mwt/error.hpp"
#include "mwt/grid.hpp"
#include "test_util.hpp"

using namespace mwt;

namespace {

SampledFunction1D unit_gaussian(const Grid1D& g) {
  return test::sample(g, [](double x) { return std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x); });
}

TEST(Grid, Validation) {
  EXPECT_THROW(Grid1D(7, -1.0, 0.1), ConfigurationError);
  EXPECT_THROW(Grid1D(0, -1.0, 0.1), ConfigurationError);
  EXPECT_THROW(Grid1D(8, -1.0, 0.0), ConfigurationError);
  EXPECT_THROW(Grid1D(8, -1.0, -0.1), ConfigurationError);
  EXPECT_NO_THROW(Grid1D(8, -1.0, 0.1));
}

TEST(Grid, DualityRelation) {
  for (std::size_t N : {8u, 64u, 256u, 1000u}) {
    const Grid1D g = Grid1D::with_length(N, 17.3);
    EXPECT_NEAR(g.dx() * g.dual_spacing() * static_cast<double>(N), 2 * M_PI, 1e-12);
    EXPECT_TRUE(g.dual().is_symmetric());
    EXPECT_NEAR(g.dual().x_min(), -0.5 * static_cast<double>(N) * g.dual_spacing(), 1e-12);
  }
}

TEST(Grid, Symmetry) {
  EXPECT_TRUE(Grid1D::centered(16, 0.3).is_symmetric());
  EXPECT_FALSE(Grid1D(16, -2.0, 0.3).is_symmetric());
  EXPECT_THROW(require_symmetric(Grid1D(16, -2.0, 0.3), "test"), ConfigurationError);
  const Grid1D s = Grid1D::self_dual(64);
  EXPECT_TRUE(s.same_nodes(s.dual()));
}

TEST(Grid, Norms) {
  const Grid1D g = Grid1D::with_length(256, 40.0);
  EXPECT_NEAR(unit_gaussian(g).norm(), 1.0, 1e-13);
  PhaseFunction2D f(g, g, cvec(g.size() * g.size(), cplx(1.0, 0.0)));
  EXPECT_NEAR(f.norm(), 40.0, 1e-10);
}

TEST(Fourier, GaussianIsFixedPoint) {
  const Grid1D g = Grid1D::with_length(256, 40.0);
  const SampledFunction1D f = unit_gaussian(g);
  const SampledFunction1D F = fourier_1d(f, Direction::forward);
  EXPECT_TRUE(F.grid == g.dual());
  const SampledFunction1D expect = unit_gaussian(g.dual());
  EXPECT_LE(max_abs_diff(F.values, expect.values), 1e-12);
}

TEST(Fourier, ImpulseGivesConstant) {
  const Grid1D g = Grid1D::with_length(128, 20.0);
  SampledFunction1D d(g);
  d[g.size() / 2] = 1.0 / g.dx();
  const SampledFunction1D F = fourier_1d(d, Direction::forward);
  for (std::size_t m = 0; m < g.size(); ++m) EXPECT_NEAR(std::abs(F[m] - 1.0 / std::sqrt(2 * M_PI)), 0.0, 1e-13);
}

TEST(Fourier, PlaneWaveOracle) {
  // Direct O(N^2) sum with the symmetric normalization.
  const Grid1D g = Grid1D::with_length(64, 12.0);
  std::mt19937_64 rng(3);
  const SampledFunction1D f = test::random_function(g, rng);
  const Grid1D d = g.dual();
  const SampledFunction1D F = fourier_1d(f, Direction::forward);
  for (std::size_t m = 0; m < d.size(); ++m) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) s += std::exp(cplx(0.0, -d.node(m) * g.node(j))) * f[j];
    s *= g.dx() / std::sqrt(2 * M_PI);
    EXPECT_LE(std::abs(F[m] - s), 1e-12);
  }
}

TEST(Fourier, RoundTripAndParseval) {
  std::mt19937_64 rng(11);
  for (std::size_t N : {8u, 62u, 256u}) {
    const Grid1D g = Grid1D::with_length(N, 9.0);
    const SampledFunction1D f = test::random_function(g, rng);
    const SampledFunction1D F = fourier_1d(f, Direction::forward);
    EXPECT_LE(max_abs_diff(fourier_1d(F, Direction::inverse).values, f.values), 1e-13 * max_abs(f.values) * 10);
    EXPECT_NEAR(F.norm() / f.norm(), 1.0, 1e-12);
  }
}

TEST(Fourier, DftMatrixIsUnitary) {
  // Unitary as a map between the weighted spaces: (dxi/dx) U^H U = I. On a
  // self-dual grid the weights coincide and U is a unitary matrix.
  for (std::size_t N : {16u, 128u, 1024u}) {
    const Grid1D g = Grid1D::with_length(N, 30.0);
    const double w = g.dual().dx() / g.dx();
    Eigen::MatrixXcd U(N, N);
    for (std::size_t j = 0; j < N; ++j) {
      SampledFunction1D e(g);
      e[j] = 1.0;
      const SampledFunction1D col = fourier_1d(e, Direction::forward);
      for (std::size_t m = 0; m < N; ++m) U(m, j) = col[m];
    }
    const Eigen::MatrixXcd I = w * (U.adjoint() * U);
    EXPECT_LE((I - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff(), 1e-12) << "N=" << N;
  }
  const Grid1D g = Grid1D::self_dual(64);
  Eigen::MatrixXcd U(64, 64);
  for (std::size_t j = 0; j < 64; ++j) {
    SampledFunction1D e(g);
    e[j] = 1.0;
    const SampledFunction1D col = fourier_1d(e, Direction::forward);
    for (std::size_t m = 0; m < 64; ++m) U(m, j) = col[m];
  }
  EXPECT_LE((U.adjoint() * U - Eigen::MatrixXcd::Identity(64, 64)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialFourier, Separability) {
  const Grid1D gx = Grid1D::with_length(64, 16.0);
  const Grid1D gp = Grid1D::with_length(32, 12.0);
  std::mt19937_64 rng(5);
  const SampledFunction1D psi = test::random_function(gx, rng), phi = test::random_function(gp, rng);
  const PhaseFunction2D F = partial_fourier(tensor_outer(psi, phi), Axis::p, Direction::forward);
  const PhaseFunction2D expect = tensor_outer(psi, fourier_1d(phi, Direction::forward));
  EXPECT_TRUE(F.grid_p == gp.dual());
  EXPECT_LE(max_abs_diff(F.values, expect.values), 1e-12);
  const PhaseFunction2D Fx = partial_fourier(tensor_outer(psi, phi), Axis::x, Direction::forward);
  EXPECT_LE(max_abs_diff(Fx.values, tensor_outer(fourier_1d(psi, Direction::forward), phi).values), 1e-12);
}

TEST(PartialFourier, RoundTripNormAndCommutation) {
  const Grid1D gx = Grid1D::with_length(32, 10.0);
  const Grid1D gp = Grid1D::with_length(48, 14.0);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const PhaseFunction2D f = test::random_phase(gx, gp, rng);
    for (Axis ax : {Axis::x, Axis::p}) {
      const PhaseFunction2D F = partial_fourier(f, ax, Direction::forward);
      EXPECT_LE(max_abs_diff(partial_fourier(F, ax, Direction::inverse).values, f.values), 1e-13 * 20);
      EXPECT_NEAR(F.norm() / f.norm(), 1.0, 1e-13);
    }
    const PhaseFunction2D a = partial_fourier(partial_fourier(f, Axis::p, Direction::forward), Axis::x, Direction::forward);
    const PhaseFunction2D b = partial_fourier(partial_fourier(f, Axis::x, Direction::forward), Axis::p, Direction::forward);
    EXPECT_LE(max_abs_diff(a.values, b.values), 1e-12 * max_abs(a.values));
  }
}

TEST(TensorOuter, Basics) {
  const Grid1D g = Grid1D::with_length(32, 8.0);
  std::mt19937_64 rng(1);
  SampledFunction1D psi = test::random_function(g, rng);
  SampledFunction1D one(g, cvec(g.size(), 1.0));
  const PhaseFunction2D t = tensor_outer(psi, one);
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t m = 0; m < g.size(); ++m) EXPECT_EQ(t(j, m), psi[j]);

  SampledFunction1D chi = test::random_function(g, rng);
  psi = (2.0 / psi.norm()) * psi;
  chi = (3.0 / chi.norm()) * chi;
  EXPECT_NEAR(tensor_outer(psi, chi).norm(), 6.0, 1e-12);
}

TEST(Pairings, Conventions) {
  const Grid1D g = Grid1D::with_length(16, 4.0);
  std::mt19937_64 rng(2);
  const SampledFunction1D f = test::random_function(g, rng), h = test::random_function(g, rng);
  cplx in = 0.0, pa = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    in += f[j] * std::conj(h[j]) * g.dx();
    pa += f[j] * h[j] * g.dx();
  }
  EXPECT_LE(std::abs(inner(f, h) - in), 1e-12);
  EXPECT_LE(std::abs(pairing(f, h) - pa), 1e-12);
  EXPECT_NEAR(inner(f, f).real(), f.norm() * f.norm(), 1e-12);
}

}  // namespace
