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

#include <random>

#include "mwt/symplectic.hpp"

using namespace mwt;

namespace {

PhasePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  return {d(rng), d(rng), d(rng), d(rng)};
}

double max_abs(const Eigen::Matrix4d& m) { return m.cwiseAbs().maxCoeff(); }

TEST(FlowParams, Constants) {
  const double k = FlowParams::k(), t0 = FlowParams::theta0();
  EXPECT_NEAR(k, std::sqrt(7.0), 1e-15);
  EXPECT_NEAR(std::cos(k * t0), 0.75, 1e-14);
  EXPECT_NEAR(std::sin(k * t0), std::sqrt(7.0) / 4.0, 1e-14);
  EXPECT_NEAR(FlowParams::period(), 2 * M_PI / std::sqrt(7.0), 1e-15);
}

TEST(Flow, IdentityAtZero) { EXPECT_EQ(max_abs(flow_matrix(0.0).m - Eigen::Matrix4d::Identity()), 0.0); }

TEST(Flow, MapAtTheta0) {
  const PhasePoint z = flow_matrix(FlowParams::theta0()).apply({1, 2, 3, 4});
  EXPECT_NEAR(z.x, 2.5, 1e-14);
  EXPECT_NEAR(z.p, 2.5, 1e-14);
  EXPECT_NEAR(z.xi_x, 1.0, 1e-14);
  EXPECT_NEAR(z.xi_p, 3.0, 1e-14);
}

TEST(Flow, Periodic) {
  EXPECT_LE(max_abs(flow_matrix(FlowParams::period()).m - Eigen::Matrix4d::Identity()), 1e-12);
  EXPECT_LE(max_abs(flow_matrix(0.4 + 3 * FlowParams::period()).m - flow_matrix(0.4).m), 1e-12);
}

TEST(Flow, SymplecticAndUnimodularBlocks) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(-10.0, 10.0);
  const Eigen::Matrix4d J = symplectic_J();
  for (int i = 0; i < 100; ++i) {
    const FlowMatrix M = flow_matrix(th(rng));
    EXPECT_LE(max_abs(M.m.transpose() * J * M.m - J), 1e-12);
    EXPECT_NEAR(M.block_x_xip().determinant(), 1.0, 1e-12);
    EXPECT_NEAR(M.block_p_xix().determinant(), 1.0, 1e-12);
  }
}

TEST(Flow, GroupLawAndInverse) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double a = th(rng), b = th(rng);
    EXPECT_LE(max_abs(flow_matrix(a).m * flow_matrix(b).m - flow_matrix(a + b).m), 1e-12);
    EXPECT_LE(max_abs(flow_matrix(a).m.inverse() - flow_matrix(-a).m), 1e-12);
  }
}

TEST(Flow, GeneratorIsHamiltonianField) {
  const double h = 1e-6;
  const Eigen::Matrix4d fd = (flow_matrix(h).m - flow_matrix(-h).m) / (2 * h);
  EXPECT_LE(max_abs(fd - hamiltonian_field_matrix()), 1e-8);
  // The field is J^T times the Hessian of H; check against finite differences of H.
  const Eigen::Matrix4d J = symplectic_J();
  Eigen::Matrix4d hess;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Eigen::Vector4d ea = Eigen::Vector4d::Unit(a), eb = Eigen::Vector4d::Unit(b);
      auto H = [](const Eigen::Vector4d& v) { return hamiltonian_value(PhasePoint::from(v)); };
      hess(a, b) = H(ea + eb) - H(ea) - H(eb);  // exact for a quadratic form H(0) = 0
    }
  EXPECT_LE(max_abs(J.transpose() * hess - hamiltonian_field_matrix()), 1e-12);
}

TEST(Symplectic, JMatrix) {
  const Eigen::Matrix4d J = symplectic_J();
  EXPECT_EQ(J(0, 2), -1.0);
  EXPECT_EQ(J(1, 3), -1.0);
  EXPECT_EQ(J(2, 0), 1.0);
  EXPECT_EQ(J(3, 1), 1.0);
  EXPECT_EQ(J.cwiseAbs().sum(), 4.0);
}

TEST(Hamiltonian, Values) {
  EXPECT_EQ(hamiltonian_value({0, 0, 0, 0}), 0.0);
  EXPECT_NEAR(hamiltonian_value({1, 1, 1, 1}), 4.0, 1e-15);
}

TEST(Hamiltonian, ConservedAlongFlow) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const PhasePoint z = random_point(rng);
    const PhasePoint w = flow_matrix(th(rng)).apply(z);
    EXPECT_NEAR(hamiltonian_value(w), hamiltonian_value(z), 1e-10);
  }
}

TEST(LevelInvariants, ValuesAndConservation) {
  auto [a, b] = level_invariants({1, 0, 0, 0});
  EXPECT_EQ(a, 2.0);
  EXPECT_EQ(b, 0.0);
  auto [c, d] = level_invariants({0, 0, 0, 0});
  EXPECT_EQ(c, 0.0);
  EXPECT_EQ(d, 0.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const PhasePoint z = random_point(rng);
    const auto before = level_invariants(z);
    const auto after = level_invariants(flow_matrix(th(rng)).apply(z));
    EXPECT_NEAR(after.first, before.first, 1e-10);
    EXPECT_NEAR(after.second, before.second, 1e-10);
  }
}

TEST(SymplecticForm, Properties) {
  std::mt19937_64 rng(5);
  const PhasePoint ex{1, 0, 0, 0}, exi{0, 0, 1, 0};
  EXPECT_EQ(symplectic_form(ex, exi), -1.0);
  std::uniform_real_distribution<double> th(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const PhasePoint z = random_point(rng), w = random_point(rng);
    EXPECT_NEAR(symplectic_form(z, z), 0.0, 1e-15);
    EXPECT_NEAR(symplectic_form(z, w), -symplectic_form(w, z), 1e-14);
    const FlowMatrix M = flow_matrix(th(rng));
    EXPECT_NEAR(symplectic_form(M.apply(z), M.apply(w)), symplectic_form(z, w), 1e-12);
    // sigma(z, w) = z^T J w in this coordinate order.
    EXPECT_NEAR(symplectic_form(z, w), z.vec().dot(symplectic_J() * w.vec()), 1e-12);
  }
}

}  // namespace
