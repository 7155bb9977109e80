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

#include <cstdlib>

#include "mwt/simd.hpp"
#include "test_util.hpp"

using namespace mwt;

namespace {

const simd::Kernels* avx2_or_skip() {
  const simd::Kernels* k = simd::avx2_kernels();
  return k;
}

// Lengths cover empty input, pure tails and several full vectors.
const std::size_t kLengths[] = {0, 1, 2, 3, 5, 8, 17, 64, 255, 1000};

TEST(Simd, ScalarReference) {
  const simd::Kernels& s = simd::scalar_kernels();
  const cvec a{{1, 2}, {3, -1}}, b{{0, 1}, {2, 2}};
  cvec out(2);
  s.cmul(a.data(), b.data(), out.data(), 2);
  EXPECT_EQ(out[0], cplx(-2, 1));
  EXPECT_EQ(out[1], cplx(8, 4));
  EXPECT_EQ(s.dotu(a.data(), b.data(), 2), cplx(6, 5));
  EXPECT_EQ(s.dotc(a.data(), b.data(), 2), cplx(6, 9));
  EXPECT_EQ(s.norm2(a.data(), 2), 15.0);
}

TEST(Simd, Avx2MatchesScalar) {
  const simd::Kernels* v = avx2_or_skip();
  if (v == nullptr) GTEST_SKIP() << "AVX2 not available";
  const simd::Kernels& s = simd::scalar_kernels();
  std::mt19937_64 rng(1);
  for (std::size_t n : kLengths) {
    const cvec a = test::random_vector(n, rng), b = test::random_vector(n, rng);
    cvec o1(n), o2(n);
    s.cmul(a.data(), b.data(), o1.data(), n);
    v->cmul(a.data(), b.data(), o2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(o1[i] - o2[i]), 1e-15 * (1 + std::abs(o1[i])));
    const double tol = 1e-14 * (1.0 + static_cast<double>(n));
    EXPECT_LE(std::abs(s.dotu(a.data(), b.data(), n) - v->dotu(a.data(), b.data(), n)), tol) << n;
    EXPECT_LE(std::abs(s.dotc(a.data(), b.data(), n) - v->dotc(a.data(), b.data(), n)), tol) << n;
    EXPECT_NEAR(s.norm2(a.data(), n), v->norm2(a.data(), n), tol) << n;
    cvec y1 = b, y2 = b;
    const cplx alpha(0.3, -1.7);
    s.axpy(alpha, a.data(), y1.data(), n);
    v->axpy(alpha, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(y1[i] - y2[i]), 1e-14);
    cvec z1 = a, z2 = a;
    s.scale(2.5, z1.data(), n);
    v->scale(2.5, z2.data(), n);
    EXPECT_EQ(z1, z2);
  }
}

TEST(Simd, InPlaceMultiply) {
  const simd::Kernels* v = avx2_or_skip();
  if (v == nullptr) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(2);
  const cvec a = test::random_vector(37, rng), b = test::random_vector(37, rng);
  cvec ref(37), x = a;
  simd::scalar_kernels().cmul(a.data(), b.data(), ref.data(), 37);
  v->cmul(x.data(), b.data(), x.data(), 37);
  for (std::size_t i = 0; i < 37; ++i) EXPECT_LE(std::abs(ref[i] - x[i]), 1e-15 * (1 + std::abs(ref[i])));
}

TEST(Simd, ActiveSelection) {
  const simd::Kernels& k = simd::active();
  if (const char* env = std::getenv("MWT_SIMD"); env != nullptr && std::string(env) == "scalar")
    EXPECT_EQ(&k, &simd::scalar_kernels());
  else if (simd::avx2_kernels() != nullptr)
    EXPECT_EQ(&k, simd::avx2_kernels());
  else
    EXPECT_EQ(&k, &simd::scalar_kernels());
}

}  // namespace
