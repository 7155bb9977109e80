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

// AVX2/FMA variants. Two complex numbers per 256-bit register, laid out
// [re0 im0 re1 im1]. The tail (odd n) falls back to scalar arithmetic.

#include <immintrin.h>

#include "simd/kernels.hpp"

namespace mwt::simd::detail {
namespace {

inline __m256d load(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// (a * b) for two packed complex pairs.
inline __m256d mul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline double hsum_even(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[0] + t[2];
}

inline double hsum_odd(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[1] + t[3];
}

}  // namespace

void cmul_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(out + i, mul(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

// acc_r collects [ar*br, ai*br], acc_i collects [ai*bi, ar*bi].
cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc_r = _mm256_setzero_pd(), acc_i = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load(a + i), vb = load(b + i);
    acc_r = _mm256_fmadd_pd(va, _mm256_movedup_pd(vb), acc_r);
    acc_i = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), _mm256_permute_pd(vb, 0xF), acc_i);
  }
  double re = hsum_even(acc_r) - hsum_even(acc_i);
  double im = hsum_odd(acc_r) + hsum_odd(acc_i);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc_r = _mm256_setzero_pd(), acc_i = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load(a + i), vb = load(b + i);
    acc_r = _mm256_fmadd_pd(va, _mm256_movedup_pd(vb), acc_r);
    acc_i = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), _mm256_permute_pd(vb, 0xF), acc_i);
  }
  double re = hsum_even(acc_r) + hsum_even(acc_i);
  double im = hsum_odd(acc_i) - hsum_odd(acc_r);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm2_avx2(const cplx* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load(a + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double t[4];
  _mm256_store_pd(t, acc);
  double s = (t[0] + t[1]) + (t[2] + t[3]);
  for (; i < n; ++i) s += std::norm(a[i]);
  return s;
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d va = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(y + i, _mm256_add_pd(load(y + i), mul(load(x + i), va)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double s, cplx* a, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(a + i, _mm256_mul_pd(load(a + i), vs));
  for (; i < n; ++i) a[i] *= s;
}

}  // namespace mwt::simd::detail
