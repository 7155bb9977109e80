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

// FFTW-backed transforms. Plans are created once per (N, sign) under a lock
// and executed with the new-array interface, which FFTW documents as
// thread safe. FFTW_ESTIMATE keeps planning deterministic.

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "fft.hpp"
#include "mwt/simd.hpp"

namespace mwt::detail {
namespace {

fftw_plan plan_for(std::size_t N, int sign) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cplx> a(N), b(N);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(N), reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()),
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

struct Scratch {
  std::vector<cplx> a, b;
  void fit(std::size_t N) {
    if (a.size() < N) {
      a.resize(N);
      b.resize(N);
    }
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

}  // namespace

void plain_dft(const cplx* in, cplx* out, std::size_t N, int sign) {
  fftw_execute_dft(plan_for(N, sign),
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

// With x_j = (j - N/2) and xi_m = (m - N/2) in units where the phase is
// 2*pi*x*xi/N, exp(s*2*pi*i*(m-N/2)(j-N/2)/N) factorizes as
// exp(s*2*pi*i*m*j/N) * (-1)^m * (-1)^j * (-1)^(N/2).
void centered_dft(const cplx* in, cplx* out, std::size_t N, int sign, double scale) {
  Scratch& s = scratch();
  s.fit(N);
  for (std::size_t j = 0; j < N; ++j) s.a[j] = (j & 1) ? -in[j] : in[j];
  plain_dft(s.a.data(), out, N, sign);
  const double base = ((N / 2) & 1) ? -scale : scale;
  for (std::size_t m = 0; m < N; ++m) out[m] *= (m & 1) ? -base : base;
}

void half_shift(const cplx* in, cplx* out, std::size_t N, int s) {
  Scratch& sc = scratch();
  sc.fit(N);
  plain_dft(in, sc.b.data(), N, -1);
  const long n = static_cast<long>(N);
  for (long m = 0; m < n; ++m) {
    const long f = m < n / 2 ? m : m - n;
    if (f == -n / 2) {
      sc.b[m] = 0.0;
      continue;
    }
    const double ph = s * kPi * static_cast<double>(f) / static_cast<double>(N);
    sc.b[m] *= cplx(std::cos(ph), std::sin(ph)) / static_cast<double>(N);
  }
  plain_dft(sc.b.data(), out, N, +1);
}

void translate(const cplx* in, cplx* out, std::size_t N, const double* eta, double t) {
  Scratch& sc = scratch();
  sc.fit(N);
  centered_dft(in, sc.b.data(), N, -1, 1.0);
  thread_local std::vector<cplx> chirp;
  if (chirp.size() < N) chirp.resize(N);
  const double inv = 1.0 / static_cast<double>(N);
  for (std::size_t m = 0; m < N; ++m) {
    const double ph = eta[m] * t;
    chirp[m] = cplx(std::cos(ph) * inv, std::sin(ph) * inv);
  }
  simd::active().cmul(sc.b.data(), chirp.data(), sc.b.data(), N);
  centered_dft(sc.b.data(), out, N, +1, 1.0);
}

void spectral_derivative(const cplx* in, cplx* out, std::size_t N, const double* eta) {
  Scratch& sc = scratch();
  sc.fit(N);
  centered_dft(in, sc.b.data(), N, -1, 1.0);
  const double inv = 1.0 / static_cast<double>(N);
  for (std::size_t m = 0; m < N; ++m) sc.b[m] *= cplx(0.0, eta[m] * inv);
  centered_dft(sc.b.data(), out, N, +1, 1.0);
}

}  // namespace mwt::detail
