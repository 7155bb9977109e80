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

#pragma once

#include <cstddef>

#include "mwt/types.hpp"

namespace mwt::simd {

/// Table of inner-loop kernels on interleaved complex<double> arrays.
/// A scalar reference table always exists; an AVX2 table is selected at
/// runtime when the CPU supports it (override with MWT_SIMD=scalar).
struct Kernels {
  const char* name;
  /// out[i] = a[i] * b[i]  (out may alias a or b)
  void (*cmul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  /// sum_i a[i] * b[i]
  cplx (*dotu)(const cplx* a, const cplx* b, std::size_t n);
  /// sum_i conj(a[i]) * b[i]
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  /// sum_i |a[i]|^2
  double (*norm2)(const cplx* a, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// a[i] *= s
  void (*scale)(double s, cplx* a, std::size_t n);
};

const Kernels& scalar_kernels();
/// Returns nullptr when AVX2 support was not compiled in or the CPU lacks it.
const Kernels* avx2_kernels();
/// The table used by the library.
const Kernels& active();

}  // namespace mwt::simd
