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

#include "mwt/simd.hpp"

namespace mwt::simd::detail {

void cmul_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n);
cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n);
cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n);
double norm2_scalar(const cplx* a, std::size_t n);
void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale_scalar(double s, cplx* a, std::size_t n);

#ifdef MWT_HAVE_AVX2
void cmul_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n);
cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n);
cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n);
double norm2_avx2(const cplx* a, std::size_t n);
void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale_avx2(double s, cplx* a, std::size_t n);
#endif

}  // namespace mwt::simd::detail
