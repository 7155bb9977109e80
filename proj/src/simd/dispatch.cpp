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

#include <cstdlib>
#include <cstring>

#include "simd/kernels.hpp"

namespace mwt::simd {

const Kernels& scalar_kernels() {
  static const Kernels table{"scalar",
                             detail::cmul_scalar,
                             detail::dotu_scalar,
                             detail::dotc_scalar,
                             detail::norm2_scalar,
                             detail::axpy_scalar,
                             detail::scale_scalar};
  return table;
}

const Kernels* avx2_kernels() {
#ifdef MWT_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const Kernels table{"avx2",
                             detail::cmul_avx2,
                             detail::dotu_avx2,
                             detail::dotc_avx2,
                             detail::norm2_avx2,
                             detail::axpy_avx2,
                             detail::scale_avx2};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels& chosen = [&]() -> const Kernels& {
    const char* env = std::getenv("MWT_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace mwt::simd
