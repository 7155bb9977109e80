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

namespace mwt::detail {

/// out_m = scale * sum_j exp(sign * 2*pi*i*(m - N/2)*(j - N/2)/N) * in_j.
/// This is the centered DFT for symmetric grids; in and out must not alias.
void centered_dft(const cplx* in, cplx* out, std::size_t N, int sign, double scale);

/// Plain DFT out_m = sum_j exp(sign*2*pi*i*m*j/N) in_j (FFT ordering).
void plain_dft(const cplx* in, cplx* out, std::size_t N, int sign);

/// Resamples a periodic sequence at half-integer offsets: out_k = f(k + s/2)
/// with s = +1 or -1, using the trigonometric interpolant whose Nyquist
/// term is the symmetric cosine (it vanishes at half-integer offsets).
void half_shift(const cplx* in, cplx* out, std::size_t N, int s);

/// Translation along a periodic axis: out(u) = f(u + t). eta holds the dual
/// nodes of the axis. Exact for band-limited data, unitary always.
void translate(const cplx* in, cplx* out, std::size_t N, const double* eta, double t);

/// Spectral derivative d/du along a symmetric axis with dual nodes eta.
void spectral_derivative(const cplx* in, cplx* out, std::size_t N, const double* eta);

}  // namespace mwt::detail
