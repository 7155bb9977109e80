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

#include <string>
#include <vector>

#include "mwt/grid.hpp"
#include "mwt/weyl.hpp"

namespace mwt {

/// On-disk grid data: one line of JSON header, a newline, then the payload.
///
/// Header: {"format_version": 1, "kind": "function1d|phase2d|kernel|symbol",
///          "grids": [{"N":..,"x_min":..,"dx":..}, ...], "dtype": "complex128",
///          "payload": "csv|binary", "count": n}
/// CSV payload: one sample per line, "j,re,im" or "j,k,re,im", written with
/// 17 significant digits. Binary payload: little-endian complex128 in
/// row-major order. Both round-trip exactly.
enum class GridKind { function1d, phase2d, kernel, symbol };
enum class PayloadFormat { csv, binary };

struct GridFile {
  GridKind kind = GridKind::function1d;
  std::vector<Grid1D> grids;
  cvec values;
};

const char* to_string(GridKind k);
GridKind grid_kind_from_string(const std::string& s);

void write_grid_file(const std::string& path, const GridFile& f, PayloadFormat fmt);
/// Throws ConfigurationError on malformed headers or shape mismatch.
GridFile read_grid_file(const std::string& path);

GridFile to_grid_file(const SampledFunction1D& f);
GridFile to_grid_file(const PhaseFunction2D& f, GridKind kind = GridKind::phase2d);
GridFile to_grid_file(const OperatorKernel& k);

SampledFunction1D function_from_file(const GridFile& f);
PhaseFunction2D phase_from_file(const GridFile& f);
Symbol2D symbol_from_file(const GridFile& f);
OperatorKernel kernel_from_file(const GridFile& f);

}  // namespace mwt
