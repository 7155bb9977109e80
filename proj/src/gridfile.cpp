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

#include "mwt/gridfile.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mwt/error.hpp"

namespace mwt {

using nlohmann::json;

const char* to_string(GridKind k) {
  switch (k) {
    case GridKind::function1d: return "function1d";
    case GridKind::phase2d: return "phase2d";
    case GridKind::kernel: return "kernel";
    case GridKind::symbol: return "symbol";
  }
  return "?";
}

GridKind grid_kind_from_string(const std::string& s) {
  if (s == "function1d") return GridKind::function1d;
  if (s == "phase2d") return GridKind::phase2d;
  if (s == "kernel") return GridKind::kernel;
  if (s == "symbol") return GridKind::symbol;
  throw ConfigurationError("unknown grid kind '" + s + "'");
}

namespace {

std::size_t expected_grids(GridKind k) { return k == GridKind::function1d ? 1 : 2; }

std::size_t sample_count(const GridFile& f) {
  std::size_t n = 1;
  for (const auto& g : f.grids) n *= g.size();
  return n;
}

void check_shape(const GridFile& f) {
  if (f.grids.size() != expected_grids(f.kind)) throw ConfigurationError("wrong number of grids for kind");
  if (f.values.size() != sample_count(f)) throw ConfigurationError("payload length does not match grid shape");
}

}  // namespace

void write_grid_file(const std::string& path, const GridFile& f, PayloadFormat fmt) {
  check_shape(f);
  static_assert(std::endian::native == std::endian::little, "binary payloads assume a little-endian host");
  json h;
  h["format_version"] = 1;
  h["kind"] = to_string(f.kind);
  h["grids"] = json::array();
  for (const auto& g : f.grids) h["grids"].push_back({{"N", g.size()}, {"x_min", g.x_min()}, {"dx", g.dx()}});
  h["dtype"] = "complex128";
  h["payload"] = fmt == PayloadFormat::csv ? "csv" : "binary";
  h["count"] = f.values.size();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigurationError("cannot open '" + path + "' for writing");
  out << h.dump() << '\n';
  if (fmt == PayloadFormat::binary) {
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(cplx)));
  } else {
    char line[128];
    const std::size_t cols = f.grids.size() == 2 ? f.grids[1].size() : 1;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      if (f.grids.size() == 2)
        std::snprintf(line, sizeof line, "%zu,%zu,%.17g,%.17g\n", i / cols, i % cols, f.values[i].real(),
                      f.values[i].imag());
      else
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", i, f.values[i].real(), f.values[i].imag());
      out << line;
    }
  }
  if (!out) throw ConfigurationError("write to '" + path + "' failed");
}

GridFile read_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot open '" + path + "'");
  std::string header;
  std::getline(in, header);
  GridFile f;
  std::string payload;
  try {
    const json h = json::parse(header);
    if (h.at("format_version").get<int>() != 1) throw ConfigurationError("unsupported format_version");
    if (h.at("dtype").get<std::string>() != "complex128") throw ConfigurationError("unsupported dtype");
    f.kind = grid_kind_from_string(h.at("kind").get<std::string>());
    for (const auto& g : h.at("grids"))
      f.grids.emplace_back(g.at("N").get<std::size_t>(), g.at("x_min").get<double>(), g.at("dx").get<double>());
    payload = h.at("payload").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigurationError("malformed grid file header in '" + path + "': " + e.what());
  }
  const std::size_t n = sample_count(f);
  f.values.resize(n);
  if (payload == "binary") {
    in.read(reinterpret_cast<char*>(f.values.data()), static_cast<std::streamsize>(n * sizeof(cplx)));
    if (static_cast<std::size_t>(in.gcount()) != n * sizeof(cplx)) throw ConfigurationError("truncated binary payload");
  } else if (payload == "csv") {
    std::string line;
    std::size_t i = 0;
    const std::size_t fields = f.grids.size() + 2;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (i >= n) throw ConfigurationError("too many CSV rows");
      std::vector<std::string> parts;
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) parts.push_back(tok);
      if (parts.size() != fields) throw ConfigurationError("bad CSV row: " + line);
      f.values[i++] = {std::stod(parts[fields - 2]), std::stod(parts[fields - 1])};
    }
    if (i != n) throw ConfigurationError("CSV payload length does not match grid shape");
  } else {
    throw ConfigurationError("unknown payload format '" + payload + "'");
  }
  check_shape(f);
  return f;
}

GridFile to_grid_file(const SampledFunction1D& f) { return {GridKind::function1d, {f.grid}, f.values}; }

GridFile to_grid_file(const PhaseFunction2D& f, GridKind kind) { return {kind, {f.grid_x, f.grid_p}, f.values}; }

GridFile to_grid_file(const OperatorKernel& k) {
  GridFile f{GridKind::kernel, {k.grid, k.grid}, cvec(k.grid.size() * k.grid.size())};
  const std::size_t n = k.grid.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) f.values[j * n + l] = k.K(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
  return f;
}

SampledFunction1D function_from_file(const GridFile& f) {
  if (f.kind != GridKind::function1d) throw ConfigurationError("expected a function1d file");
  return {f.grids[0], f.values};
}

PhaseFunction2D phase_from_file(const GridFile& f) {
  if (f.kind == GridKind::function1d) throw ConfigurationError("expected a two-dimensional file");
  return {f.grids[0], f.grids[1], f.values};
}

Symbol2D symbol_from_file(const GridFile& f) {
  if (f.kind != GridKind::symbol && f.kind != GridKind::phase2d) throw ConfigurationError("expected a symbol file");
  return Symbol2D(phase_from_file(f));
}

OperatorKernel kernel_from_file(const GridFile& f) {
  if (f.kind != GridKind::kernel) throw ConfigurationError("expected a kernel file");
  const std::size_t n = f.grids[0].size();
  Eigen::MatrixXcd K(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) K(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = f.values[j * n + l];
  return {f.grids[0], K};
}

}  // namespace mwt
