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

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "mwt/error.hpp"
#include "mwt/gridfile.hpp"
#include "mwt/states.hpp"
#include "mwt/weyl.hpp"
#include "test_util.hpp"

using namespace mwt;
namespace fs = std::filesystem;

namespace {

std::string temp_path(const std::string& name) { return (fs::temp_directory_path() / ("mwt_test_" + name)).string(); }

bool bit_equal(const cvec& a, const cvec& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

TEST(GridFile, BinaryRoundTripIsBitExact) {
  const Grid1D gx(32, -3.3, 0.21), gp = gx.dual();
  std::mt19937_64 rng(1);
  const PhaseFunction2D f = test::random_phase(gx, gp, rng);
  const std::string path = temp_path("phase.bin");
  write_grid_file(path, to_grid_file(f), PayloadFormat::binary);
  const GridFile back = read_grid_file(path);
  EXPECT_EQ(back.kind, GridKind::phase2d);
  ASSERT_EQ(back.grids.size(), 2u);
  EXPECT_TRUE(back.grids[0] == gx);
  EXPECT_TRUE(back.grids[1] == gp);
  EXPECT_TRUE(bit_equal(back.values, f.values));
  const PhaseFunction2D g = phase_from_file(back);
  EXPECT_TRUE(bit_equal(g.values, f.values));
  fs::remove(path);
}

TEST(GridFile, CsvRoundTripIsExactAt17Digits) {
  const Grid1D g = Grid1D::self_dual(64);
  std::mt19937_64 rng(2);
  const SampledFunction1D f = test::random_function(g, rng);
  const std::string path = temp_path("f.csv");
  write_grid_file(path, to_grid_file(f), PayloadFormat::csv);
  const SampledFunction1D back = function_from_file(read_grid_file(path));
  EXPECT_TRUE(back.grid == g);
  EXPECT_TRUE(bit_equal(back.values, f.values));
  fs::remove(path);
}

TEST(GridFile, KernelAndSymbolKinds) {
  const Grid1D g = Grid1D::self_dual(16);
  const OperatorKernel k = OperatorKernel::from_function(g, [](double x, double y) { return std::exp(-x * x - 2 * y * y + cplx(0, x)); });
  const std::string path = temp_path("k.bin");
  write_grid_file(path, to_grid_file(k), PayloadFormat::binary);
  const GridFile f = read_grid_file(path);
  EXPECT_EQ(f.kind, GridKind::kernel);
  const OperatorKernel back = kernel_from_file(f);
  EXPECT_EQ((back.K - k.K).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(symbol_from_file(f), ConfigurationError);
  const Symbol2D s = kernel_to_symbol(k);
  write_grid_file(path, to_grid_file(s, GridKind::symbol), PayloadFormat::csv);
  const Symbol2D sb = symbol_from_file(read_grid_file(path));
  EXPECT_TRUE(bit_equal(sb.values, s.values));
  fs::remove(path);
}

TEST(GridFile, HeaderFields) {
  const Grid1D g = Grid1D::self_dual(8);
  const std::string path = temp_path("h.csv");
  write_grid_file(path, to_grid_file(states::gaussian(g)), PayloadFormat::csv);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  for (const char* key : {"\"format_version\":1", "\"kind\":\"function1d\"", "\"dtype\":\"complex128\"", "\"payload\":\"csv\""})
    EXPECT_NE(header.find(key), std::string::npos) << key;
  std::string row;
  std::getline(in, row);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 2);
  fs::remove(path);
}

TEST(GridFile, RejectsMalformedFiles) {
  const std::string path = temp_path("bad.csv");
  {
    std::ofstream out(path);
    out << "{\"format_version\":1,\"kind\":\"function1d\",\"grids\":[{\"N\":4,\"x_min\":-2,\"dx\":1}],"
           "\"dtype\":\"complex128\",\"payload\":\"csv\",\"count\":4}\n0,1,0\n1,1,0\n";
  }
  EXPECT_THROW(read_grid_file(path), ConfigurationError);
  {
    std::ofstream out(path);
    out << "{\"format_version\":2,\"kind\":\"function1d\",\"grids\":[{\"N\":2,\"x_min\":-1,\"dx\":1}],"
           "\"dtype\":\"complex128\",\"payload\":\"csv\",\"count\":2}\n0,1,0\n1,1,0\n";
  }
  EXPECT_THROW(read_grid_file(path), ConfigurationError);
  {
    std::ofstream out(path);
    out << "not json\n";
  }
  EXPECT_THROW(read_grid_file(path), ConfigurationError);
  EXPECT_THROW(read_grid_file(temp_path("missing.csv")), ConfigurationError);
  fs::remove(path);
}

TEST(GridFile, KindNames) {
  for (GridKind k : {GridKind::function1d, GridKind::phase2d, GridKind::kernel, GridKind::symbol})
    EXPECT_EQ(grid_kind_from_string(to_string(k)), k);
  EXPECT_THROW(grid_kind_from_string("volume"), ConfigurationError);
}

}  // namespace
