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

#include "mwt/states.hpp"

#include <cmath>
#include <string>

#include "mwt/error.hpp"

namespace mwt::states {

SampledFunction1D gaussian(const Grid1D& g, double x0, double s) {
  SampledFunction1D f(g);
  const double c = 1.0 / (std::pow(kPi, 0.25) * std::sqrt(s));
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double u = (g.node(j) - x0) / s;
    f[j] = c * std::exp(-0.5 * u * u);
  }
  return f;
}

SampledFunction1D hermite(const Grid1D& g, int m) {
  if (m < 0) throw ConfigurationError("hermite index must be non-negative");
  SampledFunction1D f(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    // h_0 = pi^{-1/4} e^{-x^2/2}; h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}
    double prev = 0.0;
    double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    for (int n = 0; n < m; ++n) {
      const double next = std::sqrt(2.0 / (n + 1)) * x * cur - std::sqrt(double(n) / (n + 1)) * prev;
      prev = cur;
      cur = next;
    }
    f[j] = cur;
  }
  return f;
}

SampledFunction1D coherent(const Grid1D& g, double x0, double p0) {
  SampledFunction1D f(g);
  const double c = std::pow(kPi, -0.25);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node(j), u = x - x0;
    f[j] = c * std::exp(-0.5 * u * u) * std::exp(kI * (p0 * x));
  }
  return f;
}

SampledFunction1D chirp(const Grid1D& g, double c) {
  SampledFunction1D f(g);
  const double a = std::pow(kPi, -0.25);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    f[j] = a * std::exp(-0.5 * cplx(1.0, -c) * x * x);
  }
  return f;
}

SampledFunction1D from_spec(const Grid1D& g, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (name == "gaussian") return gaussian(g);
    if (name == "hermite") return hermite(g, args.empty() ? 0 : std::stoi(args));
    if (name == "chirp") return chirp(g, args.empty() ? 1.0 : std::stod(args));
    if (name == "coherent") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw ConfigurationError("coherent state needs X0,P0");
      return coherent(g, std::stod(args.substr(0, comma)), std::stod(args.substr(comma + 1)));
    }
  } catch (const std::logic_error&) {
    throw ConfigurationError("cannot parse state '" + spec + "'");
  }
  throw ConfigurationError("unknown state '" + spec + "' (gaussian, hermite:M, coherent:X0,P0, chirp:C)");
}

SampledFunction1D random_smooth(const Grid1D& g, std::mt19937_64& rng) {
  // Centers and widths stay well inside the box so tails are negligible.
  const double half = 0.5 * g.length();
  std::uniform_real_distribution<double> center(-0.15 * half, 0.15 * half);
  std::uniform_real_distribution<double> width(0.7, 1.3);
  std::uniform_real_distribution<double> mom(-1.0, 1.0);
  std::normal_distribution<double> coef(0.0, 1.0);
  SampledFunction1D f(g);
  for (int t = 0; t < 3; ++t) {
    const double x0 = center(rng), s = width(rng), p0 = mom(rng), c = 0.3 * mom(rng);
    const cplx w(coef(rng), coef(rng));
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double u = (g.node(j) - x0) / s;
      f[j] += w * std::exp(cplx(-0.5 * u * u, p0 * g.node(j) + 0.5 * c * u * u));
    }
  }
  const double n = f.norm();
  for (cplx& v : f.values) v /= n;
  return f;
}

PhaseFunction2D random_smooth_2d(const Grid1D& gx, const Grid1D& gp, std::mt19937_64& rng) {
  const double hx = 0.5 * gx.length(), hp = 0.5 * gp.length();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.8, 1.2);
  std::normal_distribution<double> coef(0.0, 1.0);
  PhaseFunction2D f(gx, gp);
  for (int t = 0; t < 3; ++t) {
    const double x0 = 0.12 * hx * u(rng), p0 = 0.12 * hp * u(rng);
    const double sx = width(rng), sp = width(rng), kx = 0.5 * u(rng), kp = 0.5 * u(rng);
    const cplx w(coef(rng), coef(rng));
    for (std::size_t j = 0; j < gx.size(); ++j) {
      const double a = (gx.node(j) - x0) / sx;
      for (std::size_t m = 0; m < gp.size(); ++m) {
        const double b = (gp.node(m) - p0) / sp;
        f(j, m) += w * std::exp(cplx(-0.5 * (a * a + b * b), kx * gx.node(j) + kp * gp.node(m)));
      }
    }
  }
  return f;
}

}  // namespace mwt::states
