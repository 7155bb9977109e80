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

// mwt command-line front end.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwt/bopp.hpp"
#include "mwt/error.hpp"
#include "mwt/gridfile.hpp"
#include "mwt/metaplectic.hpp"
#include "mwt/parallel.hpp"
#include "mwt/states.hpp"
#include "mwt/symplectic.hpp"
#include "mwt/verify.hpp"
#include "mwt/weyl.hpp"
#include "mwt/wigner.hpp"

using json = nlohmann::ordered_json;
using namespace mwt;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

// Options shared by every subcommand. Values given on the command line win
// over the JSON config, which wins over the defaults below.
struct Job {
  std::string command;
  std::string config;
  std::size_t N = 128;
  std::optional<double> x_min;
  std::optional<double> dx;
  std::optional<double> theta;
  std::string input;
  std::string output;
  std::string format = "csv";
  std::string manifest;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::size_t threads = 0;

  std::string psi = "gaussian";
  std::string phi;
  std::string window = "gaussian";
  bool gaussian = false;
  std::string a_file, b_file, symbol_file;
  bool oscillator = false;
  bool inverse = false;
  std::size_t count = 5;
  std::string representation = "bopp_conjugated";
  double t = 2 * kPi;
  std::size_t steps = 64;
  std::string integrator = "exact";
  std::string suite = "all";
};

void add_common(CLI::App* s, Job& j) {
  s->add_option("--config", j.config, "JSON config file; flags override it");
  s->add_option("-N,--points", j.N, "grid points per axis (even)");
  s->add_option("--x-min", j.x_min, "first grid node (default -N*dx/2)");
  s->add_option("--dx", j.dx, "grid spacing (default self-dual sqrt(2pi/N))");
  s->add_option("-o,--output", j.output, "output grid file");
  s->add_option("--format", j.format, "payload format")->check(CLI::IsMember({"csv", "binary"}));
  s->add_option("--manifest", j.manifest, "manifest path (default <output>.manifest.json)");
  s->add_option("--seed", j.seed, "seed for randomized data");
  s->add_option("--tolerance", j.tolerance, "tolerance for the command's self-check");
  s->add_option("--threads", j.threads, "worker threads (also MWT_THREADS)");
}

template <class T>
void from_config(const json& c, const char* key, CLI::App* s, const char* flag, T& v) {
  if (c.contains(key) && s->count(flag) == 0) v = c.at(key).get<T>();
}

template <class T>
void from_config(const json& c, const char* key, CLI::App* s, const char* flag, std::optional<T>& v) {
  if (c.contains(key) && s->count(flag) == 0) v = c.at(key).get<T>();
}

void apply_config(Job& j, CLI::App* s) {
  if (j.config.empty()) return;
  std::ifstream in(j.config);
  if (!in) throw ConfigurationError("cannot open config '" + j.config + "'");
  json c;
  try {
    c = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigurationError("malformed config '" + j.config + "': " + e.what());
  }
  if (!c.is_object()) throw ConfigurationError("config must be a JSON object");
  static const std::set<std::string> known{"N",      "x_min",  "dx",        "theta",  "input",  "output",
                                           "format", "seed",   "tolerance", "psi",    "phi",    "window",
                                           "count",  "t",      "steps",     "suite",  "symbol", "a",
                                           "b",      "integrator", "representation", "threads"};
  for (const auto& [k, v] : c.items())
    if (!known.count(k)) throw ConfigurationError("unknown config key '" + k + "'");
  auto has = [&](const char* f) { return s->get_option_no_throw(f) != nullptr; };
  from_config(c, "N", s, "--points", j.N);
  from_config(c, "x_min", s, "--x-min", j.x_min);
  from_config(c, "dx", s, "--dx", j.dx);
  from_config(c, "output", s, "--output", j.output);
  from_config(c, "format", s, "--format", j.format);
  from_config(c, "seed", s, "--seed", j.seed);
  from_config(c, "tolerance", s, "--tolerance", j.tolerance);
  from_config(c, "threads", s, "--threads", j.threads);
  if (has("--theta")) from_config(c, "theta", s, "--theta", j.theta);
  if (has("--input")) from_config(c, "input", s, "--input", j.input);
  if (has("--psi")) from_config(c, "psi", s, "--psi", j.psi);
  if (has("--phi")) from_config(c, "phi", s, "--phi", j.phi);
  if (has("--window")) from_config(c, "window", s, "--window", j.window);
  if (has("--count")) from_config(c, "count", s, "--count", j.count);
  if (has("--t")) from_config(c, "t", s, "--t", j.t);
  if (has("--steps")) from_config(c, "steps", s, "--steps", j.steps);
  if (has("--suite")) from_config(c, "suite", s, "--suite", j.suite);
  if (has("--symbol")) from_config(c, "symbol", s, "--symbol", j.symbol_file);
  if (has("--a")) from_config(c, "a", s, "--a", j.a_file);
  if (has("--b")) from_config(c, "b", s, "--b", j.b_file);
  if (has("--integrator")) from_config(c, "integrator", s, "--integrator", j.integrator);
  if (has("--representation")) from_config(c, "representation", s, "--representation", j.representation);
}

Grid1D job_grid(const Job& j) {
  const double dx = j.dx.value_or(std::sqrt(kTwoPi / static_cast<double>(j.N)));
  if (j.x_min) return Grid1D(j.N, *j.x_min, dx);
  return Grid1D::centered(j.N, dx);
}

json grid_json(const Grid1D& g) { return {{"N", g.size()}, {"x_min", g.x_min()}, {"dx", g.dx()}}; }

PayloadFormat payload(const Job& j) { return j.format == "binary" ? PayloadFormat::binary : PayloadFormat::csv; }

Representation parse_representation(const std::string& s) {
  if (s == "extended") return Representation::extended;
  if (s == "bopp_conjugated" || s == "conjugated") return Representation::bopp_conjugated;
  if (s == "bopp_direct" || s == "direct") return Representation::bopp_direct;
  throw ConfigurationError("unknown representation '" + s + "'");
}

Integrator parse_integrator(const std::string& s) {
  if (s == "exact") return Integrator::exact;
  if (s == "krylov") return Integrator::krylov;
  if (s == "crank_nicolson" || s == "cn") return Integrator::crank_nicolson;
  throw ConfigurationError("unknown integrator '" + s + "'");
}

std::string require_file(const std::string& path, const char* what) {
  if (path.empty()) throw ConfigurationError(std::string("missing ") + what);
  if (!std::ifstream(path)) throw ConfigurationError(std::string(what) + " '" + path + "' does not exist");
  return path;
}

// Collects inputs, tolerances and achieved errors for the run manifest.
struct Manifest {
  json doc;
  bool failed = false;

  void check(const std::string& name, double value, double tol) {
    const bool ok = std::isfinite(value) && value <= tol;
    doc["checks"].push_back({{"name", name}, {"value", value}, {"tolerance", tol}, {"pass", ok}});
    failed = failed || !ok;
  }
};

void write_manifest(const Job& j, Manifest& m) {
  std::string path = j.manifest;
  if (path.empty() && !j.output.empty()) path = j.output + ".manifest.json";
  if (path.empty()) return;
  m.doc["status"] = m.failed ? "fail" : "pass";
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot write manifest '" + path + "'");
  out << m.doc.dump(2) << "\n";
}

void write_output(const Job& j, Manifest& m, const GridFile& f) {
  if (j.output.empty()) throw ConfigurationError("missing --output");
  write_grid_file(j.output, f, payload(j));
  m.doc["outputs"].push_back(j.output);
}

// ---------------------------------------------------------------------------

int run_flow(const Job& j, Manifest& m) {
  const double th = j.theta.value_or(FlowParams::theta0());
  m.doc["theta"] = th;
  const Eigen::Matrix4d M = flow_matrix(th).m;
  std::FILE* out = stdout;
  if (!j.output.empty()) {
    out = std::fopen(j.output.c_str(), "w");
    if (out == nullptr) throw ConfigurationError("cannot write '" + j.output + "'");
    m.doc["outputs"].push_back(j.output);
  }
  for (int r = 0; r < 4; ++r)
    std::fprintf(out, "%.17g,%.17g,%.17g,%.17g\n", M(r, 0) + 0.0, M(r, 1) + 0.0, M(r, 2) + 0.0, M(r, 3) + 0.0);
  if (out != stdout) std::fclose(out);
  const Eigen::Matrix4d J = symplectic_J();
  m.check("M^T J M - J", (M.transpose() * J * M - J).cwiseAbs().maxCoeff(), j.tolerance.value_or(1e-12));
  return kExitPass;
}

int run_propagate(const Job& j, Manifest& m) {
  const PhaseFunction2D psi = phase_from_file(read_grid_file(require_file(j.input, "--input")));
  const double th = j.theta.value_or(FlowParams::theta0());
  m.doc["theta"] = th;
  const PhaseFunction2D out = apply_U(psi, th);
  m.check("relative norm drift", std::abs(out.norm() - psi.norm()) / psi.norm(), j.tolerance.value_or(1e-9));
  write_output(j, m, to_grid_file(out));
  return kExitPass;
}

std::pair<SampledFunction1D, SampledFunction1D> job_states(const Job& j, const Grid1D& g, Manifest& m) {
  if (!j.input.empty()) {
    const SampledFunction1D psi = function_from_file(read_grid_file(require_file(j.input, "--input")));
    m.doc["inputs"]["psi"] = j.input;
    SampledFunction1D phi = j.phi.empty() ? psi : states::from_spec(psi.grid, j.phi);
    return {psi, phi};
  }
  const std::string ps = j.gaussian ? "gaussian" : j.psi;
  const std::string fs = j.gaussian ? "gaussian" : (j.phi.empty() ? ps : j.phi);
  m.doc["inputs"]["psi"] = ps;
  m.doc["inputs"]["phi"] = fs;
  return {states::from_spec(g, ps), states::from_spec(g, fs)};
}

int run_wigner(const Job& j, Manifest& m, bool fractional) {
  const Grid1D g = job_grid(j);
  auto [psi, phi] = job_states(j, g, m);
  m.doc["grid"] = grid_json(psi.grid);
  const Theta th = fractional ? Theta(j.theta.value_or(FlowParams::theta0())) : Theta::wigner();
  m.doc["theta"] = th.value();
  const PhaseFunction2D w = fractional ? wigner_fractional(psi, phi, th) : wigner_metaplectic(psi, phi);
  if (!fractional && j.gaussian) {
    double err = 0.0;
    for (std::size_t r = 0; r < w.rows(); ++r)
      for (std::size_t c = 0; c < w.cols(); ++c) {
        const double x = w.grid_x.node(r), p = w.grid_p.node(c);
        err = std::max(err, std::abs(w(r, c) - std::exp(-x * x - p * p) / kPi));
      }
    m.check("max |W - exp(-x^2-p^2)/pi|", err, j.tolerance.value_or(1e-8));
  } else if (!fractional) {
    m.check("metaplectic vs direct integral", max_abs_diff(w.values, wigner_direct(psi, phi).values),
            j.tolerance.value_or(1e-6));
  }
  write_output(j, m, to_grid_file(w));
  return kExitPass;
}

int run_reconstruct(const Job& j, Manifest& m) {
  const Theta th(j.theta.value_or(FlowParams::theta0()));
  m.doc["theta"] = th.value();
  m.doc["inputs"]["window"] = j.window;
  if (!j.input.empty()) {
    const PhaseFunction2D data = phase_from_file(read_grid_file(require_file(j.input, "--input")));
    m.doc["inputs"]["data"] = j.input;
    const Window w(states::from_spec(data.grid_x, j.window));
    write_output(j, m, to_grid_file(windowed_adjoint(data, w, th)));
    return kExitPass;
  }
  // No data given: transform the analytic state, reconstruct, and compare.
  const Grid1D g = job_grid(j);
  const SampledFunction1D psi = states::from_spec(g, j.psi);
  m.doc["inputs"]["psi"] = j.psi;
  const Window w(states::from_spec(g, j.window));
  const SampledFunction1D back = windowed_adjoint(windowed_transform(psi, w, th), w, th);
  m.check("reconstruction max error", max_abs_diff(back.values, psi.values), j.tolerance.value_or(1e-6));
  write_output(j, m, to_grid_file(back));
  return kExitPass;
}

int run_weyl_symbol(const Job& j, Manifest& m) {
  const GridFile in = read_grid_file(require_file(j.input, "--input"));
  m.doc["inputs"]["file"] = j.input;
  if (j.inverse) {
    Symbol2D a = symbol_from_file(in);
    if (j.theta) a = weyl_from_theta_symbol(a, Theta(*j.theta));
    const OperatorKernel k = symbol_to_kernel(a);
    const double err = relative_l2(kernel_to_symbol(k).values, a.values);
    m.check("symbol round trip (rel L2)", err, j.tolerance.value_or(1e-8));
    write_output(j, m, to_grid_file(k));
    return kExitPass;
  }
  const OperatorKernel k = kernel_from_file(in);
  Symbol2D a = kernel_to_symbol(k);
  const Eigen::MatrixXcd d = symbol_to_kernel(a).K - k.K;
  m.check("kernel round trip (rel max)", d.cwiseAbs().maxCoeff() / k.K.cwiseAbs().maxCoeff(),
          j.tolerance.value_or(1e-8));
  if (j.theta) {
    a = theta_symbol(a, Theta(*j.theta));
    m.doc["theta"] = *j.theta;
  }
  write_output(j, m, to_grid_file(a, GridKind::symbol));
  return kExitPass;
}

int run_star(const Job& j, Manifest& m) {
  const Symbol2D a = symbol_from_file(read_grid_file(require_file(j.a_file, "--a")));
  const Symbol2D b = symbol_from_file(read_grid_file(require_file(j.b_file, "--b")));
  m.doc["inputs"]["a"] = j.a_file;
  m.doc["inputs"]["b"] = j.b_file;
  const Theta th(j.theta.value_or(FlowParams::theta0()));
  m.doc["theta"] = th.value();
  write_output(j, m, to_grid_file(theta_product(a, b, th), GridKind::symbol));
  return kExitPass;
}

int run_expect(const Job& j, Manifest& m) {
  const Symbol2D a = symbol_from_file(read_grid_file(require_file(j.symbol_file, "--symbol")));
  m.doc["inputs"]["symbol"] = j.symbol_file;
  m.doc["inputs"]["psi"] = j.psi;
  const SampledFunction1D psi = states::from_spec(a.grid_x, j.psi);
  const Theta th(j.theta.value_or(FlowParams::theta0()));
  const Expectation e = expectation(a, psi, th);
  m.doc["theta"] = th.value();
  m.doc["result"] = {{"phase_space", {e.phase_space.real(), e.phase_space.imag()}},
                     {"kernel", {e.kernel.real(), e.kernel.imag()}},
                     {"self_adjoint", e.self_adjoint}};
  m.check("phase-space vs kernel expectation", std::abs(e.phase_space - e.kernel), j.tolerance.value_or(1e-6));
  std::printf("phase_space %.15g %+.15gi\nkernel      %.15g %+.15gi\n", e.phase_space.real(), e.phase_space.imag(),
              e.kernel.real(), e.kernel.imag());
  return kExitPass;
}

PhaseOperator job_operator(const Job& j, Manifest& m) {
  const Representation rep = parse_representation(j.representation);
  m.doc["inputs"]["representation"] = to_string(rep);
  if (j.oscillator || j.symbol_file.empty()) {
    m.doc["inputs"]["symbol"] = "oscillator";
    const Grid1D g = job_grid(j);
    m.doc["grid"] = grid_json(g);
    return PhaseOperator(PolynomialSymbol::harmonic_oscillator(), g, rep);
  }
  m.doc["inputs"]["symbol"] = j.symbol_file;
  return PhaseOperator(symbol_from_file(read_grid_file(require_file(j.symbol_file, "--symbol"))), rep);
}

int run_spectrum(const Job& j, Manifest& m) {
  const PhaseOperator a = job_operator(j, m);
  const Window w(states::from_spec(a.grid(), j.window));
  const SpectralReport r = bopp_spectrum(a, j.count, w);
  json rep;
  rep["eigenvalues"] = r.eigenvalues;
  rep["multiplicities"] = r.multiplicities;
  rep["residuals"] = r.residuals;
  rep["pairing"] = r.pairing;
  rep["one_d_eigenvalues"] = r.one_d_eigenvalues;
  rep["pushforward_residuals"] = r.pushforward_residuals;
  rep["pullback_norms"] = r.pullback_norms;
  rep["gram_deviation"] = r.gram_deviation;
  rep["hermiticity"] = r.hermiticity;
  rep["computed"] = r.computed;
  m.doc["report"] = rep;
  double push = 0.0;
  for (double v : r.pushforward_residuals) push = std::max(push, v);
  m.check("max push-forward residual", push, j.tolerance.value_or(1e-4));

  const std::string base = j.output.empty() ? std::string("spectrum") : j.output;
  std::ofstream js(base + ".json");
  js << rep.dump(2) << "\n";
  std::ofstream csv(base + ".csv");
  csv << "cluster,eigenvalue,multiplicity,residual,paired_1d,pullback_norm\n";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    char line[256];
    std::snprintf(line, sizeof line, "%zu,%.15g,%zu,%.3e,%ld,%.3e\n", i, r.eigenvalues[i], r.multiplicities[i],
                  r.residuals[i], r.pairing[i], i < r.pullback_norms.size() ? r.pullback_norms[i] : 0.0);
    csv << line;
  }
  m.doc["outputs"].push_back(base + ".json");
  m.doc["outputs"].push_back(base + ".csv");
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
    std::printf("%zu  %.10f  x%zu\n", i, r.eigenvalues[i], r.multiplicities[i]);
  return kExitPass;
}

int run_evolve(const Job& j, Manifest& m) {
  const PhaseOperator a = job_operator(j, m);
  const SampledFunction1D psi = states::from_spec(a.grid(), j.psi);
  const Window w(states::from_spec(a.grid(), j.window));
  EvolutionOptions opt;
  opt.integrator = parse_integrator(j.integrator);
  m.doc["inputs"]["psi"] = j.psi;
  m.doc["inputs"]["t"] = j.t;
  m.doc["inputs"]["steps"] = j.steps;
  const EvolutionResult r = evolve_pair(a, psi, w, j.t, j.steps, opt);
  m.doc["result"] = {{"divergence", r.divergence},
                     {"norm_drift_1d", r.norm_drift_1d},
                     {"norm_drift_phase", r.norm_drift_phase},
                     {"integrator_1d", to_string(r.integrator_1d)},
                     {"integrator_phase", to_string(r.integrator_phase)}};
  m.check("relative divergence", r.divergence, j.tolerance.value_or(1e-4));
  m.check("norm drift per unit time", std::max(r.norm_drift_1d, r.norm_drift_phase), 1e-8);
  std::printf("divergence %.3e  drift %.3e / %.3e\n", r.divergence, r.norm_drift_1d, r.norm_drift_phase);
  if (!j.output.empty()) write_output(j, m, to_grid_file(r.psi));
  return kExitPass;
}

int run_verify(const Job& j, Manifest& m) {
  if (j.tolerance) warn("--tolerance is ignored by verify: acceptance tolerances are fixed");
  std::vector<int> ids;
  if (j.suite == "all") {
    for (const auto& c : verify::criteria()) ids.push_back(c.id);
  } else {
    std::stringstream ss(j.suite);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const int id = verify::criterion_id(item);
      if (id == 0) throw ConfigurationError("unknown suite '" + item + "'");
      ids.push_back(id);
    }
  }
  m.doc["seed"] = j.seed;
  std::vector<std::string> failed;
  for (int id : ids) {
    const verify::CriterionReport r = verify::run_criterion(id, j.seed);
    std::printf("%s\n", r.summary_line().c_str());
    for (const auto& c : r.checks)
      std::printf("       %s %-52s %.3e %s %.1e\n", c.pass() ? "ok  " : "FAIL", c.name.c_str(), c.value,
                  c.upper ? "<=" : ">=", c.tolerance);
    for (const auto& [name, v] : r.info) std::printf("       info %-52s %.3e\n", name.c_str(), v);
    std::fflush(stdout);
    json crit{{"id", r.id}, {"key", r.key}, {"title", r.title}, {"pass", r.pass()}, {"seconds", r.seconds}};
    for (const auto& c : r.checks)
      crit["checks"].push_back(
          {{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"upper", c.upper}, {"pass", c.pass()}});
    for (const auto& [name, v] : r.info) crit["info"][name] = v;
    m.doc["criteria"].push_back(crit);
    if (!r.pass()) failed.push_back(std::to_string(r.id) + " " + r.key);
  }
  if (!failed.empty()) {
    m.failed = true;
    std::string names;
    for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
    std::fprintf(stderr, "failing criteria: %s\n", names.c_str());
    return kExitNumerical;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metaplectic Wigner transforms on discretized phase space"};
  app.require_subcommand(1);
  Job j;

  auto* flow = app.add_subcommand("flow", "print M(theta) as CSV");
  auto* prop = app.add_subcommand("propagate", "apply U(theta) to a phase-space file");
  auto* wig = app.add_subcommand("wigner", "standard cross-Wigner distribution");
  auto* frac = app.add_subcommand("fracwigner", "fractional Wigner distribution");
  auto* rec = app.add_subcommand("reconstruct", "windowed reconstruction W*");
  auto* ws = app.add_subcommand("weyl-symbol", "kernel to Weyl symbol (or --inverse)");
  auto* star = app.add_subcommand("star", "theta star product of two symbols");
  auto* expect = app.add_subcommand("expect", "expectation value of a symbol");
  auto* spec = app.add_subcommand("bopp-spectrum", "low spectrum of a Bopp operator");
  auto* evo = app.add_subcommand("evolve", "paired 1D / phase-space evolution");
  auto* ver = app.add_subcommand("verify", "run the acceptance suite");

  for (auto* s : {flow, prop, wig, frac, rec, ws, star, expect, spec, evo, ver}) add_common(s, j);
  for (auto* s : {flow, prop, frac, rec, ws, star, expect}) s->add_option("--theta", j.theta, "angle (default theta0)");
  for (auto* s : {prop, wig, frac, rec, ws}) s->add_option("-i,--input", j.input, "input grid file");
  for (auto* s : {wig, frac, rec, expect, evo}) s->add_option("--psi", j.psi, "state: gaussian, hermite:M, coherent:X,P, chirp:C");
  for (auto* s : {wig, frac}) {
    s->add_option("--phi", j.phi, "second state (default psi)");
    s->add_flag("--gaussian", j.gaussian, "use the standard Gaussian for both states");
  }
  for (auto* s : {rec, spec, evo}) s->add_option("--window", j.window, "window state");
  ws->add_flag("--inverse", j.inverse, "symbol file to kernel");
  star->add_option("--a", j.a_file, "left symbol file");
  star->add_option("--b", j.b_file, "right symbol file");
  for (auto* s : {expect, spec, evo}) s->add_option("--symbol", j.symbol_file, "symbol file");
  for (auto* s : {spec, evo}) {
    s->add_flag("--oscillator", j.oscillator, "use the harmonic oscillator symbol");
    s->add_option("--representation", j.representation, "extended, bopp_conjugated or bopp_direct");
  }
  spec->add_option("--count", j.count, "number of eigenvalue clusters");
  evo->add_option("--t", j.t, "final time");
  evo->add_option("--steps", j.steps, "time steps");
  evo->add_option("--integrator", j.integrator, "exact, krylov or crank_nicolson");
  ver->add_option("--suite", j.suite, "criterion keys or ids, comma separated, or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  j.command = sub->get_name();
  Manifest m;
  m.doc["command"] = j.command;
  try {
    apply_config(j, sub);
    if (j.threads > 0) set_thread_count(j.threads);
    m.doc["seed"] = j.seed;
    m.doc["threads"] = thread_count();
    if (!j.config.empty()) m.doc["inputs"]["config"] = j.config;
    if (j.command == "verify" && j.manifest.empty()) j.manifest = "mwt-verify.manifest.json";
    int rc = kExitPass;
    if (j.command == "flow") rc = run_flow(j, m);
    else if (j.command == "propagate") rc = run_propagate(j, m);
    else if (j.command == "wigner") rc = run_wigner(j, m, false);
    else if (j.command == "fracwigner") rc = run_wigner(j, m, true);
    else if (j.command == "reconstruct") rc = run_reconstruct(j, m);
    else if (j.command == "weyl-symbol") rc = run_weyl_symbol(j, m);
    else if (j.command == "star") rc = run_star(j, m);
    else if (j.command == "expect") rc = run_expect(j, m);
    else if (j.command == "bopp-spectrum") rc = run_spectrum(j, m);
    else if (j.command == "evolve") rc = run_evolve(j, m);
    else if (j.command == "verify") rc = run_verify(j, m);
    write_manifest(j, m);
    if (rc == kExitPass && m.failed) {
      std::fprintf(stderr, "self-check exceeded its tolerance; see manifest\n");
      return kExitNumerical;
    }
    return rc;
  } catch (const ConfigurationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    m.failed = true;
    try {
      write_manifest(j, m);
    } catch (...) {
    }
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
}
