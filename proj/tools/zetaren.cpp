/*
 *   Copyright 2026 The zetaren Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file zetaren.cpp
 * @brief Command line front end: run a scenario, expand a kernel, run the self checks.
 */

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaren/continuation.hpp"
#include "zetaren/error.hpp"
#include "zetaren/kernels.hpp"
#include "zetaren/observables.hpp"
#include "zetaren/selftest.hpp"

using json = nlohmann::json;
using namespace zetaren;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kConfigError = 1, kComputeError = 2, kSelftestFailure = 3 };

// ---------------------------------------------------------------- config

struct Scenario {
  DomainDescriptor base;
  std::string kind = "segment";
  int d2 = 0;
  double xi = 0.0;
  double kappa = 1.0;
  std::vector<double> grid;
  std::vector<std::string> outputs;
  std::string format = "json";
  double tail_tol = 1e-15;
  int truncation_order = 12;
  int quadrature_budget = 12;
  json echo;
};

[[noreturn]] void config_error(const std::string& path, const std::string& what) {
  throw Error(Errc::ConfigError, path + ": " + what);
}

template <class T>
T field(const json& j, const std::string& key, const std::string& path, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    config_error(path + key, "wrong type");
  }
}

double positive(double v, const std::string& path) {
  if (!(v > 0) || !std::isfinite(v)) config_error(path, "must be positive");
  return v;
}

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) config_error("<root>", "expected an object");
  static const std::vector<std::string> known{"domain", "xi", "kappa", "x_grid", "outputs", "format", "precision"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) config_error(it.key(), "unknown field");
  Scenario s;
  s.echo = j;
  if (!j.contains("domain") || !j["domain"].is_object()) config_error("domain", "missing object");
  const json& d = j["domain"];
  s.kind = field<std::string>(d, "kind", "domain.", "segment");
  if (s.kind != "segment" && s.kind != "slab") config_error("domain.kind", "expected segment or slab");
  const double a = positive(field<double>(d, "a", "domain.", 1.0), "domain.a");
  const std::string bc_text = field<std::string>(d, "bc", "domain.", "dirichlet");
  BoundaryCondition bc;
  try {
    bc = parse_bc(bc_text);
  } catch (const Error&) {
    config_error("domain.bc", "unknown boundary condition '" + bc_text + "'");
  }
  s.base = DomainDescriptor::segment(a, bc);
  s.d2 = field<int>(d, "d2", "domain.", 0);
  if (s.d2 < 0 || s.d2 > 8) config_error("domain.d2", "must be in 0..8");
  if (s.kind == "segment" && s.d2 != 0) config_error("domain.d2", "segments have d2 = 0");
  s.xi = field<double>(j, "xi", "", 0.0);
  s.kappa = positive(field<double>(j, "kappa", "", 1.0), "kappa");

  if (j.contains("x_grid")) {
    const json& g = j["x_grid"];
    if (g.is_array()) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_number()) config_error("x_grid[" + std::to_string(i) + "]", "expected a number");
        const double x = g[i].get<double>();
        if (!(x > 0 && x < a)) config_error("x_grid[" + std::to_string(i) + "]", "must lie strictly inside (0, a)");
        s.grid.push_back(x);
      }
    } else if (g.is_object()) {
      const int count = field<int>(g, "count", "x_grid.", 0);
      const double margin = positive(field<double>(g, "margin", "x_grid.", 0.0), "x_grid.margin");
      if (count < 1) config_error("x_grid.count", "must be at least 1");
      if (2 * margin >= a) config_error("x_grid.margin", "must be less than a/2");
      for (int i = 0; i < count; ++i)
        s.grid.push_back(count == 1 ? 0.5 * a : margin + (a - 2 * margin) * i / (count - 1));
    } else {
      config_error("x_grid", "expected a list or {count, margin}");
    }
  }

  static const std::vector<std::string> valid{"stress_energy", "energies",         "forces",
                                              "trace",         "kernel_expansion", "deformation_check"};
  s.outputs = field<std::vector<std::string>>(j, "outputs", "", {"energies"});
  for (std::size_t i = 0; i < s.outputs.size(); ++i)
    if (std::find(valid.begin(), valid.end(), s.outputs[i]) == valid.end())
      config_error("outputs[" + std::to_string(i) + "]", "unknown output '" + s.outputs[i] + "'");
  s.format = field<std::string>(j, "format", "", "json");
  if (s.format != "json" && s.format != "csv") config_error("format", "expected json or csv");
  if (j.contains("precision")) {
    const json& p = j["precision"];
    if (!p.is_object()) config_error("precision", "expected an object");
    s.tail_tol = positive(field<double>(p, "tail_tol", "precision.", s.tail_tol), "precision.tail_tol");
    s.truncation_order = field<int>(p, "truncation_order", "precision.", s.truncation_order);
    if (s.truncation_order < 1 || s.truncation_order > kMaxExpansionOrder)
      config_error("precision.truncation_order", "must be in 1..16");
    s.quadrature_budget = field<int>(p, "quadrature_budget", "precision.", s.quadrature_budget);
    if (s.quadrature_budget < 1) config_error("precision.quadrature_budget", "must be positive");
  }
  return s;
}

/// Applies path=value; the value is read as JSON when it parses, else as a string.
void apply_override(json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) config_error(assignment, "override must look like path=value");
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  std::string pointer;
  std::stringstream ss(path);
  for (std::string part; std::getline(ss, part, '.');) {
    if (part.empty()) config_error(path, "empty path component");
    pointer += "/" + part;
  }
  try {
    j[json::json_pointer(pointer)] = value;
  } catch (const json::exception& e) {
    config_error(path, e.what());
  }
}

json load_config(const std::string& file, const std::vector<std::string>& overrides) {
  std::ifstream in(file);
  if (!in) config_error(file, "cannot open");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) config_error(file, "not valid JSON");
  for (const auto& o : overrides) apply_override(j, o);
  return j;
}

// ---------------------------------------------------------------- output

std::string fmt_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

/// Canonical JSON: sorted keys, fixed float format, two-space indent.
void emit_json(const json& j, std::string& out, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(it.key()).dump() + ": ";
        emit_json(it.value(), out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        emit_json(j[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += fmt_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

json tagged(cplx v, const std::string& method) {
  return json{{"value", v.real()}, {"imag", v.imag()}, {"method", method}};
}

/// CSV rows: section, x, quantity, value, imag, method.
void collect_csv(const json& j, const std::string& section, const std::string& x, const std::string& quantity,
                 std::vector<std::string>& rows) {
  if (j.is_object() && j.contains("method") && j.contains("value")) {
    rows.push_back(section + "," + x + "," + quantity + "," + fmt_double(j["value"].get<double>()) + "," +
                   fmt_double(j["imag"].get<double>()) + "," + j["method"].get<std::string>());
    return;
  }
  if (j.is_object()) {
    std::string xs = x;
    if (j.contains("x") && j["x"].is_number()) xs = fmt_double(j["x"].get<double>());
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "x") continue;
      collect_csv(it.value(), section, xs, quantity.empty() ? it.key() : quantity + "." + it.key(), rows);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const bool row = j[i].is_object() && j[i].contains("x");
      collect_csv(j[i], section, x, row ? quantity : quantity + "[" + std::to_string(i) + "]", rows);
    }
  } else if (j.is_number()) {
    rows.push_back(section + "," + x + "," + quantity + "," + fmt_double(j.get<double>()) + "," +
                   fmt_double(0.0) + ",parameter");
  }
}

std::string render(const json& report, const std::string& format) {
  std::string out;
  if (format == "json") {
    emit_json(report, out, 0);
    return out + "\n";
  }
  std::vector<std::string> rows;
  for (auto it = report["results"].begin(); it != report["results"].end(); ++it)
    collect_csv(it.value(), it.key(), "", "", rows);
  out = "section,x,quantity,value,imag,method\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

// ---------------------------------------------------------------- pipeline

/// Parallel map over grid points with ordered results.
template <class F>
auto map_points(const std::vector<double>& xs, F f) -> std::vector<decltype(f(0.0))> {
  std::vector<decltype(f(0.0))> out(xs.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      out[i] = f(xs[i]);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

json series_json(const Series& s, const std::string& method) {
  json coeffs = json::array();
  for (int k = s.min_order(); k < s.truncation_order(); ++k) {
    json c{{"order", k}, {"coefficient", tagged(s.coeff(k), method)}};
    if (s.has_log()) c["log_coefficient"] = tagged(s.log_coeff(k), method);
    coeffs.push_back(c);
  }
  return coeffs;
}

json run_scenario(const Scenario& s) {
  DomainDescriptor dom = s.kind == "slab" ? DomainDescriptor::slab(s.base, s.d2) : s.base;
  if (s.kind == "slab" && s.d2 == 0) dom = s.base;
  const ObservableRequest req{dom, s.xi, s.grid, s.kappa};
  const bool is_segment = dom.kind == DomainKind::Segment;
  const int n = s.d2 + 2;
  json results = json::object();
  bool kappa_dependent = false;

  for (const auto& out : s.outputs) {
    if (out == "stress_energy") {
      const auto vevs = map_points(s.grid, [&](double x) { return stress_energy(req, x); });
      json rows = json::array();
      for (std::size_t i = 0; i < vevs.size(); ++i) {
        const auto& v = vevs[i];
        json row{{"x", s.grid[i]}, {"pole_order", v.pole_order}, {"kappa_dependent", v.kappa_dependent}};
        kappa_dependent = kappa_dependent || v.kappa_dependent;
        for (int j = 0; j < n; ++j) {
          const std::string c = "T" + std::to_string(j) + std::to_string(j);
          row["full"][c] = tagged(v.full(j, j), v.method);
          row["conformal"][c] = tagged(v.conformal_part(j, j), v.method);
          row["nonconformal"][c] = tagged(v.nonconformal_part(j, j), "difference-quotient");
          if (v.pole_order > 0) {
            row["pole_coefficient"][c] = tagged(v.pole_part(j, j), v.method);
            row["ln_kappa_coefficient"][c] = tagged(v.ln_kappa_part(j, j), v.method);
          }
        }
        rows.push_back(row);
      }
      results[out] = rows;
    } else if (out == "energies") {
      const EnergyReport e = energies(req);
      kappa_dependent = kappa_dependent || e.kappa_dependent;
      json r{{"bulk", tagged(e.bulk, e.bulk_method)},
             {"boundary", tagged(e.boundary, e.boundary_method)},
             {"total", tagged(e.total, e.total_method)},
             {"pole_order", e.pole_order},
             {"kappa_dependent", e.kappa_dependent}};
      if (e.pole_order > 0) {
        r["pole_coefficient"] = tagged(e.pole_coefficient, e.bulk_method);
        r["ln_kappa_coefficient"] = tagged(e.ln_kappa_coefficient, e.bulk_method);
      }
      if (is_segment) {
        const DensityIntegral full = density_integral(req, false);
        r["density_integral"] = {{"divergent", full.divergent}, {"note", full.note}};
        if (!full.divergent) r["density_integral"]["integral"] = tagged(full.value, "gauss-legendre");
        r["conformal_density_integral"] = tagged(density_integral(req, true).value, "gauss-legendre");
      }
      results[out] = r;
    } else if (out == "forces") {
      if (!is_segment) throw Error(Errc::UnsupportedDomain, "forces are available for segments");
      json rows = json::array();
      for (const auto& e : boundary_force(req).entries)
        rows.push_back({{"x", e.point},
                        {"normal", e.normal},
                        {"at_boundary", tagged(e.at_boundary, "residue-at-boundary")},
                        {"interior_limit", tagged(e.interior_limit, "residue-interior-extrapolation")},
                        {"agreement_gap", tagged(e.agreement_gap, "difference")}});
      results[out] = rows;
    } else if (out == "trace") {
      const TraceFunction closed = trace_function(s.base, KernelKind::Cylinder);
      const TraceFunction spectral =
          trace_function(SpectralModel::segment(s.base.a, s.base.bc), KernelKind::Cylinder, s.tail_tol);
      const Series ex = closed.expand(s.truncation_order);
      json r{{"expansion", series_json(ex, "closed-form-expansion")},
             {"trace_a_half", tagged(trace_residue(ex, 1), "residue")}};
      const double t = 0.5 * s.base.a;
      r["check"] = {{"t", t},
                    {"closed_form", tagged(closed(t), "closed-form")},
                    {"spectral", tagged(spectral(t), "spectral-sum")}};
      results[out] = r;
    } else if (out == "kernel_expansion") {
      const KernelFunction k = closed_form_cylinder(s.base);
      const auto ex = map_points(s.grid, [&](double x) { return expand_at_zero(k, x, s.truncation_order); });
      json rows = json::array();
      for (std::size_t i = 0; i < ex.size(); ++i)
        rows.push_back({{"x", s.grid[i]}, {"coefficients", series_json(ex[i].series, "closed-form-expansion")}});
      results[out] = rows;
    } else if (out == "deformation_check") {
      if (!is_segment) throw Error(Errc::UnsupportedDomain, "deformation check is available for segments");
      const std::vector<double> deltas{1e-2, 1e-3, 1e-4};
      json rows = json::array();
      for (double d : deltas)
        rows.push_back({{"delta", d}, {"residual", tagged(deformation_consistency(req, d), "energy-difference")}});
      results[out] = {{"residuals", rows}, {"slope", tagged(deformation_slope(req, deltas), "least-squares")}};
    }
  }
  json report;
  report["results"] = results;
  report["metadata"] = {{"version", kVersion},
                        {"config", s.echo},
                        {"kappa_dependent", kappa_dependent},
                        {"domain", dom.describe()}};
  return report;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ConfigError, "--out: cannot write " + path);
  f << text;
  return kOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ConfigError ? kConfigError : kComputeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputeError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetaren: zeta-renormalized vacuum observables of a scalar field"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  std::vector<std::string> overrides;
  auto* run = app.add_subcommand("run", "Run a scenario config");
  run->add_option("config", config_path, "JSON scenario file")->required();
  run->add_option("--out", out_path, "Output file (default stdout)");
  run->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--set", overrides, "Override path=value, for example domain.bc=neumann");

  bool full = false;
  double tail_tol = 1e-15;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in checks");
  selftest->add_flag("--full", full, "Add quadrature cross-checks and Weyl fits");
  selftest->add_option("--tail-tol", tail_tol, "Tail tolerance for spectral sums");

  double point = 0.0;
  int order = 8;
  auto* expand = app.add_subcommand("expand", "Dump the small-t expansion of the diagonal cylinder kernel");
  expand->add_option("config", config_path, "JSON scenario file")->required();
  expand->add_option("--point", point, "Point x")->required();
  expand->add_option("--order", order, "Last order kept")->required();
  expand->add_option("--set", overrides, "Override path=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  if (*run) {
    return guarded([&] {
      json j = load_config(config_path, overrides);
      if (!format.empty()) j["format"] = format;
      const Scenario s = parse_scenario(j);
      return write_output(render(run_scenario(s), s.format), out_path);
    });
  }
  if (*expand) {
    return guarded([&] {
      const Scenario s = parse_scenario(load_config(config_path, overrides));
      if (!(point >= 0 && point <= s.base.a)) config_error("--point", "outside the segment");
      if (order < 0 || order > kMaxExpansionOrder) config_error("--order", "must be in 0..16");
      const KernelExpansion ex = expand_at_zero(closed_form_cylinder(s.base), point, order);
      json report{{"x", point},
                  {"kind", kernel_kind_name(ex.kind)},
                  {"stencil", ex.stencil.name()},
                  {"coefficients", series_json(ex.series, "closed-form-expansion")}};
      std::string out;
      emit_json(report, out, 0);
      std::cout << out << "\n";
      return int(kOk);
    });
  }
  if (!(tail_tol > 0)) {
    std::cerr << "error: --tail-tol must be positive\n";
    return kConfigError;
  }
  const auto results = run_selftest(full ? SelftestLevel::Full : SelftestLevel::Fast, tail_tol);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %-44s error %.3e tolerance %.1e%s%s\n", r.passed ? "ok  " : "FAIL", r.name.c_str(), r.error,
                r.tolerance, r.detail.empty() ? "" : "  ", r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed ? kSelftestFailure : kOk;
}
