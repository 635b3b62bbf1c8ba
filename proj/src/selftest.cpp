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

#include "zetaren/selftest.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "zetaren/continuation.hpp"
#include "zetaren/error.hpp"
#include "zetaren/exact.hpp"
#include "zetaren/kernels.hpp"
#include "zetaren/observables.hpp"

namespace zetaren {

namespace {

constexpr BoundaryCondition kAllBc[] = {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann,
                                        BoundaryCondition::DirichletNeumann, BoundaryCondition::Periodic};

double expected_energy(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::DirichletNeumann: return kPi / 48.0;
    case BoundaryCondition::Periodic: return -kPi / 6.0;
    default: return -kPi / 24.0;
  }
}

class Runner {
 public:
  /// Records |got - want| against tol; exceptions become failures.
  void check(const std::string& name, double tol, const std::function<double()>& error) {
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    try {
      r.error = error();
      r.passed = std::isfinite(r.error) && r.error <= tol;
    } catch (const std::exception& e) {
      r.error = std::numeric_limits<double>::infinity();
      r.detail = e.what();
    }
    out.push_back(r);
  }
  std::vector<CheckResult> out;
};

ObservableRequest request(BoundaryCondition bc, double xi = 0.0) {
  return {DomainDescriptor::segment(1.0, bc), xi, {}, 1.0};
}

void fast_checks(Runner& r, double tail_tol) {
  for (auto bc : kAllBc) {
    const std::string tag = bc_name(bc);
    r.check("energy." + tag, 1e-12,
            [&] { return std::abs(bulk_energy(request(bc)) - expected_energy(bc)); });
    r.check("spectral_vs_closed." + tag, 1e-10, [&] {
      const auto dom = DomainDescriptor::segment(1.0, bc);
      const auto sp = spectral_cylinder(SpectralModel::segment(1.0, bc), {}, tail_tol);
      const auto cl = closed_form_cylinder(dom);
      return std::abs(sp(0.3, 0.3, 0.6) - cl(0.3, 0.3, 0.6));
    });
  }
  r.check("stress.dirichlet.conformal", 1e-12, [] {
    const auto v = stress_energy(request(BoundaryCondition::Dirichlet), 0.5);
    return std::max(std::abs(v.full(0, 0) + kPi / 24.0), std::abs(v.full(1, 1) + kPi / 24.0));
  });
  r.check("stress.dirichlet.nonconformal", 1e-10, [] {
    const auto v = stress_energy(request(BoundaryCondition::Dirichlet, 0.3), 0.25);
    return std::abs(v.nonconformal_part(0, 0) - kPi);
  });
  r.check("force.dirichlet.gap", 1e-12, [] {
    double gap = 0.0;
    for (const auto& e : boundary_force(request(BoundaryCondition::Dirichlet)).entries)
      gap = std::max(gap, e.agreement_gap);
    return gap;
  });
  r.check("mellin_vs_residue.dirichlet", 1e-7, [] {
    const auto dom = DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet);
    const cplx m = continued_dirichlet(segment_diagonal_spec(dom, 0.3), 3, -0.5).value;
    return std::abs(m - segment_dirichlet_residue(dom, 0.3, 1));
  });
  r.check("exact.energy.dirichlet", 0.0, [] {
    return exact_energy(BoundaryCondition::Dirichlet, Rational(1)) == PiMultiple{Rational(-1, 24), 1} ? 0.0 : 1.0;
  });
}

void full_checks(Runner& r, double tail_tol) {
  for (auto bc : kAllBc) {
    const std::string tag = bc_name(bc);
    const auto dom = DomainDescriptor::segment(1.0, bc);
    r.check("mellin_vs_residue.sweep." + tag, 1e-7, [&] {
      double err = 0.0;
      for (double x : {0.1, 0.3, 0.5, 0.7, 0.9})
        err = std::max(err, std::abs(continued_dirichlet(segment_diagonal_spec(dom, x), 3, -0.5).value -
                                     segment_dirichlet_residue(dom, x, 1)));
      return err;
    });
    r.check("spectral_trace_vs_closed." + tag, 1e-10, [&] {
      const auto sp = trace_function(SpectralModel::segment(1.0, bc), KernelKind::Cylinder, tail_tol);
      return std::abs(sp(0.4) - trace_function(dom)(0.4));
    });
    r.check("energy_density_integral." + tag, 1e-9, [&] {
      const auto req = request(bc, 0.2);
      return std::abs(density_integral(req, true).value - bulk_energy(req));
    });
    if (bc != BoundaryCondition::Periodic) {
      r.check("deformation_slope." + tag, 0.05,
              [&] { return std::abs(deformation_slope(request(bc, 0.2), {1e-2, 1e-3, 1e-4}) - 2.0); });
    }
    r.check("weyl_exponent." + tag, 0.01,
            [&] { return std::abs(weyl_check(SpectralModel::segment(1.0, bc), 2000).fitted_exponent - 1.0); });
  }
  r.check("slab.plates.conformal", 1e-10, [] {
    const auto base = DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet);
    const auto v = slab_reduce(base, 2, 0.37, critical_coupling(3), 1.0);
    const double c = kPi * kPi / 1440.0;
    const double want[4] = {-c, -3 * c, c, c};
    double err = 0.0;
    for (int j = 0; j < 4; ++j) err = std::max(err, std::abs(v.full(j, j) - want[j]));
    return err;
  });
  r.check("slab.energy.d2_1", 1e-10, [] {
    const auto base = DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet);
    return std::abs(reduced_energy(base, 1, 1.0).bulk + 1.2020569031595942 / (16.0 * kPi));
  });
}

}  // namespace

std::vector<CheckResult> run_selftest(SelftestLevel level, double tail_tol) {
  Runner r;
  fast_checks(r, tail_tol);
  if (level == SelftestLevel::Full) full_checks(r, tail_tol);
  return r.out;
}

}  // namespace zetaren
