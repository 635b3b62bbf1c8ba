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

#include "zetaren/observables.hpp"

#include <algorithm>
#include <cmath>

#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "zetaren/error.hpp"
#include "zetaren/special.hpp"

namespace zetaren {

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : v_) m = std::max(m, std::abs(x));
  return m;
}

double critical_coupling(int d) { return (d - 1) / (4.0 * d); }

std::pair<Matrix, Matrix> conformal_split(const std::function<Matrix(double)>& vev_at, double xi, int d) {
  const double xc = critical_coupling(d);
  Matrix conf = vev_at(xc);
  const double other = (std::abs(xi - xc) > 1e-3) ? xi : xc + 1.0;
  Matrix non = (1.0 / (other - xc)) * (vev_at(other) - conf);
  return {conf, non};
}

namespace {

void require_segment(const DomainDescriptor& dom) {
  if (dom.kind != DomainKind::Segment) throw Error(Errc::UnsupportedDomain, "segment expected, got " + dom.describe());
}

/// A quantity with a simple pole in u and a ln kappa coefficient in its regular part.
struct Laurent1 {
  cplx value = 0.0, pole = 0.0, ln_kappa = 0.0;
  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) {
    return {a.value + b.value, a.pole + b.pole, a.ln_kappa + b.ln_kappa};
  }
  friend Laurent1 operator-(Laurent1 a, const Laurent1& b) {
    return {a.value - b.value, a.pole - b.pole, a.ln_kappa - b.ln_kappa};
  }
  friend Laurent1 operator*(double s, Laurent1 a) { return {s * a.value, s * a.pole, s * a.ln_kappa}; }
};

/// Regular part at u = 0 of kappa^u g(u) D(u), with D(u) = D0 + u D1 + O(u^2).
Laurent1 regular_product(const GammaRatioLaurent& g, cplx d0, cplx d1, double kappa) {
  Laurent1 r;
  r.pole = g.pole * d0;
  r.value = g.regular * d0;
  if (g.pole != 0.0) {
    r.value += g.pole * (d1 + std::log(kappa) * d0);
    r.ln_kappa = g.pole * d0;
  }
  return r;
}

/// Number of integrations by parts for a Mellin derivative at sigma0.
int ibp_order(double rho, double sigma0) { return int(std::floor(rho - sigma0)) + 1; }

cplx mellin_sigma_derivative(const MellinSpec& spec, double sigma0) {
  return continued_dirichlet_sigma(spec, ibp_order(spec.rho, sigma0), cplx(sigma0)).derivative;
}

struct SegmentParts {
  Matrix m0{2}, m1{2};
  bool kappa_dependent = false;
};

SegmentParts segment_parts(const DomainDescriptor& dom, double x, double kappa, bool allow_boundary) {
  const RenormalizedKernelSet rk = renormalized_kernels(dom, x, kappa, false, allow_boundary);
  const cplx D = rk.d_minus_half;
  const cplx Pxy = rk.dd_plus_half.at(kStencilXY);
  const cplx Pxx = rk.dd_plus_half.at(kStencilXX);
  SegmentParts p;
  p.m0(0, 0) = 0.25 * (D + Pxy);
  p.m0(1, 1) = 0.25 * (D + Pxy);
  p.m1(0, 0) = D - Pxy;
  p.m1(1, 1) = -D - Pxx;
  p.kappa_dependent = rk.kappa_dependent;
  return p;
}

StressEnergyVEV assemble(const Matrix& m0, const Matrix& m1, double xi, int d) {
  StressEnergyVEV v;
  v.xi = xi;
  v.d = d;
  v.xi_critical = critical_coupling(d);
  auto at = [&](double z) { return m0 + cplx(z) * m1; };
  v.full = at(xi);
  std::tie(v.conformal_part, v.nonconformal_part) = conformal_split(at, xi, d);
  v.pole_part = Matrix(m0.size());
  v.ln_kappa_part = Matrix(m0.size());
  return v;
}

/// Neville extrapolation to h = 0.
cplx extrapolate_to_zero(const std::vector<double>& h, std::vector<cplx> f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i) f[i] = (h[i + m] * f[i] - h[i] * f[i + 1]) / (h[i + m] - h[i]);
  return f[0];
}

}  // namespace

StressEnergyVEV stress_energy(const ObservableRequest& req, double x) {
  if (req.domain.kind == DomainKind::Slab)
    return slab_reduce(*req.domain.left, req.domain.free_dims, x, req.xi, req.kappa);
  require_segment(req.domain);
  const SegmentParts p = segment_parts(req.domain, x, req.kappa, false);
  StressEnergyVEV v = assemble(p.m0, p.m1, req.xi, 1);
  v.kappa_dependent = p.kappa_dependent;
  v.method = "residue";
  return v;
}

cplx bulk_energy(const ObservableRequest& req) {
  if (req.domain.kind == DomainKind::Slab) return reduced_energy(*req.domain.left, req.domain.free_dims, req.kappa).bulk;
  require_segment(req.domain);
  const Series tr = trace_function(req.domain, KernelKind::Cylinder).expand(kResidueExpansionOrder);
  return 0.5 * trace_residue(tr, 1);
}

cplx boundary_energy(const ObservableRequest& req) {
  const DomainDescriptor& base = req.domain.kind == DomainKind::Slab ? *req.domain.left : req.domain;
  require_segment(base);
  // Boundary terms vanish for the four homogeneous local conditions.
  return 0.0;
}

EnergyReport energies(const ObservableRequest& req) {
  EnergyReport r;
  if (req.domain.kind == DomainKind::Slab) {
    r = reduced_energy(*req.domain.left, req.domain.free_dims, req.kappa);
  } else {
    r.bulk = bulk_energy(req);
    r.bulk_method = "trace-residue";
  }
  r.boundary = boundary_energy(req);
  r.boundary_method = "vanishing-boundary-term";
  r.total = r.bulk + r.boundary;
  r.total_method = "bulk+boundary";
  return r;
}

DensityIntegral density_integral(const ObservableRequest& req, bool conformal_only) {
  require_segment(req.domain);
  const double a = req.domain.a;
  auto density = [&](double x) {
    const StressEnergyVEV v = stress_energy(req, x);
    return (conformal_only ? v.conformal_part : v.full)(0, 0).real();
  };
  DensityIntegral out;
  if (!conformal_only) {
    // For an integrable density dist * f(dist) decays; a non-integrable one keeps it from shrinking.
    const double mid = std::abs(density(0.5 * a)) * a + 1e-300;
    for (double end : {0.0, a}) {
      auto g = [&](double c) { return c * density(end == 0.0 ? c : a - c); };
      const double c = 0.02 * a, g1 = g(c), g2 = g(0.5 * c);
      if (std::abs(g2) > 1e-3 * mid && std::abs(g2) > 0.9 * std::abs(g1)) out.divergent = true;
    }
    if (out.divergent) {
      out.value = std::numeric_limits<double>::quiet_NaN();
      out.note = "full density is not integrable up to the boundary";
      return out;
    }
  }
  // Fixed Gauss-Legendre nodes stay away from the endpoints, where expansions lose precision.
  using GL = boost::math::quadrature::gauss<double, 20>;
  out.value = GL::integrate(density, 0.0, a);
  out.note = conformal_only ? "conformal density" : "full density";
  return out;
}

cplx boundary_force(const ObservableRequest& req, double endpoint, ForcePrescription pr) {
  require_segment(req.domain);
  const double a = req.domain.a;
  const bool at_right = std::abs(endpoint - a) < 1e-12 * std::max(1.0, a);
  if (!at_right && std::abs(endpoint) > 1e-12 * std::max(1.0, a))
    throw Error(Errc::DomainViolation, "endpoint must be 0 or a");
  const double normal = at_right ? 1.0 : -1.0;
  auto t11 = [&](double x, bool boundary) {
    const SegmentParts p = segment_parts(req.domain, x, req.kappa, boundary);
    return p.m0(1, 1) + req.xi * p.m1(1, 1);
  };
  if (pr == ForcePrescription::AtBoundary) return normal * t11(at_right ? a : 0.0, true);
  std::vector<double> h{0.2 * a, 0.1 * a, 0.05 * a};
  std::vector<cplx> f;
  for (double hh : h) f.push_back(t11(at_right ? a - hh : hh, false));
  return normal * extrapolate_to_zero(h, f);
}

ForceReport boundary_force(const ObservableRequest& req) {
  require_segment(req.domain);
  ForceReport r;
  for (double e : {0.0, req.domain.a}) {
    ForceEntry f;
    f.point = e;
    f.normal = e == 0.0 ? -1.0 : 1.0;
    f.at_boundary = boundary_force(req, e, ForcePrescription::AtBoundary);
    f.interior_limit = boundary_force(req, e, ForcePrescription::InteriorLimit);
    f.agreement_gap = std::abs(f.at_boundary - f.interior_limit);
    r.entries.push_back(f);
  }
  return r;
}

double deformation_consistency(const ObservableRequest& req, double delta) {
  require_segment(req.domain);
  ObservableRequest moved = req;
  moved.domain = DomainDescriptor::segment(req.domain.a + delta, req.domain.bc);
  const cplx f = boundary_force(req, req.domain.a, ForcePrescription::AtBoundary);
  return std::abs(bulk_energy(moved) - bulk_energy(req) + delta * f);
}

double deformation_slope(const ObservableRequest& req, const std::vector<double>& deltas) {
  if (deltas.size() < 2) throw Error(Errc::DomainViolation, "at least two deltas required");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(deltas.size());
  for (double d : deltas) {
    const double lx = std::log(d), ly = std::log(deformation_consistency(req, d));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

GammaRatioLaurent gamma_ratio_laurent(double c, double a0, double b0) {
  GammaRatioLaurent g;
  const double r0 = rgamma(cplx(b0)).real();
  const double r1 = 0.5 * rgamma_deriv(cplx(b0)).real();
  const double k = -a0;
  if (k >= 0 && std::abs(k - std::round(k)) < 1e-12) {
    const int ki = int(std::round(k));
    const double pre = c * ((ki % 2) ? -1.0 : 1.0) / factorial(ki);
    g.pole = pre * 2.0 * r0;
    g.regular = pre * (digamma(cplx(ki + 1)).real() * r0 + 2.0 * r1);
  } else {
    g.regular = c * gamma(cplx(a0)).real() * r0;
  }
  return g;
}

SlabFactors slab_factors(int d2) {
  const double c = std::pow(4.0 * kPi, -0.5 * d2);
  SlabFactors f;
  f.minus = gamma_ratio_laurent(c, -0.5 * (d2 + 1), -0.5);
  f.plus = gamma_ratio_laurent(c, -0.5 * (d2 - 1), 0.5);
  f.transverse = gamma_ratio_laurent(0.5 * c, -0.5 * (d2 + 1), 0.5);
  return f;
}

StressEnergyVEV slab_reduce(const DomainDescriptor& base, int d2, double x, double xi, double kappa) {
  require_segment(base);
  if (d2 < 0) throw Error(Errc::UnsupportedDimension, "negative number of free directions");
  if (d2 == 0) {
    ObservableRequest req{base, xi, {x}, kappa};
    return stress_energy(req, x);
  }
  if (!(x > 1e-12 && x < base.a - 1e-12)) throw Error(Errc::BoundaryPoint, "x is not interior");
  const SlabFactors g = slab_factors(d2);
  const bool poles = g.minus.pole != 0.0 || g.plus.pole != 0.0 || g.transverse.pole != 0.0;

  const cplx dm0 = segment_dirichlet_residue(base, x, d2 + 1);
  const cplx pxy0 = segment_stencil_residue(base, x, kStencilXY, d2 - 1);
  const cplx pxx0 = segment_stencil_residue(base, x, kStencilXX, d2 - 1);
  cplx dm1 = 0.0, pxy1 = 0.0, pxx1 = 0.0;
  if (poles) {
    dm1 = mellin_sigma_derivative(segment_diagonal_spec(base, x), -(d2 + 1.0));
    pxy1 = mellin_sigma_derivative(segment_diagonal_spec(base, x, kStencilXY), 1.0 - d2);
    pxx1 = mellin_sigma_derivative(segment_diagonal_spec(base, x, kStencilXX), 1.0 - d2);
  }
  const Laurent1 Dm = regular_product(g.minus, dm0, dm1, kappa);
  const Laurent1 P1 = regular_product(g.plus, pxy0, pxy1, kappa);
  const Laurent1 P1xx = regular_product(g.plus, pxx0, pxx1, kappa);
  const Laurent1 Pt = regular_product(g.transverse, dm0, dm1, kappa);
  const Laurent1 Sigma = P1 + double(d2) * Pt;
  const Laurent1 Trace = Dm - Sigma;

  const int n = d2 + 2;
  auto build = [&](double z) {
    std::vector<Laurent1> diag(n);
    diag[0] = (0.25 + z) * Dm + (0.25 - z) * Sigma;
    diag[1] = (0.25 - z) * Trace + (0.5 - z) * P1 - z * P1xx;
    for (int j = 2; j < n; ++j) diag[j] = (0.25 - z) * Trace + 0.5 * Pt;
    return diag;
  };
  auto to_matrix = [&](const std::vector<Laurent1>& diag, int which) {
    Matrix m(n);
    for (int j = 0; j < n; ++j) m(j, j) = which == 0 ? diag[j].value : which == 1 ? diag[j].pole : diag[j].ln_kappa;
    return m;
  };
  auto value_at = [&](double z) { return to_matrix(build(z), 0); };

  StressEnergyVEV v;
  v.xi = xi;
  v.d = d2 + 1;
  v.xi_critical = critical_coupling(v.d);
  v.full = value_at(xi);
  std::tie(v.conformal_part, v.nonconformal_part) = conformal_split(value_at, xi, v.d);
  v.pole_part = to_matrix(build(xi), 1);
  v.ln_kappa_part = to_matrix(build(xi), 2);
  const double scale = 1.0 + v.full.max_abs();
  v.pole_order = poles ? 1 : 0;
  v.kappa_dependent = v.ln_kappa_part.max_abs() > 1e-10 * scale;
  v.method = poles ? "residue+gamma-ratio-laurent+mellin-derivative" : "residue+gamma-ratio";
  return v;
}

EnergyReport reduced_energy(const DomainDescriptor& base, int d2, double kappa) {
  require_segment(base);
  if (d2 < 0) throw Error(Errc::UnsupportedDimension, "negative number of free directions");
  const GammaRatioLaurent g = gamma_ratio_laurent(0.5 * std::pow(4.0 * kPi, -0.5 * d2), -0.5 * (d2 + 1), -0.5);
  const Series tr = trace_function(base, KernelKind::Cylinder).expand(std::max(kResidueExpansionOrder, d2 + 3));
  const cplx t0 = trace_residue(tr, d2 + 1);
  const cplx t1 = g.pole != 0.0 ? mellin_sigma_derivative(segment_trace_spec(base), -(d2 + 1.0)) : cplx(0.0);
  const Laurent1 e = regular_product(g, t0, t1, kappa);
  EnergyReport r;
  r.bulk = e.value;
  r.pole_coefficient = e.pole;
  r.ln_kappa_coefficient = e.ln_kappa;
  const double scale = 1.0 + std::abs(e.value);
  r.pole_order = g.pole != 0.0 ? 1 : 0;
  r.kappa_dependent = std::abs(e.ln_kappa) > 1e-10 * scale;
  r.bulk_method = g.pole != 0.0 ? "trace-residue+gamma-ratio-laurent+mellin-derivative" : "trace-residue+gamma-ratio";
  r.boundary = 0.0;
  r.boundary_method = "vanishing-boundary-term";
  r.total = r.bulk;
  r.total_method = "bulk+boundary";
  return r;
}

}  // namespace zetaren
