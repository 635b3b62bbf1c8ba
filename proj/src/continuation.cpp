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

#include "zetaren/continuation.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "zetaren/segment_forms.hpp"
#include "zetaren/special.hpp"

namespace zetaren {

namespace {

constexpr double kQuadTol = 1e-11;
constexpr int kSmallSeriesOrder = 40;

using boost::math::quadrature::exp_sinh;
using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::tanh_sinh;

bool is_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

void check_quadrature(double err, double l1, const char* where) {
  if (!(err <= 1e-8 * std::max(1.0, l1)))
    throw Error(Errc::QuadratureNotConverged, std::string(where) + ": error estimate " + std::to_string(err));
}

// One real component of int_a^b f(t) dt on each subrange.
template <class F>
double integrate_piece(const F& f, double a, double b, bool infinite_upper) {
  double err = 0.0, l1 = 0.0;
  double v;
  if (infinite_upper) {
    exp_sinh<double> es;
    v = es.integrate(f, a, std::numeric_limits<double>::infinity(), 1e-12, &err, &l1);
  } else if (a == 0.0) {
    tanh_sinh<double> ts;
    v = ts.integrate(f, a, b, 1e-12, &err, &l1);
  } else {
    v = gauss_kronrod<double, 61>::integrate(f, a, b, 12, kQuadTol, &err, &l1);
  }
  check_quadrature(err, l1, "mellin quadrature");
  return v;
}

// I_n(sigma) = int_0^inf t^{mu} J^{(n)}(t) [ln t] dt, mu = sigma - rho + n - 1.
cplx ibp_integral(const MellinSpec& spec, int n, cplx sigma, bool log_weight) {
  const cplx mu = sigma - spec.rho + double(n) - 1.0;
  cplx total = 0.0;
  double ts = 0.0;
  if (spec.small_t_series) {
    const Series& J = *spec.small_t_series;
    if (J.min_order() < 0 || J.has_log())
      throw Error(Errc::DomainViolation, "small-t series of J must be a Taylor series");
    ts = spec.series_radius / 4.0;
    const double lts = std::log(ts);
    for (int k = n; k < J.truncation_order(); ++k) {
      const int j = k - n;
      double ff = 1.0;
      for (int i = j + 1; i <= k; ++i) ff *= i;
      const cplx d = J.coeff(k) * ff;
      const cplx e = mu + double(j) + 1.0;
      const cplx p = std::exp(e * lts);
      total += log_weight ? d * p * (lts / e - 1.0 / (e * e)) : d * p / e;
    }
  }
  auto g = [&](double t) -> cplx {
    const cplx v = spec.derivatives(t, n)[n] * std::exp(mu * std::log(t));
    return log_weight ? v * std::log(t) : v;
  };
  const bool complex_valued = sigma.imag() != 0.0 || spec.derivatives(1.0, n)[n].imag() != 0.0;
  auto both = [&](double a, double b, bool inf) {
    cplx v = integrate_piece([&](double t) { return g(t).real(); }, a, b, inf);
    if (complex_valued) v += cplx(0.0, integrate_piece([&](double t) { return g(t).imag(); }, a, b, inf));
    return v;
  };
  const double mid = std::max(ts, 1.0);
  if (mid > ts) total += both(ts, mid, false);
  if (spec.decay_rate > 0)
    total += both(mid, mid + 60.0 / spec.decay_rate, false);
  else
    total += both(mid, 0.0, true);
  return total;
}

void check_strip(const MellinSpec& spec, int n, cplx sigma) {
  if (n < 0) throw Error(Errc::DomainViolation, "number of integrations by parts must be nonnegative");
  if (!(sigma.real() > spec.rho - n))
    throw Error(Errc::DivergentIntegral, "Re sigma must exceed rho - n; increase n");
}

}  // namespace

cplx mellin_ibp(const MellinSpec& spec, int n, cplx sigma) {
  check_strip(spec, n, sigma);
  cplx P = 1.0;
  for (int i = 0; i < n; ++i) {
    const cplx f = sigma - spec.rho + double(i);
    if (std::abs(f) < 1e-13)
      throw Error(Errc::PoleAtSigma, "pole at sigma = " + std::to_string(spec.rho - i));
    P *= f;
  }
  const cplx I = ibp_integral(spec, n, sigma, false);
  return (n % 2 ? -1.0 : 1.0) * I / P;
}

ContinuedValue continued_dirichlet_sigma(const MellinSpec& spec, int n, cplx sigma) {
  check_strip(spec, n, sigma);
  cplx R, dR;
  const int M = int(std::round(n - spec.rho - 1.0));
  if (is_integer(spec.rho) && M >= 0) {
    // Gamma zeros at sigma = 0, -1, ..., -M cancel the matching factors.
    const int rho = int(std::round(spec.rho));
    cplx Q = 1.0, dlogQ = 0.0;
    for (int j = std::max(1, rho - n + 1); j <= rho; ++j) {
      const cplx f = sigma - double(j);
      if (std::abs(f) < 1e-13) throw Error(Errc::PoleAtSigma, "pole at sigma = " + std::to_string(j));
      Q *= f;
      dlogQ += 1.0 / f;
    }
    const cplx z = sigma + double(M) + 1.0;
    R = rgamma(z) / Q;
    dR = rgamma_deriv(z) / Q - R * dlogQ;
  } else {
    cplx P = 1.0, dlogP = 0.0;
    for (int i = 0; i < n; ++i) {
      const cplx f = sigma - spec.rho + double(i);
      if (std::abs(f) < 1e-13) throw Error(Errc::PoleAtSigma, "pole of the Mellin transform");
      P *= f;
      dlogP += 1.0 / f;
    }
    R = rgamma(sigma) / P;
    dR = rgamma_deriv(sigma) / P - R * dlogP;
  }
  const double sgn = n % 2 ? -1.0 : 1.0;
  const cplx I = ibp_integral(spec, n, sigma, false);
  const cplx IL = ibp_integral(spec, n, sigma, true);
  return {sgn * I * R, sgn * (IL * R + I * dR)};
}

ContinuedValue continued_dirichlet(const MellinSpec& spec, int n, cplx s) {
  const cplx sigma = spec.convention == GammaConvention::Heat ? s : 2.0 * s;
  return continued_dirichlet_sigma(spec, n, sigma);
}

namespace {

// Radius in t of the Taylor series of t T(t; x, x) at t = 0.
double diagonal_radius(const DomainDescriptor& dom, double x) {
  const double s = tau_scale(dom.bc, dom.a);
  double r = 2.0 * kPi;
  if (dom.bc != BoundaryCondition::Periodic) {
    const double th = std::fmod(2.0 * s * x, 2.0 * kPi);
    const double d = std::min(th, 2.0 * kPi - th);
    if (d > 1e-12) r = std::min(r, d);
  }
  return r / s;
}

double lowest_frequency(const DomainDescriptor& dom) {
  const double s = tau_scale(dom.bc, dom.a);
  return dom.bc == BoundaryCondition::DirichletNeumann ? 0.5 * s : s;
}

// J^{(k)}(t0) for J = t^rho h from the Taylor series of h at t0.
std::vector<cplx> derivatives_from_series(const Series& h, double t0, int rho, int n) {
  Series tp = Series::polynomial(0, {cplx(1.0)});
  const Series lin = Series::polynomial(0, {cplx(t0), cplx(1.0)});
  for (int i = 0; i < rho; ++i) tp = tp * lin;
  const Series J = h * tp;
  std::vector<cplx> out(n + 1);
  double f = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) f *= k;
    out[k] = J.coeff(k) * f;
  }
  return out;
}

}  // namespace

MellinSpec segment_diagonal_spec(const DomainDescriptor& dom, double x, const Stencil& st) {
  if (dom.kind != DomainKind::Segment) throw Error(Errc::UnsupportedDomain, "segment expected");
  const KernelFunction k = closed_form_cylinder(dom, st);
  const int rho = 1 + st.order();
  MellinSpec spec;
  spec.integrand = [k, x](double t) { return k(t, x, x); };
  spec.derivatives = [k, x, rho](double t, int n) {
    return derivatives_from_series(segment_taylor_at(k, t, x, x, n), t, rho, n);
  };
  spec.rho = rho;
  spec.convention = GammaConvention::Cylinder;
  spec.decay_rate = lowest_frequency(dom);
  spec.small_t_series = expand_at_zero(k, x, x, kSmallSeriesOrder, false).series.shifted(rho);
  spec.series_radius = diagonal_radius(dom, x);
  return spec;
}

MellinSpec segment_trace_spec(const DomainDescriptor& dom) {
  const TraceFunction tr = trace_function(dom, KernelKind::Cylinder);
  MellinSpec spec;
  spec.integrand = [tr](double t) { return tr(t); };
  spec.derivatives = [tr](double t, int n) { return derivatives_from_series(tr.taylor_at(t, n), t, 1, n); };
  spec.rho = 1;
  spec.convention = GammaConvention::Cylinder;
  spec.decay_rate = lowest_frequency(dom);
  spec.small_t_series = tr.expand(kSmallSeriesOrder).shifted(1);
  spec.series_radius = 2.0 * kPi / tau_scale(dom.bc, dom.a);
  return spec;
}

cplx hankel_residue_D(const KernelExpansion& e, int n) {
  if (n < 0) throw Error(Errc::DomainViolation, "n must be nonnegative");
  return (n % 2 ? -1.0 : 1.0) * factorial(n) * e.series.shifted(-(n + 1)).residue();
}

cplx hankel_residue_Dtilde(const KernelExpansion& e, int n) {
  if (n < -1) throw Error(Errc::DomainViolation, "n must be at least -1");
  return ((n + 1) % 2 ? -1.0 : 1.0) * factorial(n + 1) * e.series.shifted(-(n + 2)).residue();
}

cplx trace_residue(const Series& trace_expansion, int n) {
  if (n < 0) throw Error(Errc::DomainViolation, "n must be nonnegative");
  return (n % 2 ? -1.0 : 1.0) * factorial(n) * trace_expansion.shifted(-(n + 1)).residue();
}

KappaValue renormalized_Dtilde(const KernelExpansion& e, int n, double kappa) {
  if (n < -1) throw Error(Errc::DomainViolation, "n must be at least -1");
  if (!(kappa > 0)) throw Error(Errc::DomainViolation, "kappa must be positive");
  const int m = n + 1;
  const cplx c = e.series.coeff(m);
  const cplx g = e.series.log_coeff(m);
  const double pref = (m % 2 ? -1.0 : 1.0) * factorial(m);
  KappaValue v;
  const double psi = -kEulerGamma + harmonic(m);
  v.value = pref * (c + g * (psi - std::log(kappa)));
  v.ln_kappa_coefficient = -pref * g;
  v.kappa_dependent = g != cplx(0.0);
  return v;
}

cplx eps_deformed_value(const KernelExpansion& e, DeformationMode mode, int n) {
  if (mode.mode == DeformationKind::AdditiveMass)
    throw Error(Errc::UnsupportedMode, "only the sqrt-shift deformation factorizes as e^{-eps t} T");
  Series s = e.series;
  if (mode.mode == DeformationKind::SqrtShift && mode.epsilon != 0.0) {
    const int len = s.truncation_order() - s.min_order() + 1;
    s = s * exp(Series::with_truncation(1, {cplx(-mode.epsilon)}, {}, std::max(len, 1)));
  }
  KernelExpansion d = e;
  d.series = s;
  switch (e.kind) {
    case KernelKind::Cylinder: return hankel_residue_D(d, n);
    case KernelKind::ModifiedCylinder: return hankel_residue_Dtilde(d, n);
    default: throw Error(Errc::UnsupportedMode, "heat expansions have no residue formula here");
  }
}

cplx eps_deformed_limit(const KernelExpansion& e, DeformationMode mode, int n, const std::vector<double>& ladder) {
  if (mode.mode == DeformationKind::AdditiveMass)
    throw Error(Errc::UnsupportedMode, "only the sqrt-shift deformation factorizes as e^{-eps t} T");
  if (mode.mode == DeformationKind::None) return eps_deformed_value(e, mode, n);
  if (ladder.size() < 2) throw Error(Errc::LimitNotConverged, "ladder needs at least two points");
  // Neville extrapolation to eps = 0.
  const std::size_t m = ladder.size();
  std::vector<cplx> P(m);
  for (std::size_t i = 0; i < m; ++i) P[i] = eps_deformed_value(e, {DeformationKind::SqrtShift, ladder[i]}, n);
  cplx previous = P[m - 1];
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t i = 0; i + k < m; ++i) {
      const double xi = ladder[i], xk = ladder[i + k];
      P[i] = (xk * P[i] - xi * P[i + 1]) / (xk - xi);
    }
    if (k == m - 2) previous = P[1];
  }
  if (std::abs(P[0] - previous) > 1e-3 * std::max(1.0, std::abs(P[0])))
    throw Error(Errc::LimitNotConverged, "eps ladder extrapolants disagree");
  return P[0];
}

GammaPrefactorExpansion gamma_prefactor_expansion(int n, double kappa) {
  if (n < 1) throw Error(Errc::DomainViolation, "n must be at least 1");
  const double f = 1.0 / factorial(n - 1);
  GammaPrefactorExpansion g;
  g.u_series = Series::from_coeffs(
      -1, {cplx(f), f * cplx(std::log(kappa) + kEulerGamma - harmonic(n - 1), -kPi)});
  g.ln_t_coefficient = f;
  g.t_power = n - 1;
  return g;
}

cplx segment_dirichlet_residue(const DomainDescriptor& dom, double x, int n) {
  const auto k = closed_form_cylinder(dom);
  return hankel_residue_D(expand_at_zero(k, x, x, std::max(n + 2, kResidueExpansionOrder), false), n);
}

cplx segment_stencil_residue(const DomainDescriptor& dom, double x, const Stencil& st, int n) {
  const auto k = KernelFunction::closed(KernelKind::ModifiedCylinder, dom, st);
  return hankel_residue_Dtilde(expand_at_zero(k, x, x, std::max(n + 3, kResidueExpansionOrder), false), n);
}

RenormalizedKernelSet renormalized_kernels(const DomainDescriptor& dom, double x, double kappa,
                                           bool with_d_plus_half, bool allow_boundary) {
  if (dom.kind != DomainKind::Segment) throw Error(Errc::UnsupportedDomain, "segment expected");
  if (!allow_boundary && !(x > 1e-12 && x < dom.a - 1e-12))
    throw Error(Errc::BoundaryPoint, "x = " + std::to_string(x) + " is not interior");
  RenormalizedKernelSet r;
  r.at_point = x;
  const auto T = closed_form_cylinder(dom);
  r.d_minus_half = hankel_residue_D(expand_at_zero(T, x, x, kResidueExpansionOrder, false), 1);
  for (const Stencil& st : {kStencilXY, kStencilXX}) {
    const auto k = KernelFunction::closed(KernelKind::ModifiedCylinder, dom, st);
    const auto ex = expand_at_zero(k, x, x, kResidueExpansionOrder, false);
    const KappaValue v = renormalized_Dtilde(ex, -1, kappa);
    r.dd_plus_half[st] = v.value;
    r.kappa_dependent = r.kappa_dependent || v.kappa_dependent;
  }
  if (with_d_plus_half) {
    const auto k = KernelFunction::closed(KernelKind::ModifiedCylinder, dom);
    r.d_plus_half = renormalized_Dtilde(expand_at_zero(k, x, x, kResidueExpansionOrder, false), -1, kappa);
    r.kappa_dependent = r.kappa_dependent || r.d_plus_half->kappa_dependent;
  }
  return r;
}

}  // namespace zetaren
