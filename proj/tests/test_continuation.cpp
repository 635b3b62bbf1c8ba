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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "zetaren/continuation.hpp"
#include "zetaren/error.hpp"

using namespace zetaren;

namespace {

constexpr BoundaryCondition kAllBc[] = {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann,
                                        BoundaryCondition::DirichletNeumann, BoundaryCondition::Periodic};

/// h(t) = e^{-t}, whose Mellin transform is Gamma(sigma).
MellinSpec exponential_spec() {
  MellinSpec s;
  s.integrand = [](double t) { return cplx(std::exp(-t)); };
  s.derivatives = [](double t, int n) {
    std::vector<cplx> d(n + 1);
    for (int k = 0; k <= n; ++k) d[k] = (k % 2 ? -1.0 : 1.0) * std::exp(-t);
    return d;
  };
  s.rho = 0.0;
  s.decay_rate = 1.0;
  return s;
}

/// Abel-regularized Dirichlet D_{-1/2}(x, x): -pi/(12 a^2) + pi/(4 a^2 sin^2(pi x/a)).
double dirichlet_d_minus_half(double x, double a) {
  const double s = std::sin(kPi * x / a);
  return -kPi / (12 * a * a) + kPi / (4 * a * a * s * s);
}

}  // namespace

TEST_CASE("continued Mellin transform of e^-t is the gamma function") {
  for (double sigma : {0.7, -0.5, -1.5, -2.3})
    CHECK(std::abs(mellin_ibp(exponential_spec(), 3, sigma) - boost::math::tgamma(sigma)) <
          1e-9 * std::abs(boost::math::tgamma(sigma)));
}

TEST_CASE("continued Mellin transform has simple poles") {
  std::vector<double> lx, ly;
  for (double d : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
    lx.push_back(std::log(d));
    ly.push_back(std::log(std::abs(mellin_ibp(exponential_spec(), 2, -1.0 + d))));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  CHECK(std::abs((n * sxy - sx * sy) / (n * sxx - sx * sx) + 1.0) < 0.05);
}

TEST_CASE("residue route matches the regularized mode sum for Dirichlet") {
  const double a = 1.4;
  const auto dom = DomainDescriptor::segment(a, BoundaryCondition::Dirichlet);
  for (double x : {0.1, 0.35, 0.7, 1.1})
    CHECK(std::abs(segment_dirichlet_residue(dom, x, 1) - dirichlet_d_minus_half(x, a)) < 1e-10);
}

TEST_CASE("residue route agrees with the Mellin route") {
  for (auto bc : kAllBc) {
    const auto dom = DomainDescriptor::segment(1.0, bc);
    for (double x : {0.1, 0.3, 0.5, 0.77, 0.9})
      for (int n : {3, 4})
        CHECK(std::abs(continued_dirichlet(segment_diagonal_spec(dom, x), n, -0.5).value -
                       segment_dirichlet_residue(dom, x, 1)) < 1e-7);
  }
}

TEST_CASE("trace zeta function has the expected derivative at sigma = -2") {
  const auto dom = DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet);
  const ContinuedValue v = continued_dirichlet_sigma(segment_trace_spec(dom), 4, -2.0);
  // Tr A^{-sigma/2} = pi^{-sigma} zeta(sigma); zeta(-2) = 0 and pi^2 zeta'(-2) = -zeta(3)/4.
  CHECK(std::abs(v.value) < 1e-9);
  CHECK(std::abs(v.derivative + boost::math::zeta(3.0) / 4.0) < 1e-8);
}

TEST_CASE("trace residues give zeta values") {
  const auto tr = trace_function(DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet)).expand(12);
  // Tr A^{n/2} = pi^n zeta(-n).
  for (int n : {1, 3, 5})
    CHECK(std::abs(trace_residue(tr, n) - std::pow(kPi, n) * boost::math::zeta(double(-n))) < 1e-10);
}

TEST_CASE("sqrt-shift deformation extrapolates to the residue") {
  const auto k = closed_form_cylinder(DomainDescriptor::segment(1.0, BoundaryCondition::Neumann));
  const auto e = expand_at_zero(k, 0.3, 12);
  const cplx limit = eps_deformed_limit(e, {DeformationKind::SqrtShift, 0.0}, 1);
  CHECK(std::abs(limit - hankel_residue_D(e, 1)) < 1e-9);
  CHECK_THROWS_AS(eps_deformed_limit(e, {DeformationKind::AdditiveMass, 0.0}, 1), Error);
}

TEST_CASE("kappa enters only through the logarithmic coefficient") {
  KernelExpansion e;
  e.kind = KernelKind::ModifiedCylinder;
  e.series = Series::with_truncation(0, {2.0, 0.5}, {-1.0, 0.0}, 2);
  const KappaValue v1 = renormalized_Dtilde(e, -1, 1.0), v2 = renormalized_Dtilde(e, -1, 3.0);
  CHECK(v1.kappa_dependent);
  CHECK(std::abs((v2.value - v1.value) - v1.ln_kappa_coefficient * std::log(3.0)) < 1e-14);
  const RenormalizedKernelSet a = renormalized_kernels(DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet),
                                                       0.3, 1.0, true);
  const RenormalizedKernelSet b = renormalized_kernels(DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet),
                                                       0.3, 5.0, true);
  // D_{1/2} sits on the pole at s = d/2 and carries ln kappa; the stencils do not.
  CHECK(a.d_plus_half->kappa_dependent);
  CHECK(std::abs((b.d_plus_half->value - a.d_plus_half->value) - a.d_plus_half->ln_kappa_coefficient * std::log(5.0)) <
        1e-13);
  for (const Stencil& st : {kStencilXY, kStencilXX}) CHECK(a.dd_plus_half.at(st) == b.dd_plus_half.at(st));
}

TEST_CASE("boundary points need an explicit opt-in") {
  const auto dom = DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet);
  CHECK_THROWS_AS(renormalized_kernels(dom, 0.0), Error);
  CHECK_NOTHROW(renormalized_kernels(dom, 0.0, 1.0, false, true));
}

TEST_CASE("residues are stable under doubling of the expansion order") {
  for (auto bc : kAllBc) {
    const auto T = closed_form_cylinder(DomainDescriptor::segment(1.0, bc));
    const auto M = KernelFunction::closed(KernelKind::ModifiedCylinder, DomainDescriptor::segment(1.0, bc), kStencilXY);
    for (double x : {0.15, 0.5}) {
      const cplx d12 = hankel_residue_D(expand_at_zero(T, x, x, 12, false), 1);
      const cplx d24 = hankel_residue_D(expand_at_zero(T, x, x, 24, false), 1);
      CHECK(std::abs(d12 - d24) < 1e-12 * (1 + std::abs(d12)));
      const cplx p12 = hankel_residue_Dtilde(expand_at_zero(M, x, x, 12, false), -1);
      const cplx p24 = hankel_residue_Dtilde(expand_at_zero(M, x, x, 24, false), -1);
      CHECK(std::abs(p12 - p24) < 1e-12 * (1 + std::abs(p12)));
    }
  }
}
