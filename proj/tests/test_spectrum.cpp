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

#include <algorithm>

#include <boost/math/quadrature/gauss.hpp>

#include "zetaren/error.hpp"
#include "zetaren/spectrum.hpp"

using namespace zetaren;

namespace {

constexpr BoundaryCondition kAllBc[] = {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann,
                                        BoundaryCondition::DirichletNeumann, BoundaryCondition::Periodic};

/// Composite 30-point Gauss-Legendre over [0, a].
cplx integrate(const std::function<cplx(double)>& f, double a) {
  using GL = boost::math::quadrature::gauss<double, 30>;
  cplx total = 0.0;
  const int panels = 8;
  for (int p = 0; p < panels; ++p) {
    const double lo = a * p / panels, hi = a * (p + 1) / panels;
    total += cplx(GL::integrate([&](double x) { return f(x).real(); }, lo, hi),
                  GL::integrate([&](double x) { return f(x).imag(); }, lo, hi));
  }
  return total;
}

}  // namespace

TEST_CASE("segment eigenfunctions are orthonormal") {
  const double a = 1.7;
  for (auto bc : kAllBc) {
    const auto modes = SpectralModel::segment(a, bc).prefix(8);
    for (std::size_t j = 0; j < modes.size(); ++j)
      for (std::size_t k = j; k < modes.size(); ++k) {
        const cplx ip = integrate([&](double x) { return std::conj(modes[j].eval({x})) * modes[k].eval({x}); }, a);
        CHECK(std::abs(ip - (j == k ? 1.0 : 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("eigenfunctions solve -f'' = omega^2 f and meet the boundary conditions") {
  const double a = 1.3;
  for (auto bc : kAllBc) {
    for (const auto& e : SpectralModel::segment(a, bc).prefix(10)) {
      for (double x : {0.1, 0.6, 1.2}) {
        const cplx f = e.eval({x}), f2 = e.eval_deriv({x}, 0, 2);
        CHECK(std::abs(-f2 - e.omega * e.omega * f) < 1e-10 * (1 + e.omega * e.omega));
      }
      const cplx f0 = e.eval({0.0}), fa = e.eval({a});
      const cplx d0 = e.eval_deriv({0.0}, 0), da = e.eval_deriv({a}, 0);
      switch (bc) {
        case BoundaryCondition::Dirichlet: CHECK(std::abs(f0) + std::abs(fa) < 1e-12); break;
        case BoundaryCondition::Neumann: CHECK(std::abs(d0) + std::abs(da) < 1e-10); break;
        case BoundaryCondition::DirichletNeumann: CHECK(std::abs(f0) + std::abs(da) < 1e-10); break;
        case BoundaryCondition::Periodic: CHECK(std::abs(f0 - fa) + std::abs(d0 - da) < 1e-10); break;
      }
    }
  }
}

TEST_CASE("segment spectra match the closed forms") {
  const double a = 2.0, pi = kPi;
  const auto d = SpectralModel::segment(a, BoundaryCondition::Dirichlet).omegas(5);
  const auto dn = SpectralModel::segment(a, BoundaryCondition::DirichletNeumann).omegas(5);
  const auto p = SpectralModel::segment(a, BoundaryCondition::Periodic).omegas(5);
  for (int k = 0; k < 5; ++k) {
    CHECK(d[k] == doctest::Approx((k + 1) * pi / a).epsilon(1e-14));
    CHECK(dn[k] == doctest::Approx((k + 0.5) * pi / a).epsilon(1e-14));
  }
  // Periodic frequencies 2 pi k / a come in pairs.
  CHECK(p[0] == doctest::Approx(2 * pi / a));
  CHECK(p[1] == doctest::Approx(2 * pi / a));
  CHECK(p[2] == doctest::Approx(4 * pi / a));
  CHECK(SpectralModel::segment(a, BoundaryCondition::Neumann).zero_mode_removed());
}

TEST_CASE("Weyl exponent of segments is one") {
  for (auto bc : kAllBc) {
    const WeylReport w = weyl_check(SpectralModel::segment(1.0, bc), 2000);
    CHECK(std::abs(w.fitted_exponent - 1.0) < 0.01);
    CHECK(w.fitted_constant == doctest::Approx(w.predicted_constant).epsilon(0.02));
  }
}

TEST_CASE("product spectra are sorted sums of squares") {
  const auto m1 = SpectralModel::segment(1.0, BoundaryCondition::Dirichlet);
  const auto m2 = SpectralModel::segment(2.0, BoundaryCondition::Dirichlet);
  const auto prod = SpectralModel::product(m1, m2);
  CHECK(prod.dimension() == 2);
  std::vector<double> want;
  for (int i = 1; i <= 30; ++i)
    for (int j = 1; j <= 30; ++j) want.push_back(std::hypot(i * kPi, j * kPi / 2.0));
  std::sort(want.begin(), want.end());
  const auto got = prod.omegas(40);
  for (int k = 0; k < 40; ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-13));
  const auto e = prod.eigen(3);
  const cplx ip = [&] {
    using GL = boost::math::quadrature::gauss<double, 30>;
    return GL::integrate([&](double x) {
      return GL::integrate([&](double y) { return std::norm(e.eval({x, y})); }, 0.0, 2.0);
    }, 0.0, 1.0);
  }();
  CHECK(std::abs(ip - 1.0) < 1e-12);
}

TEST_CASE("invalid segments are rejected") {
  CHECK_THROWS_AS(SpectralModel::segment(0.0, BoundaryCondition::Dirichlet), Error);
  CHECK_THROWS_AS(SpectralModel::segment(-1.0, BoundaryCondition::Neumann), Error);
  CHECK_THROWS_AS(parse_bc("robin"), Error);
}
