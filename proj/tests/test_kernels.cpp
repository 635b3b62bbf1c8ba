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

#include "zetaren/error.hpp"
#include "zetaren/kernels.hpp"

using namespace zetaren;

namespace {

constexpr BoundaryCondition kAllBc[] = {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann,
                                        BoundaryCondition::DirichletNeumann, BoundaryCondition::Periodic};
const Stencil kStencils[] = {kNoStencil, kStencilXY, kStencilXX, Stencil{0, 1}};

/// Independent Dirichlet cylinder kernel by direct mode sum.
double dirichlet_mode_sum(double t, double x, double y, double a) {
  double s = 0.0;
  for (int k = 1; k < 4000; ++k) {
    const double w = k * kPi / a;
    s += (2.0 / a) * std::sin(w * x) * std::sin(w * y) * std::exp(-w * t);
  }
  return s;
}

}  // namespace

TEST_CASE("spectral sums agree with closed forms") {
  for (auto bc : kAllBc) {
    const auto dom = DomainDescriptor::segment(1.0, bc);
    const auto model = SpectralModel::segment(1.0, bc);
    for (const Stencil& st : kStencils)
      for (auto kind : {KernelKind::Cylinder, KernelKind::ModifiedCylinder}) {
        const auto c = KernelFunction::closed(kind, dom, st);
        const auto s = KernelFunction::spectral(kind, model, st, 1e-14);
        for (double t : {0.25, 1.0, 4.0})
          for (double x : {0.2, 0.5, 0.7})
            for (double y : {0.2, 0.45, 0.9}) CHECK(std::abs(c(t, x, y) - s(t, x, y)) < 1e-11);
      }
  }
}

TEST_CASE("closed Dirichlet cylinder kernel matches a direct mode sum") {
  const auto k = closed_form_cylinder(DomainDescriptor::segment(1.3, BoundaryCondition::Dirichlet));
  for (double t : {0.1, 0.5, 2.0})
    for (double x : {0.1, 0.65})
      for (double y : {0.3, 1.2}) CHECK(std::abs(k(t, x, y) - dirichlet_mode_sum(t, x, y, 1.3)) < 1e-12);
}

TEST_CASE("kernels are symmetric and vanish on Dirichlet boundaries") {
  for (auto bc : kAllBc) {
    const auto dom = DomainDescriptor::segment(1.0, bc);
    for (auto kind : {KernelKind::Heat, KernelKind::Cylinder, KernelKind::ModifiedCylinder}) {
      const auto k = KernelFunction::closed(kind, dom);
      for (double t : {0.1, 0.7}) CHECK(std::abs(k(t, 0.2, 0.65) - k(t, 0.65, 0.2)) < 1e-13);
      if (bc == BoundaryCondition::Dirichlet || bc == BoundaryCondition::DirichletNeumann)
        CHECK(std::abs(k(0.4, 0.0, 0.3)) < 1e-9);
      if (bc == BoundaryCondition::Dirichlet) CHECK(std::abs(k(0.4, 1.0, 0.3)) < 1e-9);
    }
  }
}

TEST_CASE("minus the time derivative of the modified kernel is the cylinder kernel") {
  const double h = 1e-3;
  for (auto bc : kAllBc) {
    const auto dom = DomainDescriptor::segment(1.0, bc);
    for (const Stencil& st : {kNoStencil, kStencilXY}) {
      const auto T = KernelFunction::closed(KernelKind::Cylinder, dom, st);
      const auto M = KernelFunction::closed(KernelKind::ModifiedCylinder, dom, st);
      for (double t : {0.3, 1.1}) {
        auto m = [&](double s) { return M(s, 0.3, 0.55); };
        const cplx d = (m(t - 2 * h) - 8.0 * m(t - h) + 8.0 * m(t + h) - m(t + 2 * h)) / (12 * h);
        CHECK(std::abs(-d - T(t, 0.3, 0.55)) < 1e-8 * (1 + std::abs(T(t, 0.3, 0.55))));
      }
    }
  }
}

TEST_CASE("image-sum heat kernel matches the spectral heat kernel") {
  for (auto bc : kAllBc) {
    const auto c = KernelFunction::closed(KernelKind::Heat, DomainDescriptor::segment(1.0, bc));
    const auto s = KernelFunction::spectral(KernelKind::Heat, SpectralModel::segment(1.0, bc), {}, 1e-14);
    for (double t : {0.01, 0.25, 2.0}) CHECK(std::abs(c(t, 0.2, 0.9) - s(t, 0.2, 0.9)) < 1e-12);
  }
}

TEST_CASE("free-space closed form matches the Green-function route") {
  for (int d = 1; d <= 3; ++d) {
    const auto k = closed_form_cylinder(DomainDescriptor::free_space(d));
    for (double t : {0.5, 1.0, 2.0})
      for (double r : {0.3, 1.0, 2.5}) {
        Point x(d, 0.0), y(d, 0.0);
        y[0] = r;
        CHECK(std::abs(k(cplx(t), x, y) - greens_route_cylinder(d, t, x, y)) < 1e-12);
      }
  }
}

TEST_CASE("parallel and serial spectral sums agree") {
  const auto s = KernelFunction::spectral(KernelKind::Cylinder, SpectralModel::segment(1.0, BoundaryCondition::Neumann),
                                          {}, 1e-15);
  for (double t : {1e-3, 0.05, 1.0}) {
    const cplx p1 = s.evaluate_parallel(t, {0.3}, {0.31});
    const cplx p2 = s.evaluate_parallel(t, {0.3}, {0.31});
    CHECK(p1 == p2);
    CHECK(std::abs(p1 - s.evaluate_serial(t, {0.3}, {0.31})) < 1e-12 * (1 + std::abs(p1)));
  }
}

TEST_CASE("grid evaluation keeps point order") {
  const auto k = closed_form_cylinder(DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet));
  std::vector<Point> xs, ys;
  for (int i = 1; i < 10; ++i) {
    xs.push_back({0.1 * i});
    ys.push_back({0.5});
  }
  const auto v = evaluate_grid(k, 0.4, xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(v[i] == k(cplx(0.4), xs[i], ys[i]));
}

TEST_CASE("small-t expansion reproduces the kernel near zero") {
  for (auto bc : kAllBc) {
    const auto k = closed_form_cylinder(DomainDescriptor::segment(1.0, bc));
    const KernelExpansion e = expand_at_zero(k, 0.37, 14);
    CHECK(std::abs(e.series.evaluate(0.02) - k(0.02, 0.37, 0.37)) < 1e-12);
  }
  const auto kd = closed_form_cylinder(DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet));
  const auto e = expand_at_zero(kd, 0.5, 4);
  CHECK(std::abs(e.series.coeff(-1) - 1.0 / kPi) < 1e-15);
  CHECK(std::abs(e.series.coeff(1) + kPi / 6.0) < 1e-13);
}

TEST_CASE("unsupported requests are rejected") {
  const auto s = spectral_cylinder(SpectralModel::segment(1.0, BoundaryCondition::Dirichlet), {}, 1e-12);
  CHECK_THROWS_AS(modified_from_cylinder(s), Error);
  const auto k = closed_form_cylinder(DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet));
  CHECK_THROWS_AS(k(-1.0, 0.3, 0.3), Error);
  CHECK_THROWS_AS(expand_at_zero(k, 0.3, 40), Error);
}
