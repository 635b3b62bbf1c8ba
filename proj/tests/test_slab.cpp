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

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "zetaren/error.hpp"
#include "zetaren/observables.hpp"
#include "zetaren/special.hpp"

using namespace zetaren;

namespace {

const DomainDescriptor kDirichlet = DomainDescriptor::segment(1.0, BoundaryCondition::Dirichlet);

/// c Gamma(a0 + u/2)/Gamma(b0 + u/2) by direct evaluation.
double ratio(double c, double a0, double b0, double u) {
  return c * boost::math::tgamma(a0 + u / 2) / boost::math::tgamma(b0 + u / 2);
}

/// Pole and regular coefficient of a simple-pole function from symmetric samples.
std::pair<double, double> laurent_from_samples(const std::function<double(double)>& f) {
  const double h = 1e-4;
  const double fp = f(h), fm = f(-h);
  return {0.5 * h * (fp - fm), 0.5 * (fp + fm)};
}

}  // namespace

TEST_CASE("gamma-ratio Laurent data match direct evaluation") {
  for (int d2 = 0; d2 <= 5; ++d2) {
    const double c = std::pow(4 * kPi, -0.5 * d2);
    struct Factor {
      GammaRatioLaurent g;
      double c, a0, b0;
    };
    const SlabFactors f = slab_factors(d2);
    for (const Factor& x : {Factor{f.minus, c, -0.5 * (d2 + 1), -0.5}, Factor{f.plus, c, -0.5 * (d2 - 1), 0.5},
                            Factor{f.transverse, 0.5 * c, -0.5 * (d2 + 1), 0.5}}) {
      const auto [pole, reg] = laurent_from_samples([&](double u) { return ratio(x.c, x.a0, x.b0, u); });
      CHECK(std::abs(x.g.pole - pole) < 1e-6 * (1 + std::abs(pole)));
      CHECK(std::abs(x.g.regular - reg) < 1e-6 * (1 + std::abs(reg)));
      // Poles appear exactly for odd d2 (and for G_+ at d2 = 1, 3, ...).
      if (d2 % 2 == 0) CHECK(x.g.pole == 0.0);
    }
  }
  const SlabFactors f2 = slab_factors(2);
  CHECK(f2.plus.regular == doctest::Approx(-1 / (2 * kPi)).epsilon(1e-14));
  CHECK(f2.minus.regular == doctest::Approx(-1 / (6 * kPi)).epsilon(1e-14));
  CHECK(f2.transverse.regular == doctest::Approx(1 / (6 * kPi)).epsilon(1e-14));
}

TEST_CASE("mixed blocks vanish and the transverse block is isotropic") {
  for (int d2 : {1, 2, 3}) {
    const auto v = slab_reduce(kDirichlet, d2, 0.3, 0.1, 1.0);
    REQUIRE(v.full.size() == d2 + 2);
    for (int i = 0; i < d2 + 2; ++i)
      for (int j = 0; j < d2 + 2; ++j)
        if (i != j) CHECK(v.full(i, j) == cplx(0.0));
    for (int j = 3; j < d2 + 2; ++j) CHECK(v.full(j, j) == v.full(2, 2));
  }
}

TEST_CASE("d2 = 0 passes through to the segment") {
  for (double xi : {0.0, 0.3}) {
    const auto s = slab_reduce(kDirichlet, 0, 0.4, xi, 1.0);
    const auto seg = stress_energy({kDirichlet, xi, {}, 1.0}, 0.4);
    CHECK((s.full - seg.full).max_abs() == 0.0);
    CHECK(s.pole_order == 0);
  }
  CHECK(reduced_energy(kDirichlet, 0, 1.0).bulk == bulk_energy({kDirichlet, 0.0, {}, 1.0}));
}

TEST_CASE("pole flags follow the gamma-ratio analysis") {
  for (int d2 = 1; d2 <= 4; ++d2) {
    const auto v = slab_reduce(kDirichlet, d2, 0.3, 0.2, 1.0);
    CHECK(v.pole_order == (d2 % 2));
    CHECK(reduced_energy(kDirichlet, d2, 1.0).pole_order == (d2 % 2));
  }
  // For Dirichlet the residues multiplying the poles vanish, so nothing depends on kappa.
  const auto v = slab_reduce(kDirichlet, 1, 0.3, 0.2, 1.0);
  CHECK(v.pole_part.max_abs() < 1e-10);
  CHECK_FALSE(v.kappa_dependent);
  const auto w = slab_reduce(kDirichlet, 1, 0.3, 0.2, 7.0);
  CHECK((v.full - w.full).max_abs() < 1e-12);
}

TEST_CASE("parallel plates in three dimensions") {
  const double c = kPi * kPi / 1440.0;
  for (double x : {0.2, 0.5, 0.71}) {
    const auto v = slab_reduce(kDirichlet, 2, x, 1.0 / 6.0, 1.0);
    CHECK(std::abs(v.full(0, 0) + c) < 1e-12);
    CHECK(std::abs(v.full(1, 1) + 3 * c) < 1e-12);
    CHECK(std::abs(v.full(2, 2) - c) < 1e-12);
    CHECK(std::abs(v.full(3, 3) - c) < 1e-12);
  }
  CHECK(std::abs(reduced_energy(kDirichlet, 2, 1.0).bulk + c) < 1e-13);
}

TEST_CASE("two-dimensional strip energy uses the derivative of the trace") {
  const EnergyReport e = reduced_energy(kDirichlet, 1, 1.0);
  CHECK(std::abs(e.bulk + boost::math::zeta(3.0) / (16 * kPi)) < 1e-10);
  CHECK(e.pole_order == 1);
  CHECK(std::abs(e.pole_coefficient) < 1e-10);
}

TEST_CASE("reduced energy is linear in the trace") {
  // Periodic with a = 2 has twice the Dirichlet a = 1 spectrum.
  const auto p = DomainDescriptor::segment(2.0, BoundaryCondition::Periodic);
  for (int d2 : {1, 2, 3})
    CHECK(std::abs(reduced_energy(p, d2, 1.0).bulk - 2.0 * reduced_energy(kDirichlet, d2, 1.0).bulk) < 1e-10);
}

TEST_CASE("conformal slab stress tensor is traceless") {
  for (int d2 : {1, 2, 3}) {
    const auto v = slab_reduce(kDirichlet, d2, 0.35, critical_coupling(d2 + 1), 1.0);
    cplx trace = -v.full(0, 0);
    for (int j = 1; j < d2 + 2; ++j) trace += v.full(j, j);
    CHECK(std::abs(trace) < 1e-11);
  }
}

TEST_CASE("slab requests are validated") {
  CHECK_THROWS_AS(slab_reduce(kDirichlet, -1, 0.3, 0.0, 1.0), Error);
  CHECK_THROWS_AS(slab_reduce(kDirichlet, 2, 0.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(slab_reduce(DomainDescriptor::free_space(2), 1, 0.3, 0.0, 1.0), Error);
}

TEST_CASE("complex gamma helpers match Boost on the real axis") {
  for (double x : {-2.5, -0.5, 0.3, 1.0, 4.75}) {
    CHECK(std::abs(gamma(cplx(x)) - boost::math::tgamma(x)) < 1e-13 * std::abs(boost::math::tgamma(x)));
    CHECK(std::abs(rgamma(cplx(x)) - 1.0 / boost::math::tgamma(x)) < 1e-13);
    CHECK(std::abs(digamma(cplx(x)) - boost::math::digamma(x)) < 1e-12);
  }
  CHECK(std::abs(rgamma(cplx(-3.0))) == 0.0);
}
