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
#include "zetaren/exact.hpp"
#include "zetaren/observables.hpp"

using namespace zetaren;

TEST_CASE("exact energies are rational multiples of pi") {
  CHECK(exact_energy(BoundaryCondition::Dirichlet, Rational(1)) == PiMultiple{Rational(-1, 24), 1});
  CHECK(exact_energy(BoundaryCondition::Neumann, Rational(1)) == PiMultiple{Rational(-1, 24), 1});
  CHECK(exact_energy(BoundaryCondition::DirichletNeumann, Rational(1)) == PiMultiple{Rational(1, 48), 1});
  CHECK(exact_energy(BoundaryCondition::Periodic, Rational(1)) == PiMultiple{Rational(-1, 6), 1});
  CHECK(exact_energy(BoundaryCondition::Dirichlet, Rational(3, 2)) == PiMultiple{Rational(-1, 36), 1});
  CHECK(exact_energy(BoundaryCondition::Dirichlet, Rational(1)).to_string() == "-1/24 pi");
}

TEST_CASE("exact Dirichlet stress tensor at conformal coupling") {
  for (const Rational x : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    const auto t = exact_stress_energy(BoundaryCondition::Dirichlet, Rational(1), x, Rational(0));
    CHECK(t[0] == PiMultiple{Rational(-1, 24), 1});
    CHECK(t[1] == PiMultiple{Rational(-1, 24), 1});
  }
}

TEST_CASE("exact nonconformal part is B(x)") {
  // B(1/4) = pi, B(1/2) = pi/2 for a = 1.
  const Rational xi(3, 10);
  const auto q = exact_stress_energy(BoundaryCondition::Dirichlet, Rational(1), Rational(1, 4), xi);
  CHECK(q[0] == PiMultiple{Rational(-1, 24) + xi, 1});
  const auto h = exact_stress_energy(BoundaryCondition::Dirichlet, Rational(1), Rational(1, 2), xi);
  CHECK(h[0] == PiMultiple{Rational(-1, 24) + xi / 2, 1});
  CHECK(h[1] == PiMultiple{Rational(-1, 24), 1});
}

TEST_CASE("exact and floating evaluations agree") {
  const BoundaryCondition bcs[] = {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann,
                                   BoundaryCondition::DirichletNeumann, BoundaryCondition::Periodic};
  for (auto bc : bcs) {
    const Rational a(5, 4);
    CHECK(std::abs(exact_energy(bc, a).value() - bulk_energy({DomainDescriptor::segment(1.25, bc), 0.0, {}, 1.0})) <
          1e-14);
    const Rational x = a / 2;
    const auto t = exact_stress_energy(bc, a, x, Rational(1, 5));
    const auto v = stress_energy({DomainDescriptor::segment(1.25, bc), 0.2, {}, 1.0}, 0.625);
    CHECK(std::abs(t[0].value() - v.full(0, 0)) < 1e-13);
    CHECK(std::abs(t[1].value() - v.full(1, 1)) < 1e-13);
  }
}

TEST_CASE("exact mode needs angles that are multiples of pi/2") {
  CHECK_THROWS_AS(exact_stress_energy(BoundaryCondition::Dirichlet, Rational(1), Rational(1, 3), Rational(0)), Error);
  CHECK_THROWS_AS(exact_stress_energy(BoundaryCondition::DirichletNeumann, Rational(1), Rational(1, 4), Rational(0)),
                  Error);
  CHECK_NOTHROW(exact_stress_energy(BoundaryCondition::Periodic, Rational(1), Rational(1, 3), Rational(0)));
  CHECK_THROWS_AS(exact_energy(BoundaryCondition::Dirichlet, Rational(0)), Error);
}
