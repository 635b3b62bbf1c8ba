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
 * @file exact.hpp
 * @brief Exact rational evaluation of segment energies and stress tensors.
 *
 * Every segment quantity is a rational multiple of a power of pi once a and
 * x are rational and the boundary angles are multiples of pi/2: x/a a
 * multiple of 1/4 for Dirichlet and Neumann, of 1/2 for Dirichlet-Neumann,
 * any rational for periodic.
 */

#ifndef ZETAREN_EXACT_HPP
#define ZETAREN_EXACT_HPP

#include <array>
#include <string>

#include "zetaren/laurent.hpp"
#include "zetaren/segment_forms.hpp"

namespace zetaren {

/// coeff * pi^pi_power.
struct PiMultiple {
  Rational coeff{0};
  int pi_power = 0;
  double value() const;
  std::string to_string() const;
  friend bool operator==(const PiMultiple& a, const PiMultiple& b) {
    return a.coeff == b.coeff && (a.coeff == 0 || a.pi_power == b.pi_power);
  }
};

/// Casimir energy of a segment of rational length a.
PiMultiple exact_energy(BoundaryCondition bc, const Rational& a);

/// Diagonal of the stress-energy tensor at a rational point, xi rational.
std::array<PiMultiple, 2> exact_stress_energy(BoundaryCondition bc, const Rational& a, const Rational& x,
                                              const Rational& xi);

/// Coefficient of t^k in a diagonal cylinder (modified = false) or modified kernel stencil.
PiMultiple exact_kernel_coefficient(BoundaryCondition bc, bool modified, int p, int q, const Rational& a,
                                    const Rational& x, int k);

}  // namespace zetaren

#endif
