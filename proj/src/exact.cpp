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

#include "zetaren/exact.hpp"

#include <cmath>

#include "zetaren/error.hpp"
#include "zetaren/special.hpp"

namespace zetaren {

namespace {

constexpr int kExactLength = 10;

Rational rpow(const Rational& r, int m) {
  Rational out(1);
  for (int i = 0; i < std::abs(m); ++i) out *= r;
  return m < 0 ? Rational(1) / out : out;
}

/// s / pi, with s the reduced-time scale.
Rational scale_over_pi(BoundaryCondition bc, const Rational& a) {
  return (bc == BoundaryCondition::Periodic ? Rational(2) : Rational(1)) / a;
}

void require_positive(const Rational& a) {
  if (a <= 0) throw Error(Errc::NonPositiveLength, "segment length must be positive");
}

}  // namespace

double PiMultiple::value() const { return static_cast<double>(coeff) * std::pow(kPi, pi_power); }

std::string PiMultiple::to_string() const {
  if (coeff == 0) return "0";
  std::string s = coeff.str();
  if (pi_power == 0) return s;
  return s + " pi" + (pi_power == 1 ? std::string() : "^" + std::to_string(pi_power));
}

PiMultiple exact_kernel_coefficient(BoundaryCondition bc, bool modified, int p, int q, const Rational& a,
                                    const Rational& x, int k) {
  require_positive(a);
  if (x < 0 || x > a) throw Error(Errc::DomainViolation, "x outside the segment");
  const Rational so = scale_over_pi(bc, a);
  const bool dn = bc == BoundaryCondition::DirichletNeumann;
  // Angle of s(x + y) at y = x, over pi; DN uses the half angle.
  const Rational plus = dn ? Rational(so * x) : Rational(so * 2 * x);
  const Trig<Rational> th_minus = exact_trig_of_pi(Rational(0));
  const Trig<Rational> th_plus =
      bc == BoundaryCondition::Periodic ? th_minus : exact_trig_of_pi(plus);
  const RationalSeries tau = RationalSeries::monomial(Rational(1), 1, kExactLength);
  const RationalSeries r = reduced_segment_kernel<RationalSeries, Rational>(bc, modified, p, q, tau, th_minus, th_plus);
  const int n = p + q;
  // Cylinder: (s/2pi or s/pi) s^{n+k}; modified: (-1/2pi or 1/2pi) s^{n+k}.
  Rational pre;
  int pi_power;
  if (modified) {
    pre = Rational(dn ? 1 : -1, 2) * rpow(so, n + k);
    pi_power = n + k - 1;
  } else {
    pre = Rational(1, dn ? 1 : 2) * rpow(so, n + k + 1);
    pi_power = n + k;
  }
  return {pre * r.coeff(k), pi_power};
}

PiMultiple exact_energy(BoundaryCondition bc, const Rational& a) {
  require_positive(a);
  const RationalSeries tau = RationalSeries::monomial(Rational(1), 1, kExactLength);
  const RationalSeries r = reduced_segment_trace(bc, tau);
  // E = Tr A^{1/2}/2 = -(t^1 coefficient of the trace)/2.
  return {-r.coeff(1) * scale_over_pi(bc, a) / 2, 1};
}

std::array<PiMultiple, 2> exact_stress_energy(BoundaryCondition bc, const Rational& a, const Rational& x,
                                              const Rational& xi) {
  const PiMultiple d = exact_kernel_coefficient(bc, false, 0, 0, a, x, 1);
  const PiMultiple pxy = exact_kernel_coefficient(bc, true, 1, 1, a, x, 0);
  const PiMultiple pxx = exact_kernel_coefficient(bc, true, 2, 0, a, x, 0);
  // All three carry one power of pi; D_{-1/2} = -(t^1 coefficient).
  const Rational D = -d.coeff, Pxy = pxy.coeff, Pxx = pxx.coeff;
  const Rational q(1, 4);
  const Rational t00 = (q + xi) * D + (q - xi) * Pxy;
  const Rational t11 = (q - xi) * D + q * Pxy - xi * Pxx;
  return {PiMultiple{t00, 1}, PiMultiple{t11, 1}};
}

}  // namespace zetaren
