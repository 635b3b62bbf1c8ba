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
 * @file jet.hpp
 * @brief Second-order Taylor jets in an angle offset.
 *
 * A Jet<S> holds f(theta0 + e) = c0 + c1 e + c2 e^2 + O(e^3) with
 * coefficients in any scalar S that supports ring operations and a
 * reciprocal. It is how derivative stencils of the segment kernels are
 * differentiated symbolically in the spatial angle.
 */

#ifndef ZETAREN_JET_HPP
#define ZETAREN_JET_HPP

#include <array>
#include <complex>

#include "zetaren/laurent.hpp"

namespace zetaren {

/// Scalar-generic reciprocal.
inline std::complex<double> recip(const std::complex<double>& x) { return 1.0 / x; }
template <class T>
LogLaurentSeries<T> recip(const LogLaurentSeries<T>& x) {
  return invert(x);
}

/// Lift a coefficient-field constant into the scalar type S.
template <class S, class C>
S lift(const C& c) {
  if constexpr (std::is_same_v<S, C>)
    return c;
  else
    return S::constant(c);
}

template <class S>
struct Jet {
  std::array<S, 3> c;

  friend Jet operator+(const Jet& a, const Jet& b) { return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}}; }
  friend Jet operator-(const Jet& a, const Jet& b) { return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}}; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {{a.c[0] * b.c[0], a.c[0] * b.c[1] + a.c[1] * b.c[0], a.c[0] * b.c[2] + a.c[1] * b.c[1] + a.c[2] * b.c[0]}};
  }
  friend Jet operator*(const S& s, const Jet& b) { return {{s * b.c[0], s * b.c[1], s * b.c[2]}}; }
  friend Jet operator+(const S& s, const Jet& b) { return {{s + b.c[0], b.c[1], b.c[2]}}; }

  Jet reciprocal() const {
    const S r = recip(c[0]);
    const S r1 = -(c[1] * r * r);
    const S r2 = (c[1] * c[1] * r - c[2]) * r * r;
    return {{r, r1, r2}};
  }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

  /// k-th derivative at theta0 (k <= 2).
  S derivative(int k) const { return k == 2 ? S(c[2] + c[2]) : c[k]; }
};

}  // namespace zetaren

#endif
