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
 * @file special.hpp
 * @brief Gamma-family functions on the complex plane.
 *
 * Real arguments are forwarded to Boost.Math; complex ones use a g=7
 * Lanczos sum with reflection. The reciprocal gamma is entire and returns
 * exact zeros at the non-positive integers, which the continuation code
 * relies on when a gamma pole cancels a polynomial zero.
 */

#ifndef ZETAREN_SPECIAL_HPP
#define ZETAREN_SPECIAL_HPP

#include <complex>

namespace zetaren {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// sin(pi z) with exact zeros at integer z.
cplx sin_pi(cplx z);
/// exp(z) - 1 without cancellation for small |z|.
cplx expm1(cplx z);

cplx gamma(cplx z);
/// 1/Gamma(z); entire.
cplx rgamma(cplx z);
/// d/dz (1/Gamma(z)); equals (-1)^k k! at z = -k.
cplx rgamma_deriv(cplx z);
cplx digamma(cplx z);

/// H_m = 1 + 1/2 + ... + 1/m, H_0 = 0.
double harmonic(int m);
double factorial(int n);

}  // namespace zetaren

#endif
