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

#include "zetaren/special.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

namespace zetaren {

namespace {

const double kLanczos[9] = {0.99999999999980993,     676.5203681218851,
                            -1259.1392167224028,     771.32342877765313,
                            -176.61502916214059,     12.507343278686905,
                            -0.13857109526572012,    9.9843695780195716e-6,
                            1.5056327351493116e-7};

bool is_real(cplx z) { return z.imag() == 0.0; }

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos sum for Re z >= 1/2.
cplx gamma_lanczos(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

cplx sin_pi(cplx z) {
  const double r = z.real() - 2.0 * std::round(z.real() / 2.0);
  if (z.imag() == 0.0) {
    if (r == std::floor(r)) return 0.0;
    return std::sin(kPi * r);
  }
  return std::sin(kPi * cplx(r, z.imag()));
}

cplx expm1(cplx z) {
  if (is_real(z)) return std::expm1(z.real());
  if (std::abs(z) < 1e-5) return z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0)));
  // exp(x+iy)-1 = expm1(x)cos y + (cos y - 1) + i e^x sin y
  const double x = z.real(), y = z.imag();
  const double cm1 = -2.0 * std::sin(0.5 * y) * std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) + cm1, std::exp(x) * std::sin(y)};
}

cplx gamma(cplx z) {
  if (is_real(z)) return boost::math::tgamma(z.real());
  if (z.real() < 0.5) return kPi / (sin_pi(z) * gamma_lanczos(1.0 - z));
  return gamma_lanczos(z);
}

cplx rgamma(cplx z) {
  if (is_real(z)) {
    const double x = z.real();
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 171.0) return 0.0;
    return 1.0 / boost::math::tgamma(x);
  }
  if (z.real() < 0.5) return sin_pi(z) * gamma_lanczos(1.0 - z) / kPi;
  return 1.0 / gamma_lanczos(z);
}

cplx rgamma_deriv(cplx z) {
  if (is_real(z) && is_nonpositive_integer(z.real())) {
    const int k = int(-z.real());
    return (k % 2 == 0 ? 1.0 : -1.0) * factorial(k);
  }
  return -digamma(z) * rgamma(z);
}

cplx digamma(cplx z) {
  if (is_real(z)) return boost::math::digamma(z.real());
  if (z.real() < 0.5) {
    // psi(1-z) - psi(z) = pi cot(pi z)
    return digamma(1.0 - z) - kPi * std::cos(kPi * z) / std::sin(kPi * z);
  }
  cplx acc = 0.0;
  while (std::abs(z) < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const cplx w = 1.0 / (z * z);
  // Bernoulli tail: 1/12, -1/120, 1/252, -1/240, 1/132
  const cplx tail =
      w * (1.0 / 12 - w * (1.0 / 120 - w * (1.0 / 252 - w * (1.0 / 240 - w / 132.0))));
  return acc + std::log(z) - 0.5 / z - tail;
}

double harmonic(int m) {
  double h = 0.0;
  for (int k = 1; k <= m; ++k) h += 1.0 / k;
  return h;
}

double factorial(int n) { return boost::math::factorial<double>(unsigned(n)); }

}  // namespace zetaren
