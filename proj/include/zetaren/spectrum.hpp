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
 * @file spectrum.hpp
 * @brief Spectral models of A = -Laplacian on segments and their products.
 *
 * A model enumerates eigenpairs (omega_k, F_k) in nondecreasing omega.
 * Enumeration is pure: every call to prefix() builds its own list, so any
 * number of consumers can walk the spectrum concurrently.
 */

#ifndef ZETAREN_SPECTRUM_HPP
#define ZETAREN_SPECTRUM_HPP

#include <boost/container/static_vector.hpp>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "zetaren/segment_forms.hpp"
#include "zetaren/special.hpp"

namespace zetaren {

using Point = std::vector<double>;

enum class DomainKind { Segment, FreeSpace, HalfSpace, Product, Slab };

/// Geometry plus boundary data. The potential is fixed to zero.
struct DomainDescriptor {
  DomainKind kind = DomainKind::Segment;
  double a = 1.0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  int d = 1;           // free/half space dimension
  int free_dims = 0;   // slab: number of translation-invariant directions
  std::shared_ptr<const DomainDescriptor> left, right;  // product factors; slab base in left

  static DomainDescriptor segment(double a, BoundaryCondition bc);
  static DomainDescriptor free_space(int d);
  static DomainDescriptor half_space(int d);
  static DomainDescriptor product(const DomainDescriptor& l, const DomainDescriptor& r);
  static DomainDescriptor slab(const DomainDescriptor& base, int free_dims);

  int dimension() const;
  std::string describe() const;
};

enum class ModeKind { Sin, Cos, Exp };

/// One-dimensional factor norm * {sin, cos, exp(i .)}(k x) acting on one axis.
struct Mode1D {
  ModeKind kind = ModeKind::Sin;
  double k = 0.0;
  double norm = 1.0;
  int axis = 0;

  /// m-th derivative at x.
  cplx eval(double x, int m = 0) const;
};

struct EigenData {
  double omega = 0.0;
  boost::container::static_vector<Mode1D, 4> factors;
  std::string multiplicity_tag;

  cplx eval(const Point& x) const { return eval_deriv(x, 0, 0); }
  /// Derivative of the given order along one axis.
  cplx eval_deriv(const Point& x, int axis, int order = 1) const;
  /// Mixed stencil: order o1 along axis a1 and o2 along axis a2.
  cplx eval_mixed(const Point& x, int a1, int o1, int a2, int o2) const;
};

class SpectralModel {
 public:
  static SpectralModel segment(double a, BoundaryCondition bc);
  static SpectralModel product(const SpectralModel& m1, const SpectralModel& m2);

  int dimension() const;
  bool zero_mode_removed() const;
  const DomainDescriptor& domain() const;

  /// First n eigenpairs, nondecreasing in omega.
  std::vector<EigenData> prefix(std::size_t n) const;
  EigenData eigen(std::size_t k) const;
  std::vector<double> omegas(std::size_t n) const;
  /// Lowest frequency.
  double omega1() const;
  /// Bound on sup |F_k| over the domain, uniform in k.
  double sup_bound() const;

 private:
  struct Impl;
  explicit SpectralModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct WeylReport {
  double fitted_exponent = 0.0;
  double fitted_constant = 0.0;
  /// C = 2 sqrt(pi) Gamma(d/2 + 1)^{1/d} Vol^{-1/d}, when the volume is finite.
  double predicted_constant = 0.0;
};

/// Least-squares fit of ln omega_k against ln k over the upper half of the first count values.
WeylReport weyl_check(const SpectralModel& m, int count);

}  // namespace zetaren

#endif
