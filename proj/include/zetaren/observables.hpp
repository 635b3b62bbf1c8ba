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
 * @file observables.hpp
 * @brief Renormalized stress-energy tensor, energies, forces and slab reduction.
 *
 * Index 0 is time, index 1 the segment coordinate and indices 2..d the
 * translation-invariant directions of a slab.
 */

#ifndef ZETAREN_OBSERVABLES_HPP
#define ZETAREN_OBSERVABLES_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zetaren/continuation.hpp"
#include "zetaren/spectrum.hpp"

namespace zetaren {

/// Dense square complex matrix.
class Matrix {
 public:
  explicit Matrix(int n = 0) : n_(n), v_(std::size_t(n) * n, 0.0) {}
  int size() const { return n_; }
  cplx& operator()(int i, int j) { return v_[std::size_t(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const { return v_[std::size_t(i) * n_ + j]; }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.v_.size(); ++k) a.v_[k] += b.v_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.v_.size(); ++k) a.v_[k] -= b.v_[k];
    return a;
  }
  friend Matrix operator*(cplx s, Matrix a) {
    for (auto& x : a.v_) x *= s;
    return a;
  }
  double max_abs() const;

 private:
  int n_;
  std::vector<cplx> v_;
};

struct ObservableRequest {
  DomainDescriptor domain;
  double xi = 0.0;
  std::vector<double> points;
  double kappa = 1.0;
};

/// Conformal coupling (d - 1)/(4 d).
double critical_coupling(int d);

struct StressEnergyVEV {
  Matrix full;
  Matrix conformal_part;
  Matrix nonconformal_part;
  double xi = 0.0;
  double xi_critical = 0.0;
  int d = 1;
  bool kappa_dependent = false;
  /// Slab reductions: order of the gamma-ratio pole in u and the 1/u coefficients it produces.
  int pole_order = 0;
  Matrix pole_part;
  /// Coefficient of ln kappa in the regular part.
  Matrix ln_kappa_part;
  std::string method;
};

/// Conformal part = value at xi_d; nonconformal part = difference quotient in xi.
std::pair<Matrix, Matrix> conformal_split(const std::function<Matrix(double)>& vev_at, double xi, int d);

StressEnergyVEV stress_energy(const ObservableRequest& req, double x);

struct EnergyReport {
  cplx bulk = 0.0;
  cplx boundary = 0.0;
  cplx total = 0.0;
  std::string bulk_method, boundary_method, total_method;
  bool kappa_dependent = false;
  int pole_order = 0;
  cplx pole_coefficient = 0.0;
  cplx ln_kappa_coefficient = 0.0;
};

cplx bulk_energy(const ObservableRequest& req);
cplx boundary_energy(const ObservableRequest& req);
EnergyReport energies(const ObservableRequest& req);

/// Integral over the segment of the conformal or full T00 density.
struct DensityIntegral {
  cplx value = 0.0;
  bool divergent = false;
  std::string note;
};
DensityIntegral density_integral(const ObservableRequest& req, bool conformal_only);

enum class ForcePrescription { AtBoundary, InteriorLimit };

struct ForceEntry {
  double point = 0.0;
  double normal = 0.0;
  cplx at_boundary = 0.0;
  cplx interior_limit = 0.0;
  double agreement_gap = 0.0;
};

struct ForceReport {
  std::vector<ForceEntry> entries;
};

/// Both prescriptions are always computed; `prescription` selects the primary value.
ForceReport boundary_force(const ObservableRequest& req);
cplx boundary_force(const ObservableRequest& req, double endpoint, ForcePrescription prescription);

/// |E(a + delta) - E(a) + delta F(a)| for a segment.
double deformation_consistency(const ObservableRequest& req, double delta);
/// Log-log slope of the residual over the given deltas.
double deformation_slope(const ObservableRequest& req, const std::vector<double>& deltas);

/// Laurent data of c Gamma(a0 + u/2)/Gamma(b0 + u/2) at u = 0.
struct GammaRatioLaurent {
  double pole = 0.0;     // coefficient of 1/u
  double regular = 0.0;  // u^0 coefficient
};
GammaRatioLaurent gamma_ratio_laurent(double c, double a0, double b0);

/// The slab prefactors G_-, G_+ and G_T.
struct SlabFactors {
  GammaRatioLaurent minus, plus, transverse;
};
SlabFactors slab_factors(int d2);

/// Stress-energy of segment x R^{d2}; d2 = 0 passes through to the segment.
StressEnergyVEV slab_reduce(const DomainDescriptor& base, int d2, double x, double xi, double kappa);
/// Energy per unit transverse volume of segment x R^{d2}.
EnergyReport reduced_energy(const DomainDescriptor& base, int d2, double kappa);

}  // namespace zetaren

#endif
