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
 * @file continuation.hpp
 * @brief Analytic continuation of Dirichlet kernels and traces in s.
 *
 * Two independent routes are offered. The residue route reads D_{-n/2}
 * from t = 0 expansions of the cylinder kernels. The quadrature route
 * continues the Mellin transform by integrating by parts n times and then
 * integrating numerically.
 */

#ifndef ZETAREN_CONTINUATION_HPP
#define ZETAREN_CONTINUATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "zetaren/kernels.hpp"
#include "zetaren/laurent.hpp"

namespace zetaren {

/// Heat: D_s = (1/Gamma(s)) int t^{s-1} K. Cylinder: D_s = (1/Gamma(2s)) int t^{2s-1} T.
enum class GammaConvention { Heat, Cylinder };

struct MellinSpec {
  /// h(t).
  std::function<cplx(double)> integrand;
  /// J^{(0)}, ..., J^{(n)} at t, with J(t) = t^rho h(t) smooth at t = 0.
  std::function<std::vector<cplx>(double, int)> derivatives;
  double rho = 0.0;
  GammaConvention convention = GammaConvention::Cylinder;
  /// Exponential decay rate of h at large t; zero selects an algebraic-tail rule.
  double decay_rate = 1.0;
  /// Optional Taylor series of J at t = 0, used on [0, series_radius / 4].
  std::optional<Series> small_t_series;
  double series_radius = 0.0;
};

/// Continued M(sigma) = int_0^inf t^{sigma-1} h(t) dt after n integrations by parts.
cplx mellin_ibp(const MellinSpec& spec, int n, cplx sigma);

struct ContinuedValue {
  cplx value;
  /// d/dsigma of the value.
  cplx derivative;
};

/// D = M(sigma)/Gamma(sigma) with gamma-function zeros cancelled analytically at integer rho.
ContinuedValue continued_dirichlet_sigma(const MellinSpec& spec, int n, cplx sigma);
/// D_s, with sigma = s (heat) or 2s (cylinder); the derivative is still taken in sigma.
ContinuedValue continued_dirichlet(const MellinSpec& spec, int n, cplx s);

/// Mellin data of a diagonal cylinder kernel stencil of a segment; rho = 1 + stencil order.
MellinSpec segment_diagonal_spec(const DomainDescriptor& segment, double x, const Stencil& st = {});
/// Mellin data of the cylinder trace of a segment.
MellinSpec segment_trace_spec(const DomainDescriptor& segment);

/// D_{-n/2} = (-1)^n n! Res(t^{-(n+1)} T).
cplx hankel_residue_D(const KernelExpansion& e, int n);
/// D_{-n/2} = (-1)^{n+1} (n+1)! Res(t^{-(n+2)} T~), n >= -1. Throws LogAtResidueOrder.
cplx hankel_residue_Dtilde(const KernelExpansion& e, int n);
/// Tr A^{n/2} = (-1)^n n! Res(t^{-(n+1)} T(t)).
cplx trace_residue(const Series& trace_expansion, int n);

/// Regular part at u = 0 of kappa^u D_{(u-n)/2} read from a modified kernel expansion.
struct KappaValue {
  cplx value;
  /// Coefficient of ln kappa in value.
  cplx ln_kappa_coefficient = 0.0;
  bool kappa_dependent = false;
};
KappaValue renormalized_Dtilde(const KernelExpansion& e, int n, double kappa);

enum class DeformationKind { None, AdditiveMass, SqrtShift };

struct DeformationMode {
  DeformationKind mode = DeformationKind::SqrtShift;
  double epsilon = 0.0;
};

/// Residue with e^{-eps t} folded in, evaluated at eps and extrapolated along a ladder to eps = 0.
cplx eps_deformed_value(const KernelExpansion& e, DeformationMode mode, int n);
cplx eps_deformed_limit(const KernelExpansion& e, DeformationMode mode, int n,
                        const std::vector<double>& ladder = {0.1, 0.01, 0.001});

/// u-expansion of kappa^{2s-n} e^{-2 i pi s} Gamma(1-2s) t^{2s-1} at 2s = n + u.
struct GammaPrefactorExpansion {
  /// Coefficients of u^{-1} and u^0, without the t^{n-1} factor.
  Series u_series;
  /// Coefficient of ln t in the u^0 term.
  cplx ln_t_coefficient;
  int t_power = 0;
};
GammaPrefactorExpansion gamma_prefactor_expansion(int n, double kappa);

struct RenormalizedKernelSet {
  cplx d_minus_half = 0.0;
  std::optional<KappaValue> d_plus_half;
  std::map<Stencil, cplx> dd_plus_half;
  bool kappa_dependent = false;
  double at_point = 0.0;
};

inline constexpr int kResidueExpansionOrder = 12;

/// Renormalized D_{-1/2}, the d_x d_y and d_x d_x stencils of D_{1/2} and optionally D_{1/2} itself.
/// Boundary points are rejected unless allow_boundary is set.
RenormalizedKernelSet renormalized_kernels(const DomainDescriptor& segment, double x, double kappa = 1.0,
                                           bool with_d_plus_half = false, bool allow_boundary = false);

/// D_{-n/2}(x, x) of a segment by the residue route.
cplx segment_dirichlet_residue(const DomainDescriptor& segment, double x, int n);
/// Stencil of D_{-n/2}(x, x) of a segment, read from the modified kernel.
cplx segment_stencil_residue(const DomainDescriptor& segment, double x, const Stencil& st, int n);

}  // namespace zetaren

#endif
