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
 * @file kernels.hpp
 * @brief Heat, cylinder and modified cylinder kernels.
 *
 * A KernelFunction is backed either by a truncated eigenfunction sum over a
 * SpectralModel, by a closed form for a supported domain, or by the product
 * of two heat kernels. Closed forms on segments can be expanded at t = 0
 * into LogLaurentSeries, on and off the diagonal and for derivative stencils.
 */

#ifndef ZETAREN_KERNELS_HPP
#define ZETAREN_KERNELS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "zetaren/laurent.hpp"
#include "zetaren/spectrum.hpp"

namespace zetaren {

enum class KernelKind { Heat, Cylinder, ModifiedCylinder };

const char* kernel_kind_name(KernelKind k) noexcept;

/// Spatial derivative orders p on the x slot and q on the y slot.
struct Stencil {
  int p = 0;
  int q = 0;
  int axis_x = 0;
  int axis_y = 0;

  int order() const { return p + q; }
  std::string name() const;
  bool operator==(const Stencil&) const = default;
  bool operator<(const Stencil& o) const {
    return std::tie(p, q, axis_x, axis_y) < std::tie(o.p, o.q, o.axis_x, o.axis_y);
  }
};

inline const Stencil kNoStencil{};
inline const Stencil kStencilXY{1, 1, 0, 0};
inline const Stencil kStencilXX{2, 0, 0, 0};

class KernelFunction {
 public:
  struct Spectral {
    SpectralModel model;
    double tail_tol;
  };
  struct Closed {
    DomainDescriptor domain;
  };
  struct Product {
    std::shared_ptr<const KernelFunction> first, second;
  };

  static KernelFunction spectral(KernelKind kind, const SpectralModel& model, Stencil st, double tail_tol);
  static KernelFunction closed(KernelKind kind, const DomainDescriptor& domain, Stencil st = {});
  static KernelFunction product(const KernelFunction& k1, const KernelFunction& k2);

  KernelKind kind() const { return kind_; }
  const Stencil& stencil() const { return stencil_; }
  bool is_spectral() const { return std::holds_alternative<Spectral>(backing_); }
  bool is_closed() const { return std::holds_alternative<Closed>(backing_); }
  const Spectral* spectral_backing() const { return std::get_if<Spectral>(&backing_); }
  const Closed* closed_backing() const { return std::get_if<Closed>(&backing_); }
  int dimension() const;

  KernelFunction with_stencil(Stencil st) const;
  KernelFunction with_kind(KernelKind kind) const;

  /// Value at (t; x, y). Complex t with Re t > 0 is accepted by closed-form cylinder kernels.
  cplx operator()(cplx t, const Point& x, const Point& y) const;
  cplx operator()(double t, double x, double y) const { return (*this)(cplx(t), Point{x}, Point{y}); }

  /// Spectral sums only: blocked OpenMP sum and the plain serial reference.
  cplx evaluate_parallel(double t, const Point& x, const Point& y) const;
  cplx evaluate_serial(double t, const Point& x, const Point& y) const;
  /// Number of eigenpairs the tail rule keeps at time t.
  std::size_t terms_needed(double t) const;

 private:
  KernelFunction(KernelKind kind, Stencil st, std::variant<Spectral, Closed, Product> b)
      : kind_(kind), stencil_(st), backing_(std::move(b)) {}
  cplx closed_value(cplx t, const Point& x, const Point& y) const;

  KernelKind kind_;
  Stencil stencil_;
  std::variant<Spectral, Closed, Product> backing_;
};

/// Block length of the deterministic parallel reduction.
inline constexpr std::size_t kSumBlock = 1024;
/// Hard cap on the number of spectral terms.
inline constexpr std::size_t kMaxSpectralTerms = 1000000;

/// Worker count, honoring the ZETAREN_THREADS override.
int worker_count();

KernelFunction spectral_cylinder(const SpectralModel& model, Stencil st, double tail_tol);
KernelFunction closed_form_cylinder(const DomainDescriptor& domain, Stencil st = {});
KernelFunction modified_from_cylinder(const KernelFunction& T);
KernelFunction heat_from_product(const KernelFunction& k1, const KernelFunction& k2);

enum class ExpansionProvenance { ExactClosedForm, SampledFit };

struct KernelExpansion {
  Series series;
  double x = 0.0;
  double y = 0.0;
  Stencil stencil;
  KernelKind kind = KernelKind::Cylinder;
  ExpansionProvenance provenance = ExpansionProvenance::ExactClosedForm;
};

inline constexpr int kMaxExpansionOrder = 16;

/// Diagonal expansion at t -> 0 through order `order` (inclusive).
KernelExpansion expand_at_zero(const KernelFunction& k, double x, int order);
/// Same, at a general point pair and without the public order cap.
KernelExpansion expand_at_zero(const KernelFunction& k, double x, double y, int order, bool capped);

/// Series in h of the segment kernel at t0 + h through h^order (Taylor-mode derivatives).
Series segment_taylor_at(const KernelFunction& k, double t0, double x, double y, int order);

class TraceFunction {
 public:
  static TraceFunction closed(KernelKind kind, const DomainDescriptor& domain);
  static TraceFunction spectral(KernelKind kind, const SpectralModel& model, double tail_tol);
  static TraceFunction product(const TraceFunction& a, const TraceFunction& b);

  KernelKind kind() const { return kind_; }
  cplx operator()(cplx t) const;
  /// Closed segment cylinder traces only.
  Series expand(int order) const;
  /// Closed segment cylinder traces only: series in h at t0 + h.
  Series taylor_at(double t0, int order) const;
  const DomainDescriptor* domain() const { return domain_ ? &*domain_ : nullptr; }

 private:
  KernelKind kind_ = KernelKind::Cylinder;
  std::optional<DomainDescriptor> domain_;
  std::optional<SpectralModel> model_;
  double tail_tol_ = 1e-14;
  std::vector<TraceFunction> factors_;
};

TraceFunction trace_function(const DomainDescriptor& domain, KernelKind kind = KernelKind::Cylinder);
TraceFunction trace_function(const SpectralModel& model, KernelKind kind, double tail_tol);

/// Free-space cylinder kernel from the Green function of the Laplacian in d + 1 dimensions.
cplx greens_route_cylinder(int d, double t, const Point& x, const Point& y);

/// Values at (t; x_i, y_i), parallel over points; order and values independent of worker count.
std::vector<cplx> evaluate_grid(const KernelFunction& k, double t, const std::vector<Point>& xs,
                                const std::vector<Point>& ys);

}  // namespace zetaren

#endif
