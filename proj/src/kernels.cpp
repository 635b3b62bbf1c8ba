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

#include "zetaren/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>

#include <boost/math/special_functions/gamma.hpp>

#include "zetaren/segment_forms.hpp"

namespace zetaren {

const char* kernel_kind_name(KernelKind k) noexcept {
  switch (k) {
    case KernelKind::Heat: return "heat";
    case KernelKind::Cylinder: return "cylinder";
    case KernelKind::ModifiedCylinder: return "modified_cylinder";
  }
  return "unknown";
}

std::string Stencil::name() const {
  std::string s;
  for (int i = 0; i < p; ++i) s += "x" + std::to_string(axis_x);
  for (int i = 0; i < q; ++i) s += "y" + std::to_string(axis_y);
  return s.empty() ? "id" : s;
}

int worker_count() {
  if (const char* env = std::getenv("ZETAREN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

namespace {

constexpr double kBoundaryEps = 1e-9;

double gamma_half(int k) { return boost::math::tgamma(0.5 * k); }

double dist2(const Point& x, const Point& y) {
  double r2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - y[i]) * (x[i] - y[i]);
  return r2;
}

void require_dim(const Point& x, int d) {
  if (int(x.size()) != d) throw Error(Errc::DomainViolation, "point has the wrong dimension");
}

// True when a derivative of the given order vanishes identically at x.
bool vanishes_at_boundary(const DomainDescriptor& dom, double x, int order) {
  if (dom.kind != DomainKind::Segment || order > 1) return false;
  const bool at0 = std::abs(x) < kBoundaryEps;
  const bool ata = std::abs(x - dom.a) < kBoundaryEps;
  if (!at0 && !ata) return false;
  bool dirichlet = false, neumann = false;
  switch (dom.bc) {
    case BoundaryCondition::Dirichlet: dirichlet = true; break;
    case BoundaryCondition::Neumann: neumann = true; break;
    case BoundaryCondition::DirichletNeumann:
      dirichlet = at0;
      neumann = ata;
      break;
    case BoundaryCondition::Periodic: break;
  }
  return (order == 0 && dirichlet) || (order == 1 && neumann);
}

double segment_heat(const DomainDescriptor& dom, double t, double x, double y) {
  const double a = dom.a;
  auto G = [t](double z) { return std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * kPi * t); };
  const double reach = std::sqrt(160.0 * t);
  double sum = 0.0;
  if (dom.bc == BoundaryCondition::Periodic) {
    const int nmax = int(std::ceil(reach / a)) + 2;
    for (int n = -nmax; n <= nmax; ++n) sum += G(x - y + n * a);
    return sum - 1.0 / a;
  }
  const int nmax = int(std::ceil(reach / (2.0 * a))) + 2;
  for (int n = -nmax; n <= nmax; ++n) {
    const double direct = G(x - y + 2.0 * n * a);
    const double image = G(x + y + 2.0 * n * a);
    switch (dom.bc) {
      case BoundaryCondition::Dirichlet: sum += direct - image; break;
      case BoundaryCondition::Neumann: sum += direct + image; break;
      case BoundaryCondition::DirichletNeumann: sum += (n % 2 == 0 ? 1.0 : -1.0) * (direct - image); break;
      default: break;
    }
  }
  return dom.bc == BoundaryCondition::Neumann ? sum - 1.0 / a : sum;
}

cplx segment_cylinder_value(const DomainDescriptor& dom, bool modified, const Stencil& st, cplx t, double x,
                            double y) {
  const double s = tau_scale(dom.bc, dom.a);
  const bool dn = dom.bc == BoundaryCondition::DirichletNeumann;
  const double f = dn ? 0.5 : 1.0;
  const cplx R = reduced_segment_kernel<cplx, cplx>(dom.bc, modified, st.p, st.q, s * t, trig_of(f * s * (x - y)),
                                                    trig_of(f * s * (x + y)));
  return segment_prefactor(dom.bc, modified, dom.a) * std::pow(s, st.order()) * R;
}

cplx free_value(KernelKind kind, int d, cplx t, double r2) {
  const double pd = std::pow(kPi, 0.5 * (d + 1));
  switch (kind) {
    case KernelKind::Heat:
      return std::pow(4.0 * kPi * t, -0.5 * d) * std::exp(-r2 / (4.0 * t));
    case KernelKind::Cylinder:
      return gamma_half(d + 1) / pd * t * std::pow(t * t + r2, -0.5 * (d + 1));
    case KernelKind::ModifiedCylinder:
      if (d < 2) throw Error(Errc::UnsupportedDimension, "modified cylinder kernel is ill-defined for d = 1");
      return gamma_half(d - 1) / (2.0 * pd) * std::pow(t * t + r2, -0.5 * (d - 1));
  }
  return 0.0;
}

// Spectral term weight as a function of omega.
inline cplx spectral_weight(KernelKind kind, double w, cplx t) {
  switch (kind) {
    case KernelKind::Heat: return std::exp(-w * w * t);
    case KernelKind::Cylinder: return std::exp(-w * t);
    case KernelKind::ModifiedCylinder: return std::exp(-w * t) / w;
  }
  return 0.0;
}

inline cplx spectral_term(KernelKind kind, const Stencil& st, const EigenData& e, cplx t, const Point& x,
                          const Point& y) {
  const cplx fx = st.p ? e.eval_deriv(x, st.axis_x, st.p) : e.eval(x);
  const cplx fy = st.q ? e.eval_deriv(y, st.axis_y, st.q) : e.eval(y);
  return spectral_weight(kind, e.omega, t) * fx * std::conj(fy);
}

// Tail rule on the term envelope S^2 omega^g e^{-decay(omega)}.
std::size_t tail_terms(const SpectralModel& model, KernelKind kind, int g, double t, double tol) {
  if (!(t > 0)) throw Error(Errc::NonPositiveTime, "spectral sums need Re t > 0");
  if (kind == KernelKind::ModifiedCylinder) g -= 1;
  auto decay = [&](double w) { return kind == KernelKind::Heat ? w * w * t : w * t; };
  const double S2 = model.sup_bound() * model.sup_bound();
  const double w1 = model.omega1();
  const double log_term0 = std::log(S2) + g * std::log(w1) - decay(w1);
  const double target = log_term0 - std::log(tol) + 5.0;
  // Past the envelope maximum the envelope decreases monotonically.
  const double w_peak = g > 0 ? (kind == KernelKind::Heat ? std::sqrt(g / (2.0 * t)) : g / t) : 0.0;
  std::size_t n = 64;
  while (true) {
    const auto w = model.omegas(std::min(n, kMaxSpectralTerms));
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double drop = decay(w[k]) - decay(w1) - g * std::log(w[k] / w1);
      if (w[k] >= w_peak && drop >= target) return std::max<std::size_t>(k, 1);
    }
    if (n >= kMaxSpectralTerms)
      throw Error(Errc::TailBoundUnreachable, "tail bound needs more than 1e6 terms at t = " + std::to_string(t));
    n *= 4;
  }
}

}  // namespace

KernelFunction KernelFunction::spectral(KernelKind kind, const SpectralModel& model, Stencil st, double tail_tol) {
  if (!(tail_tol > 0)) throw Error(Errc::DomainViolation, "tail tolerance must be positive");
  if (st.order() > 2) throw Error(Errc::UnsupportedStencil, "stencil order above 2");
  return KernelFunction(kind, st, Spectral{model, tail_tol});
}

KernelFunction KernelFunction::closed(KernelKind kind, const DomainDescriptor& domain, Stencil st) {
  if (st.order() > 2) throw Error(Errc::UnsupportedStencil, "stencil order above 2");
  switch (domain.kind) {
    case DomainKind::Segment:
      if (kind == KernelKind::Heat && st.order() != 0)
        throw Error(Errc::UnsupportedStencil, "segment heat closed form has no derivative stencils");
      break;
    case DomainKind::FreeSpace:
    case DomainKind::HalfSpace:
      if (st.order() != 0) throw Error(Errc::UnsupportedStencil, "free and half space forms have no stencils");
      if (kind == KernelKind::ModifiedCylinder && domain.d < 2)
        throw Error(Errc::UnsupportedDimension, "modified cylinder kernel is ill-defined for d = 1");
      break;
    default:
      throw Error(Errc::UnsupportedDomain, "no closed form for " + domain.describe());
  }
  return KernelFunction(kind, st, Closed{domain});
}

KernelFunction KernelFunction::product(const KernelFunction& k1, const KernelFunction& k2) {
  if (k1.kind() != KernelKind::Heat || k2.kind() != KernelKind::Heat)
    throw Error(Errc::KindMismatch, "only heat kernels factorize over products");
  return KernelFunction(KernelKind::Heat, {},
                        Product{std::make_shared<KernelFunction>(k1), std::make_shared<KernelFunction>(k2)});
}

int KernelFunction::dimension() const {
  if (auto s = spectral_backing()) return s->model.dimension();
  if (auto c = closed_backing()) return c->domain.dimension();
  const auto& p = std::get<Product>(backing_);
  return p.first->dimension() + p.second->dimension();
}

KernelFunction KernelFunction::with_stencil(Stencil st) const {
  if (auto s = spectral_backing()) return spectral(kind_, s->model, st, s->tail_tol);
  if (auto c = closed_backing()) return closed(kind_, c->domain, st);
  if (st.order() != 0) throw Error(Errc::UnsupportedStencil, "product kernels have no stencils");
  return *this;
}

KernelFunction KernelFunction::with_kind(KernelKind kind) const {
  if (auto s = spectral_backing()) return spectral(kind, s->model, stencil_, s->tail_tol);
  if (auto c = closed_backing()) return closed(kind, c->domain, stencil_);
  throw Error(Errc::KindMismatch, "product kernels are heat kernels");
}

cplx KernelFunction::closed_value(cplx t, const Point& x, const Point& y) const {
  const auto& dom = std::get<Closed>(backing_).domain;
  require_dim(x, dom.dimension());
  require_dim(y, dom.dimension());
  if (dom.kind == DomainKind::Segment) {
    if (vanishes_at_boundary(dom, x[0], stencil_.p) || vanishes_at_boundary(dom, y[0], stencil_.q)) return 0.0;
    if (kind_ == KernelKind::Heat) return segment_heat(dom, t.real(), x[0], y[0]);
    return segment_cylinder_value(dom, kind_ == KernelKind::ModifiedCylinder, stencil_, t, x[0], y[0]);
  }
  const int d = dom.d;
  const cplx direct = free_value(kind_, d, t, dist2(x, y));
  if (dom.kind == DomainKind::FreeSpace) return direct;
  Point yr = y;
  yr.back() = -yr.back();
  return direct - free_value(kind_, d, t, dist2(x, yr));
}

cplx KernelFunction::operator()(cplx t, const Point& x, const Point& y) const {
  if (!(t.real() > 0)) throw Error(Errc::NonPositiveTime, "kernels are evaluated at Re t > 0");
  if (is_closed()) return closed_value(t, x, y);
  if (is_spectral()) {
    const auto& sb = std::get<Spectral>(backing_);
    require_dim(x, sb.model.dimension());
    require_dim(y, sb.model.dimension());
    if (sb.model.dimension() == 1 &&
        (vanishes_at_boundary(sb.model.domain(), x[0], stencil_.p) ||
         vanishes_at_boundary(sb.model.domain(), y[0], stencil_.q)))
      return 0.0;
    if (t.imag() == 0.0) return evaluate_parallel(t.real(), x, y);
    const auto terms = sb.model.prefix(tail_terms(sb.model, kind_, stencil_.order(), t.real(), sb.tail_tol));
    cplx sum = 0.0;
    for (const auto& e : terms) sum += spectral_term(kind_, stencil_, e, t, x, y);
    return sum;
  }
  const auto& pb = std::get<Product>(backing_);
  const int d1 = pb.first->dimension();
  require_dim(x, dimension());
  require_dim(y, dimension());
  const Point x1(x.begin(), x.begin() + d1), x2(x.begin() + d1, x.end());
  const Point y1(y.begin(), y.begin() + d1), y2(y.begin() + d1, y.end());
  return (*pb.first)(t, x1, y1) * (*pb.second)(t, x2, y2);
}

std::size_t KernelFunction::terms_needed(double t) const {
  const auto* sb = spectral_backing();
  if (!sb) throw Error(Errc::UnsupportedForSpectralBacking, "tail rule applies to spectral sums");
  return tail_terms(sb->model, kind_, stencil_.order(), t, sb->tail_tol);
}

cplx KernelFunction::evaluate_parallel(double t, const Point& x, const Point& y) const {
  const auto& sb = std::get<Spectral>(backing_);
  const auto terms = sb.model.prefix(terms_needed(t));
  const std::size_t n = terms.size();
  const std::size_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<cplx> partial(nblocks, 0.0);
  const Stencil st = stencil_;
  const KernelKind kind = kind_;
#pragma omp parallel for schedule(static) num_threads(worker_count()) if (nblocks > 1)
  for (std::size_t b = 0; b < nblocks; ++b) {
    cplx acc = 0.0;
    const std::size_t hi = std::min(n, (b + 1) * kSumBlock);
    for (std::size_t k = b * kSumBlock; k < hi; ++k) acc += spectral_term(kind, st, terms[k], t, x, y);
    partial[b] = acc;
  }
  cplx sum = 0.0;
  for (const auto& p : partial) sum += p;
  return sum;
}

cplx KernelFunction::evaluate_serial(double t, const Point& x, const Point& y) const {
  const auto& sb = std::get<Spectral>(backing_);
  const auto terms = sb.model.prefix(terms_needed(t));
  cplx sum = 0.0;
  for (const auto& e : terms) sum += spectral_term(kind_, stencil_, e, t, x, y);
  return sum;
}

KernelFunction spectral_cylinder(const SpectralModel& model, Stencil st, double tail_tol) {
  return KernelFunction::spectral(KernelKind::Cylinder, model, st, tail_tol);
}

KernelFunction closed_form_cylinder(const DomainDescriptor& domain, Stencil st) {
  return KernelFunction::closed(KernelKind::Cylinder, domain, st);
}

KernelFunction modified_from_cylinder(const KernelFunction& T) {
  if (T.is_spectral())
    throw Error(Errc::UnsupportedForSpectralBacking, "the modified kernel is built from closed forms only");
  if (T.kind() != KernelKind::Cylinder) throw Error(Errc::KindMismatch, "expected a cylinder kernel");
  return T.with_kind(KernelKind::ModifiedCylinder);
}

KernelFunction heat_from_product(const KernelFunction& k1, const KernelFunction& k2) {
  return KernelFunction::product(k1, k2);
}

namespace {

Series segment_series(const DomainDescriptor& dom, KernelKind kind, const Stencil& st, double x, double y,
                      int order) {
  const double s = tau_scale(dom.bc, dom.a);
  const bool dn = dom.bc == BoundaryCondition::DirichletNeumann;
  const double f = dn ? 0.5 : 1.0;
  const bool modified = kind == KernelKind::ModifiedCylinder;
  const cplx pref = segment_prefactor(dom.bc, modified, dom.a) * std::pow(s, st.order());
  for (int extra = 4; extra <= 64; extra += 4) {
    const Series tau = Series::with_truncation(1, {cplx(s)}, {}, order + 1 + extra);
    const Series R = reduced_segment_kernel<Series, cplx>(dom.bc, modified, st.p, st.q, tau,
                                                          trig_of(f * s * (x - y)), trig_of(f * s * (x + y)));
    if (R.truncation_order() >= order + 1) return (R * pref).truncated(order + 1);
  }
  throw Error(Errc::SeriesDomainViolation, "expansion window could not be reached");
}

}  // namespace

KernelExpansion expand_at_zero(const KernelFunction& k, double x, double y, int order, bool capped) {
  if (capped && order > kMaxExpansionOrder)
    throw Error(Errc::SeriesDomainViolation, "expansion order above " + std::to_string(kMaxExpansionOrder));
  if (k.stencil().order() > 2) throw Error(Errc::UnsupportedStencil, "stencil order above 2");
  const auto* cb = k.closed_backing();
  if (!cb) throw Error(Errc::UnsupportedForSpectralBacking, "expansions need a closed form");
  const auto& dom = cb->domain;
  KernelExpansion ex;
  ex.x = x;
  ex.y = y;
  ex.stencil = k.stencil();
  ex.kind = k.kind();
  if (dom.kind == DomainKind::Segment) {
    if (k.kind() == KernelKind::Heat)
      throw Error(Errc::SeriesDomainViolation, "segment heat kernels expand in half-integer powers");
    ex.series = segment_series(dom, k.kind(), k.stencil(), x, y, order);
    return ex;
  }
  if (dom.kind == DomainKind::FreeSpace) {
    if (x != y) throw Error(Errc::SeriesDomainViolation, "free-space expansions are diagonal only");
    const int d = dom.d;
    const double pd = std::pow(kPi, 0.5 * (d + 1));
    switch (k.kind()) {
      case KernelKind::Cylinder:
        ex.series = Series::monomial(gamma_half(d + 1) / pd, -d);
        break;
      case KernelKind::ModifiedCylinder:
        ex.series = Series::monomial(gamma_half(d - 1) / (2.0 * pd), -(d - 1));
        break;
      case KernelKind::Heat:
        if (d % 2) throw Error(Errc::SeriesDomainViolation, "odd-dimensional heat kernels have half powers");
        ex.series = Series::monomial(std::pow(4.0 * kPi, -0.5 * d), -d / 2);
        break;
    }
    return ex;
  }
  throw Error(Errc::SeriesDomainViolation, "no expansion for " + dom.describe());
}

KernelExpansion expand_at_zero(const KernelFunction& k, double x, int order) {
  return expand_at_zero(k, x, x, order, true);
}

Series segment_taylor_at(const KernelFunction& k, double t0, double x, double y, int order) {
  const auto* cb = k.closed_backing();
  if (!cb || cb->domain.kind != DomainKind::Segment || k.kind() == KernelKind::Heat)
    throw Error(Errc::UnsupportedDomain, "Taylor-mode evaluation needs a segment cylinder closed form");
  const auto& dom = cb->domain;
  const double s = tau_scale(dom.bc, dom.a);
  const double f = dom.bc == BoundaryCondition::DirichletNeumann ? 0.5 : 1.0;
  const bool modified = k.kind() == KernelKind::ModifiedCylinder;
  const Stencil& st = k.stencil();
  const cplx pref = segment_prefactor(dom.bc, modified, dom.a) * std::pow(s, st.order());
  const Series tau = Series::with_truncation(0, {cplx(s * t0), cplx(s)}, {}, order + 1);
  const Series R = reduced_segment_kernel<Series, cplx>(dom.bc, modified, st.p, st.q, tau, trig_of(f * s * (x - y)),
                                                        trig_of(f * s * (x + y)));
  return R * pref;
}

TraceFunction TraceFunction::closed(KernelKind kind, const DomainDescriptor& domain) {
  if (domain.kind != DomainKind::Segment || kind != KernelKind::Cylinder)
    throw Error(Errc::UnsupportedDomain, "closed traces exist for segment cylinder kernels");
  TraceFunction f;
  f.kind_ = kind;
  f.domain_ = domain;
  return f;
}

TraceFunction TraceFunction::spectral(KernelKind kind, const SpectralModel& model, double tail_tol) {
  TraceFunction f;
  f.kind_ = kind;
  f.model_ = model;
  f.tail_tol_ = tail_tol;
  return f;
}

TraceFunction TraceFunction::product(const TraceFunction& a, const TraceFunction& b) {
  if (a.kind() != KernelKind::Heat || b.kind() != KernelKind::Heat)
    throw Error(Errc::KindMismatch, "only heat traces factorize over products");
  TraceFunction f;
  f.kind_ = KernelKind::Heat;
  f.factors_ = {a, b};
  return f;
}

cplx TraceFunction::operator()(cplx t) const {
  if (!(t.real() > 0)) throw Error(Errc::NonPositiveTime, "traces are evaluated at Re t > 0");
  if (!factors_.empty()) return factors_[0](t) * factors_[1](t);
  if (domain_) {
    const double s = tau_scale(domain_->bc, domain_->a);
    return reduced_segment_trace<cplx>(domain_->bc, s * t);
  }
  // Unit sup bound: the trace has |F_k|^2 integrated to one.
  const SpectralModel& m = *model_;
  const auto w1 = m.omega1();
  const double decay1 = kind_ == KernelKind::Heat ? w1 * w1 * t.real() : w1 * t.real();
  const double target = -decay1 - std::log(tail_tol_) + 5.0;
  std::size_t n = 64;
  std::vector<double> w;
  std::size_t cut = 0;
  while (cut == 0) {
    w = m.omegas(std::min(n, kMaxSpectralTerms));
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double dk = kind_ == KernelKind::Heat ? w[k] * w[k] * t.real() : w[k] * t.real();
      if (dk - decay1 >= target) {
        cut = std::max<std::size_t>(k, 1);
        break;
      }
    }
    if (cut == 0 && n >= kMaxSpectralTerms) throw Error(Errc::TailBoundUnreachable, "trace tail");
    n *= 4;
  }
  cplx sum = 0.0;
  for (std::size_t k = 0; k < cut; ++k) sum += spectral_weight(kind_, w[k], t);
  return sum;
}

Series TraceFunction::expand(int order) const {
  if (!domain_) throw Error(Errc::SeriesDomainViolation, "trace expansions need a closed segment trace");
  const double s = tau_scale(domain_->bc, domain_->a);
  for (int extra = 4; extra <= 64; extra += 4) {
    const Series tau = Series::with_truncation(1, {cplx(s)}, {}, order + 1 + extra);
    const Series R = reduced_segment_trace(domain_->bc, tau);
    if (R.truncation_order() >= order + 1) return R.truncated(order + 1);
  }
  throw Error(Errc::SeriesDomainViolation, "expansion window could not be reached");
}

Series TraceFunction::taylor_at(double t0, int order) const {
  if (!domain_) throw Error(Errc::SeriesDomainViolation, "Taylor mode needs a closed segment trace");
  const double s = tau_scale(domain_->bc, domain_->a);
  const Series tau = Series::with_truncation(0, {cplx(s * t0), cplx(s)}, {}, order + 1);
  return reduced_segment_trace(domain_->bc, tau);
}

TraceFunction trace_function(const DomainDescriptor& domain, KernelKind kind) {
  if (domain.kind == DomainKind::Segment) {
    if (kind == KernelKind::Cylinder) return TraceFunction::closed(kind, domain);
    return TraceFunction::spectral(kind, SpectralModel::segment(domain.a, domain.bc), 1e-15);
  }
  if (domain.kind == DomainKind::Product && kind == KernelKind::Heat)
    return TraceFunction::product(trace_function(*domain.left, kind), trace_function(*domain.right, kind));
  throw Error(Errc::UnsupportedDomain, "no trace for " + domain.describe());
}

TraceFunction trace_function(const SpectralModel& model, KernelKind kind, double tail_tol) {
  return TraceFunction::spectral(kind, model, tail_tol);
}

namespace {

// First-order dual number a + b e, e^2 = 0.
struct Dual {
  double v, d;
  friend Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
};
Dual pow(Dual a, double e) { return {std::pow(a.v, e), e * std::pow(a.v, e - 1.0) * a.d}; }
Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }

}  // namespace

cplx greens_route_cylinder(int d, double t, const Point& x, const Point& y) {
  if (d < 1) throw Error(Errc::UnsupportedDimension, "dimension must be at least 1");
  require_dim(x, d);
  require_dim(y, d);
  const double r2 = dist2(x, y);
  // Green function of the Laplacian in d + 1 dimensions as a function of R^2.
  auto G0 = [d](Dual R2) -> Dual {
    if (d == 1) return Dual{-1.0 / (4.0 * kPi), 0.0} * log(R2);
    const double c = gamma_half(d + 1) / ((d - 1) * 2.0 * std::pow(kPi, 0.5 * (d + 1)));
    return Dual{c, 0.0} * pow(R2, -0.5 * (d - 1));
  };
  const Dual tp{0.0, 1.0};
  const Dual T{t, 0.0}, R{r2, 0.0};
  const Dual minus = T - tp, plus = T + tp;
  const Dual g = G0(minus * minus + R) - G0(plus * plus + R);
  return g.d;
}

std::vector<cplx> evaluate_grid(const KernelFunction& k, double t, const std::vector<Point>& xs,
                                const std::vector<Point>& ys) {
  if (xs.size() != ys.size()) throw Error(Errc::DomainViolation, "grid point lists differ in length");
  std::vector<cplx> out(xs.size());
  const long n = long(xs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = k(cplx(t), xs[i], ys[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace zetaren
