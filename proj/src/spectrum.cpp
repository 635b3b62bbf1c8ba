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

#include "zetaren/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>

namespace zetaren {

const char* bc_name(BoundaryCondition bc) noexcept {
  switch (bc) {
    case BoundaryCondition::Dirichlet: return "dirichlet";
    case BoundaryCondition::DirichletNeumann: return "dirichlet_neumann";
    case BoundaryCondition::Neumann: return "neumann";
    case BoundaryCondition::Periodic: return "periodic";
  }
  return "unknown";
}

BoundaryCondition parse_bc(const std::string& s) {
  if (s == "dirichlet" || s == "D") return BoundaryCondition::Dirichlet;
  if (s == "dirichlet_neumann" || s == "DN") return BoundaryCondition::DirichletNeumann;
  if (s == "neumann" || s == "N") return BoundaryCondition::Neumann;
  if (s == "periodic" || s == "P") return BoundaryCondition::Periodic;
  throw Error(Errc::ConfigError, "unknown boundary condition '" + s + "'");
}

DomainDescriptor DomainDescriptor::segment(double a, BoundaryCondition bc) {
  if (!(a > 0)) throw Error(Errc::NonPositiveLength, "segment length must be positive");
  DomainDescriptor d;
  d.kind = DomainKind::Segment;
  d.a = a;
  d.bc = bc;
  return d;
}

DomainDescriptor DomainDescriptor::free_space(int dim) {
  if (dim < 1) throw Error(Errc::UnsupportedDimension, "dimension must be at least 1");
  DomainDescriptor d;
  d.kind = DomainKind::FreeSpace;
  d.d = dim;
  return d;
}

DomainDescriptor DomainDescriptor::half_space(int dim) {
  if (dim < 1) throw Error(Errc::UnsupportedDimension, "dimension must be at least 1");
  DomainDescriptor d;
  d.kind = DomainKind::HalfSpace;
  d.d = dim;
  return d;
}

DomainDescriptor DomainDescriptor::product(const DomainDescriptor& l, const DomainDescriptor& r) {
  DomainDescriptor d;
  d.kind = DomainKind::Product;
  d.left = std::make_shared<DomainDescriptor>(l);
  d.right = std::make_shared<DomainDescriptor>(r);
  return d;
}

DomainDescriptor DomainDescriptor::slab(const DomainDescriptor& base, int free_dims) {
  if (free_dims < 1) throw Error(Errc::UnsupportedDomain, "slab needs at least one free dimension");
  DomainDescriptor d;
  d.kind = DomainKind::Slab;
  d.left = std::make_shared<DomainDescriptor>(base);
  d.free_dims = free_dims;
  return d;
}

int DomainDescriptor::dimension() const {
  switch (kind) {
    case DomainKind::Segment: return 1;
    case DomainKind::FreeSpace:
    case DomainKind::HalfSpace: return d;
    case DomainKind::Product: return left->dimension() + right->dimension();
    case DomainKind::Slab: return left->dimension() + free_dims;
  }
  return 0;
}

std::string DomainDescriptor::describe() const {
  std::ostringstream os;
  switch (kind) {
    case DomainKind::Segment: os << "segment(a=" << a << ", " << bc_name(bc) << ")"; break;
    case DomainKind::FreeSpace: os << "free_space(" << d << ")"; break;
    case DomainKind::HalfSpace: os << "half_space(" << d << ")"; break;
    case DomainKind::Product: os << "product(" << left->describe() << ", " << right->describe() << ")"; break;
    case DomainKind::Slab: os << "slab(" << left->describe() << ", d2=" << free_dims << ")"; break;
  }
  return os.str();
}

cplx Mode1D::eval(double x, int m) const {
  const double phase = k * x + 0.5 * kPi * m;
  const double km = std::pow(k, m);
  switch (kind) {
    case ModeKind::Sin: return norm * km * std::sin(phase);
    case ModeKind::Cos: return norm * km * std::cos(phase);
    case ModeKind::Exp: return norm * std::pow(cplx(0.0, k), m) * std::exp(cplx(0.0, k * x));
  }
  return 0.0;
}

cplx EigenData::eval_deriv(const Point& x, int axis, int order) const {
  return eval_mixed(x, axis, order, axis, 0);
}

cplx EigenData::eval_mixed(const Point& x, int a1, int o1, int a2, int o2) const {
  cplx v = 1.0;
  for (const auto& f : factors) {
    int m = 0;
    if (f.axis == a1) m += o1;
    if (f.axis == a2) m += o2;
    v *= f.eval(x[f.axis], m);
  }
  return v;
}

struct SpectralModel::Impl {
  DomainDescriptor domain;
  bool zero_removed = false;
  int dim = 1;
  // Product factors (empty for segments).
  std::shared_ptr<const Impl> left, right;

  EigenData segment_eigen(std::size_t k) const {
    const double a = domain.a;
    const double s2a = std::sqrt(2.0 / a);
    EigenData e;
    switch (domain.bc) {
      case BoundaryCondition::Dirichlet: {
        const double n = double(k + 1);
        e.omega = n * kPi / a;
        e.factors.push_back(Mode1D{ModeKind::Sin, e.omega, s2a, 0});
        e.multiplicity_tag = std::to_string(k + 1);
        break;
      }
      case BoundaryCondition::DirichletNeumann: {
        e.omega = (double(k) + 0.5) * kPi / a;
        e.factors.push_back(Mode1D{ModeKind::Sin, e.omega, s2a, 0});
        e.multiplicity_tag = std::to_string(k);
        break;
      }
      case BoundaryCondition::Neumann: {
        e.omega = double(k + 1) * kPi / a;
        e.factors.push_back(Mode1D{ModeKind::Cos, e.omega, s2a, 0});
        e.multiplicity_tag = std::to_string(k + 1);
        break;
      }
      case BoundaryCondition::Periodic: {
        const long long n = (long long)(k / 2 + 1) * (k % 2 ? -1 : 1);
        e.omega = 2.0 * kPi * double(std::llabs(n)) / a;
        e.factors.push_back(Mode1D{ModeKind::Exp, 2.0 * kPi * double(n) / a, 1.0 / std::sqrt(a), 0});
        e.multiplicity_tag = (n > 0 ? "+" : "-") + std::to_string(std::llabs(n));
        break;
      }
    }
    return e;
  }

  std::vector<EigenData> prefix(std::size_t n) const {
    std::vector<EigenData> out;
    out.reserve(n);
    if (!left) {
      for (std::size_t k = 0; k < n; ++k) out.push_back(segment_eigen(k));
      return out;
    }
    const auto L = left->prefix(n);
    const auto R = right->prefix(n);
    using Item = std::tuple<double, std::size_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto push = [&](std::size_t i, std::size_t j) {
      if (i >= L.size() || j >= R.size() || !seen.insert({i, j}).second) return;
      heap.emplace(L[i].omega * L[i].omega + R[j].omega * R[j].omega, i, j);
    };
    push(0, 0);
    while (out.size() < n && !heap.empty()) {
      auto [w2, i, j] = heap.top();
      heap.pop();
      EigenData e;
      e.omega = std::sqrt(w2);
      e.factors = L[i].factors;
      for (auto f : R[j].factors) {
        f.axis += left->dim;
        e.factors.push_back(f);
      }
      e.multiplicity_tag = L[i].multiplicity_tag + "," + R[j].multiplicity_tag;
      out.push_back(std::move(e));
      push(i + 1, j);
      push(i, j + 1);
    }
    return out;
  }
};

SpectralModel SpectralModel::segment(double a, BoundaryCondition bc) {
  auto impl = std::make_shared<Impl>();
  impl->domain = DomainDescriptor::segment(a, bc);
  impl->zero_removed = bc == BoundaryCondition::Neumann || bc == BoundaryCondition::Periodic;
  impl->dim = 1;
  return SpectralModel(impl);
}

SpectralModel SpectralModel::product(const SpectralModel& m1, const SpectralModel& m2) {
  if (m1.dimension() + m2.dimension() > 4)
    throw Error(Errc::UnsupportedDimension, "product models are limited to four dimensions");
  auto impl = std::make_shared<Impl>();
  impl->domain = DomainDescriptor::product(m1.domain(), m2.domain());
  impl->zero_removed = m1.zero_mode_removed() || m2.zero_mode_removed();
  impl->dim = m1.dimension() + m2.dimension();
  impl->left = m1.impl_;
  impl->right = m2.impl_;
  return SpectralModel(impl);
}

int SpectralModel::dimension() const { return impl_->dim; }
bool SpectralModel::zero_mode_removed() const { return impl_->zero_removed; }
const DomainDescriptor& SpectralModel::domain() const { return impl_->domain; }
std::vector<EigenData> SpectralModel::prefix(std::size_t n) const { return impl_->prefix(n); }
EigenData SpectralModel::eigen(std::size_t k) const {
  if (!impl_->left) return impl_->segment_eigen(k);
  return impl_->prefix(k + 1).back();
}

std::vector<double> SpectralModel::omegas(std::size_t n) const {
  std::vector<double> w;
  for (const auto& e : prefix(n)) w.push_back(e.omega);
  return w;
}

double SpectralModel::omega1() const { return eigen(0).omega; }

double SpectralModel::sup_bound() const {
  if (!impl_->left) {
    return impl_->domain.bc == BoundaryCondition::Periodic ? 1.0 / std::sqrt(impl_->domain.a)
                                                            : std::sqrt(2.0 / impl_->domain.a);
  }
  return SpectralModel(impl_->left).sup_bound() * SpectralModel(impl_->right).sup_bound();
}

namespace {

double domain_volume(const DomainDescriptor& d) {
  switch (d.kind) {
    case DomainKind::Segment: return d.a;
    case DomainKind::Product: return domain_volume(*d.left) * domain_volume(*d.right);
    default: return 0.0;
  }
}

}  // namespace

WeylReport weyl_check(const SpectralModel& m, int count) {
  if (count < 50) throw Error(Errc::InsufficientSpectrum, "need at least 50 eigenvalues");
  const auto w = m.omegas(std::size_t(count));
  if (int(w.size()) < count) throw Error(Errc::InsufficientSpectrum, "model has fewer eigenvalues than requested");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int k = count / 2 + 1; k <= count; ++k) {
    const double x = std::log(double(k));
    const double y = std::log(w[k - 1]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  WeylReport r;
  r.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.fitted_constant = std::exp((sy - r.fitted_exponent * sx) / n);
  const int d = m.dimension();
  const double vol = domain_volume(m.domain());
  if (vol > 0)
    r.predicted_constant =
        2.0 * std::sqrt(kPi) * std::pow(boost::math::tgamma(0.5 * d + 1.0), 1.0 / d) * std::pow(vol, -1.0 / d);
  return r;
}

}  // namespace zetaren
