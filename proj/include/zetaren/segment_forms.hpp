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
 * @file segment_forms.hpp
 * @brief Closed forms of the segment cylinder kernels, generic in the scalar.
 *
 * All four boundary conditions reduce to a few cores in a reduced time tau
 * and a spatial angle theta:
 *
 *   Phi(theta)    = sinh(tau)/(cosh(tau) - cos(theta)) - 1
 *   Lambda(theta) = ln(1 - 2 e^{-tau} cos(theta) + e^{-2 tau})
 *   Psi(theta)    = Re 1/(2 sinh((tau - i theta)/2))
 *   M(theta)      = ln((cosh(tau/2) + cos(theta/2))/(cosh(tau/2) - cos(theta/2)))
 *
 * written with expm1/sinh^2 so that no difference of nearly equal numbers
 * appears at small tau. Spatial derivatives act on theta and are carried
 * by second-order jets. The scalar S can be a complex number, a series in t
 * (expansion at t = 0), a series in a time offset (Taylor-mode
 * derivatives) or a rational series (exact mode).
 */

#ifndef ZETAREN_SEGMENT_FORMS_HPP
#define ZETAREN_SEGMENT_FORMS_HPP

#include <cmath>
#include <complex>

#include "zetaren/jet.hpp"
#include "zetaren/laurent.hpp"
#include "zetaren/special.hpp"

namespace zetaren {

enum class BoundaryCondition { Dirichlet, DirichletNeumann, Neumann, Periodic };

const char* bc_name(BoundaryCondition bc) noexcept;
BoundaryCondition parse_bc(const std::string& s);

/// cos and sin of an angle, in the coefficient field C.
template <class C>
struct Trig {
  C cos;
  C sin;
};

inline Trig<cplx> trig_of(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Exact trigonometric values of pi*r; r must be a multiple of 1/2.
inline Trig<Rational> exact_trig_of_pi(const Rational& r) {
  const Rational twice = 2 * r;
  if (boost::multiprecision::denominator(twice) != 1)
    throw Error(Errc::DomainViolation, "angle is not a multiple of pi/2");
  const long long m = ((static_cast<long long>(boost::multiprecision::numerator(twice)) % 4) + 4) % 4;
  static const int cs[4] = {1, 0, -1, 0};
  static const int sn[4] = {0, 1, 0, -1};
  return {Rational(cs[m]), Rational(sn[m])};
}

namespace forms {

template <class S>
using ScalarOf = typename S::value_type;

// Pieces of tau shared by all cores.
template <class S>
struct TauParts {
  S E;   // 1 - e^{-tau}
  S Sh;  // sinh^2(tau/2)
  S q;   // e^{-tau}
};

template <class S>
TauParts<S> tau_parts(const S& tau) {
  using std::exp;
  using std::sinh;
  const S half = tau * ScalarOf<S>(0.5);
  const S sh = sinh(half);
  const S E = -expm1(-tau);
  return {E, sh * sh, exp(-tau)};
}

/// Jet of (1 - cos theta)/2 around theta0.
template <class S, class C>
Jet<S> w_jet(const Trig<C>& th) {
  return {{lift<S>(C((C(1) - th.cos) / C(2))), lift<S>(C(th.sin / C(2))), lift<S>(C(th.cos / C(4)))}};
}

template <class S, class C>
Jet<S> const_jet(const S& s) {
  const S z = lift<S>(C(0));
  return {{s, z, z}};
}

/// k-th theta-derivative of Phi.
template <class S, class C>
S phi(const TauParts<S>& tp, const Trig<C>& th, int k) {
  const Jet<S> w = w_jet<S>(th);
  const Jet<S> num = const_jet<S, C>(tp.E) - lift<S>(C(2)) * w;
  const Jet<S> den = lift<S>(C(2)) * (const_jet<S, C>(tp.Sh) + w);
  return (num / den).derivative(k);
}

/// k-th theta-derivative of Lambda. k = 0 needs a logarithm.
template <class S, class C>
S lambda(const TauParts<S>& tp, const Trig<C>& th, int k) {
  using std::log;
  if (k == 0) {
    const C w0 = (C(1) - th.cos) / C(2);
    return log(S(tp.E * tp.E + tp.q * lift<S>(C(C(4) * w0))));
  }
  const Jet<S> w = w_jet<S>(th);
  const Jet<S> s{{lift<S>(th.sin), lift<S>(th.cos), lift<S>(C(-th.sin / C(2)))}};
  const Jet<S> num = (tp.q * lift<S>(C(2))) * s;
  const Jet<S> den = const_jet<S, C>(S(tp.E * tp.E)) + S(tp.q * lift<S>(C(4))) * w;
  return (num / den).derivative(k - 1);
}

// Half-angle data: h = (cos(theta/2), sin(theta/2)).
template <class S, class C>
Jet<S> w_jet_half(const Trig<C>& h) {
  const C c = h.cos * h.cos - h.sin * h.sin;
  const C s = C(2) * h.sin * h.cos;
  return w_jet<S>(Trig<C>{c, s});
}

/// k-th theta-derivative of Psi; h holds the half-angle trig values.
template <class S, class C>
S psi(const S& tau, const TauParts<S>& tp, const Trig<C>& h, int k) {
  using std::sinh;
  const S sh = sinh(tau * ScalarOf<S>(0.5));
  const Jet<S> c{{lift<S>(h.cos), lift<S>(C(-h.sin / C(2))), lift<S>(C(-h.cos / C(8)))}};
  const Jet<S> den = lift<S>(C(2)) * (const_jet<S, C>(tp.Sh) + w_jet_half<S>(h));
  return (sh * c / den).derivative(k);
}

/// k-th theta-derivative of M; h holds the half-angle trig values.
template <class S, class C>
S modified_dn(const S& tau, const TauParts<S>& tp, const Trig<C>& h, int k) {
  using std::cosh;
  using std::log;
  const S ch = cosh(tau * ScalarOf<S>(0.5));
  if (k == 0) {
    using std::sinh;
    // cosh(tau/2) - 1 = 2 sinh^2(tau/4)
    const S s4 = sinh(tau * ScalarOf<S>(0.25));
    const S upper = ch + lift<S>(h.cos);
    const S lower = s4 * s4 * ScalarOf<S>(2) + lift<S>(C(C(1) - h.cos));
    return log(upper) - log(lower);
  }
  const Jet<S> dc{{lift<S>(C(-h.sin / C(2))), lift<S>(C(-h.cos / C(4))), lift<S>(C(h.sin / C(16)))}};
  const Jet<S> den = const_jet<S, C>(tp.Sh) + w_jet_half<S>(h);
  return (S(ch * lift<S>(C(2))) * dc / den).derivative(k - 1);
}

}  // namespace forms

/// Scale of the reduced time: tau = scale * t.
inline double tau_scale(BoundaryCondition bc, double a) {
  return (bc == BoundaryCondition::Periodic ? 2.0 : 1.0) * kPi / a;
}

/**
 * Reduced segment kernel R. With n = p + q and s = tau_scale:
 *
 *   cylinder:  T  = c_T  s^{n} R,  c_T = s/(2 pi) (D, N, P), s/pi (DN)
 *   modified:  T~ = c_M  s^{n} R,  c_M = -1/(2 pi) (D, N, P), 1/(2 pi) (DN)
 *
 * th_minus and th_plus are the trig data of s(x - y) and s(x + y); for DN
 * they are the half angles s(x -+ y)/2. th_plus is ignored for periodic.
 */
template <class S, class C>
S reduced_segment_kernel(BoundaryCondition bc, bool modified, int p, int q, const S& tau,
                         const Trig<C>& th_minus, const Trig<C>& th_plus) {
  const int n = p + q;
  const auto tp = forms::tau_parts(tau);
  const C sgn = (q % 2 == 0) ? C(1) : C(-1);
  auto core = [&](const Trig<C>& th) -> S {
    switch (bc) {
      case BoundaryCondition::DirichletNeumann:
        return modified ? forms::modified_dn(tau, tp, th, n) : forms::psi(tau, tp, th, n);
      default:
        return modified ? forms::lambda(tp, th, n) : forms::phi(tp, th, n);
    }
  };
  const S minus = core(th_minus) * lift<S>(sgn);
  if (bc == BoundaryCondition::Periodic) return minus;
  const S plus = core(th_plus);
  return bc == BoundaryCondition::Neumann ? S(minus + plus) : S(minus - plus);
}

/// Prefactor c_T or c_M of reduced_segment_kernel, without the s^n factor.
inline double segment_prefactor(BoundaryCondition bc, bool modified, double a) {
  const double s = tau_scale(bc, a);
  const bool dn = bc == BoundaryCondition::DirichletNeumann;
  if (modified) return dn ? 1.0 / (2.0 * kPi) : -1.0 / (2.0 * kPi);
  return dn ? s / kPi : s / (2.0 * kPi);
}

/// Reduced cylinder trace; the trace is R itself.
template <class S>
S reduced_segment_trace(BoundaryCondition bc, const S& tau) {
  using std::sinh;
  using V = forms::ScalarOf<S>;
  switch (bc) {
    case BoundaryCondition::DirichletNeumann:
      return recip(S(sinh(tau * V(0.5)) * V(2)));
    case BoundaryCondition::Periodic:
      return recip(expm1(tau)) * V(2);
    default:
      return recip(expm1(tau));
  }
}

}  // namespace zetaren

#endif
