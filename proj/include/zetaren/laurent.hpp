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
 * @file laurent.hpp
 * @brief Truncated Laurent series in t with a single ln t channel.
 *
 * A series stores  sum_k c_k t^k + sum_k g_k t^k ln t  for k in
 * [min_order, truncation_order). Everything at or above truncation_order
 * is unknown. A truncation order equal to kExactOrder marks an exact
 * polynomial (no unknown tail); such series may be shorter than their
 * window and are padded with exact zeros.
 *
 * The coefficient field is a template parameter: std::complex<double> for
 * numerical work, boost::multiprecision::cpp_rational for exact work.
 */

#ifndef ZETAREN_LAURENT_HPP
#define ZETAREN_LAURENT_HPP

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "zetaren/error.hpp"

namespace zetaren {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;
inline constexpr int kDefaultSeriesLength = 12;
inline constexpr double kLeadingZeroTol = 1e-14;

template <class T>
struct CoeffTraits;

template <>
struct CoeffTraits<std::complex<double>> {
  using T = std::complex<double>;
  static constexpr bool exact = false;
  static double magnitude(const T& c) { return std::abs(c); }
  static T from_int(long long n) { return double(n); }
  static T exp(const T& c) { return std::exp(c); }
  static T cos(const T& c) { return std::cos(c); }
  static T sin(const T& c) { return std::sin(c); }
  static T cosh(const T& c) { return std::cosh(c); }
  static T sinh(const T& c) { return std::sinh(c); }
  static T log(const T& c) { return std::log(c); }
  static std::complex<double> to_complex(const T& c) { return c; }
};

template <>
struct CoeffTraits<Rational> {
  using T = Rational;
  static constexpr bool exact = true;
  static double magnitude(const T& c) { return boost::multiprecision::abs(c).convert_to<double>(); }
  static T from_int(long long n) { return T(n); }
  // Exact mode only supports elementary functions at the origin.
  static T exp(const T& c) { return at_zero(c, 1); }
  static T cos(const T& c) { return at_zero(c, 1); }
  static T sin(const T& c) { return at_zero(c, 0); }
  static T cosh(const T& c) { return at_zero(c, 1); }
  static T sinh(const T& c) { return at_zero(c, 0); }
  static T log(const T& c) {
    if (c != 1) throw Error(Errc::DomainViolation, "logarithm of a rational other than 1");
    return T(0);
  }
  static std::complex<double> to_complex(const T& c) { return c.convert_to<double>(); }

 private:
  static T at_zero(const T& c, int value) {
    if (c != 0) throw Error(Errc::DomainViolation, "transcendental value of a nonzero rational");
    return T(value);
  }
};

enum class ElementaryFn { Exp, Log1p, Sin, Cos, Sinh, Cosh };

template <class T>
class LogLaurentSeries {
  using Tr = CoeffTraits<T>;

 public:
  using value_type = T;

  /// Exact zero.
  LogLaurentSeries() = default;

  static LogLaurentSeries zero(int truncation_order = kExactOrder) {
    LogLaurentSeries s;
    s.trunc_ = truncation_order;
    if (truncation_order != kExactOrder) s.min_ = truncation_order;
    return s;
  }

  static LogLaurentSeries constant(const T& c, int truncation_order = kExactOrder) {
    return monomial(c, 0, truncation_order);
  }

  static LogLaurentSeries monomial(const T& c, int k, int truncation_order = kExactOrder) {
    if (truncation_order != kExactOrder && k >= truncation_order) return zero(truncation_order);
    LogLaurentSeries s;
    s.min_ = k;
    s.trunc_ = truncation_order;
    const int len = truncation_order == kExactOrder ? 1 : truncation_order - k;
    s.plain_.assign(len, T(0));
    s.log_.assign(len, T(0));
    s.plain_[0] = c;
    s.normalize();
    return s;
  }

  /// Window [min_order, min_order + plain.size()) is fully known.
  static LogLaurentSeries from_coeffs(int min_order, std::vector<T> plain, std::vector<T> logs = {}) {
    const int trunc = min_order + int(plain.size());
    return with_truncation(min_order, std::move(plain), std::move(logs), trunc);
  }

  /// Exact polynomial (Laurent) with the given coefficients.
  static LogLaurentSeries polynomial(int min_order, std::vector<T> plain, std::vector<T> logs = {}) {
    return with_truncation(min_order, std::move(plain), std::move(logs), kExactOrder);
  }

  static LogLaurentSeries with_truncation(int min_order, std::vector<T> plain, std::vector<T> logs,
                                          int truncation_order) {
    if (logs.empty()) logs.assign(plain.size(), T(0));
    if (logs.size() != plain.size())
      throw Error(Errc::DomainViolation, "plain and log coefficient lists differ in length");
    LogLaurentSeries s;
    s.min_ = min_order;
    s.trunc_ = truncation_order;
    s.plain_ = std::move(plain);
    s.log_ = std::move(logs);
    if (truncation_order != kExactOrder) {
      const int len = std::max(0, truncation_order - min_order);
      s.plain_.resize(len, T(0));
      s.log_.resize(len, T(0));
    }
    s.normalize();
    return s;
  }

  int min_order() const { return min_; }
  int truncation_order() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExactOrder; }
  int length() const { return int(plain_.size()); }
  const std::vector<T>& plain_coeffs() const { return plain_; }
  const std::vector<T>& log_coeffs() const { return log_; }

  bool is_zero() const {
    for (size_t i = 0; i < plain_.size(); ++i)
      if (plain_[i] != T(0) || log_[i] != T(0)) return false;
    return true;
  }
  bool is_exact_zero() const { return is_exact() && is_zero(); }

  bool has_log() const {
    for (const auto& g : log_)
      if (g != T(0)) return true;
    return false;
  }

  bool represents(int k) const { return k < trunc_; }

  /// Plain coefficient of t^k; zero below the window.
  T coeff(int k) const {
    if (k >= trunc_) throw Error(Errc::OrderNotRepresented, "order " + std::to_string(k));
    if (k < min_ || k >= min_ + length()) return T(0);
    return plain_[k - min_];
  }

  T log_coeff(int k) const {
    if (k >= trunc_) throw Error(Errc::OrderNotRepresented, "order " + std::to_string(k));
    if (k < min_ || k >= min_ + length()) return T(0);
    return log_[k - min_];
  }

  /// Coefficient of t^{-1}; the residue at t = 0 of the meromorphic part.
  T residue() const {
    if (!represents(-1)) throw Error(Errc::OrderNotRepresented, "order -1 lies above the truncation");
    if (log_coeff(-1) != T(0)) throw Error(Errc::LogAtResidueOrder, "t^-1 ln t term present");
    return coeff(-1);
  }

  /// Multiply by t^m.
  LogLaurentSeries shifted(int m) const {
    LogLaurentSeries s = *this;
    s.min_ += m;
    if (!is_exact()) s.trunc_ += m;
    return s;
  }

  LogLaurentSeries truncated(int truncation_order) const {
    if (truncation_order >= trunc_) return *this;
    std::vector<T> p, g;
    for (int k = min_; k < std::min(truncation_order, min_ + length()); ++k) {
      p.push_back(plain_[k - min_]);
      g.push_back(log_[k - min_]);
    }
    return with_truncation(min_, std::move(p), std::move(g), truncation_order);
  }

  /// d/dt, using d(t^k ln t) = k t^{k-1} ln t + t^{k-1}.
  LogLaurentSeries derivative() const {
    std::vector<T> p(length()), g(length());
    for (int i = 0; i < length(); ++i) {
      const T k = Tr::from_int(min_ + i);
      p[i] = k * plain_[i] + log_[i];
      g[i] = k * log_[i];
    }
    return with_truncation(min_ - 1, std::move(p), std::move(g), is_exact() ? kExactOrder : trunc_ - 1);
  }

  /// Sum of the represented terms at complex t (principal ln t).
  std::complex<double> evaluate(std::complex<double> t) const {
    std::complex<double> acc = 0.0;
    const std::complex<double> lt = std::log(t);
    for (int i = length() - 1; i >= 0; --i) {
      acc = acc * t + Tr::to_complex(plain_[i]) + Tr::to_complex(log_[i]) * lt;
    }
    return acc * std::pow(t, min_);
  }

  /// Index of the first coefficient that is not negligible (plain part only).
  int leading_order() const {
    double scale = 0.0;
    for (const auto& c : plain_) scale = std::max(scale, Tr::magnitude(c));
    for (int i = 0; i < length(); ++i) {
      if (Tr::exact ? plain_[i] != T(0) : Tr::magnitude(plain_[i]) >= kLeadingZeroTol * scale && scale > 0)
        return min_ + i;
    }
    throw Error(Errc::ZeroLeadingCoefficient, "series has no nonzero coefficient in its window");
  }

  LogLaurentSeries operator-() const {
    LogLaurentSeries s = *this;
    for (auto& c : s.plain_) c = -c;
    for (auto& c : s.log_) c = -c;
    return s;
  }

  LogLaurentSeries& operator*=(const T& c) {
    if (c == T(0) && is_exact()) return *this = LogLaurentSeries();
    for (auto& v : plain_) v *= c;
    for (auto& v : log_) v *= c;
    if (c == T(0)) normalize();
    return *this;
  }

  LogLaurentSeries& operator+=(const T& c) {
    if (0 >= trunc_ || c == T(0)) return *this;
    std::vector<T> p, g;
    const int lo = std::min(min_, 0);
    const int hi = is_exact() ? std::max(min_ + length(), 1) : trunc_;
    p.assign(hi - lo, T(0));
    g.assign(hi - lo, T(0));
    for (int i = 0; i < length(); ++i) {
      p[min_ + i - lo] = plain_[i];
      g[min_ + i - lo] = log_[i];
    }
    p[-lo] += c;
    return *this = with_truncation(lo, std::move(p), std::move(g), trunc_);
  }

  friend LogLaurentSeries operator+(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    return combine(a, b, T(1));
  }
  friend LogLaurentSeries operator-(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    return combine(a, b, T(-1));
  }

  friend LogLaurentSeries operator*(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return LogLaurentSeries();
    const bool la = a.has_log(), lb = b.has_log();
    if (la && lb) throw Error(Errc::BothLogBearing, "product would need ln^2 t");
    const int m = a.min_ + b.min_;
    int trunc;
    if (a.is_exact() && b.is_exact())
      trunc = kExactOrder;
    else if (a.is_exact())
      trunc = b.trunc_ + a.min_;
    else if (b.is_exact())
      trunc = a.trunc_ + b.min_;
    else
      trunc = std::min(a.trunc_ + b.min_, b.trunc_ + a.min_);
    int len;
    if (trunc == kExactOrder)
      len = std::max(0, a.length() + b.length() - 1);
    else
      len = std::max(0, trunc - m);
    std::vector<T> p(len, T(0)), g(len, T(0));
    for (int i = 0; i < a.length(); ++i) {
      if (i >= len) break;
      const T& ai = a.plain_[i];
      const T& gi = a.log_[i];
      const int jmax = std::min(b.length(), len - i);
      for (int j = 0; j < jmax; ++j) {
        p[i + j] += ai * b.plain_[j];
        if (lb) g[i + j] += ai * b.log_[j];
        if (la) g[i + j] += gi * b.plain_[j];
      }
    }
    return with_truncation(m, std::move(p), std::move(g), trunc);
  }

  friend LogLaurentSeries operator*(LogLaurentSeries a, const T& c) { return a *= c; }
  friend LogLaurentSeries operator*(const T& c, LogLaurentSeries a) { return a *= c; }
  friend LogLaurentSeries operator+(LogLaurentSeries a, const T& c) { return a += c; }
  friend LogLaurentSeries operator+(const T& c, LogLaurentSeries a) { return a += c; }
  friend LogLaurentSeries operator-(LogLaurentSeries a, const T& c) { return a += -c; }
  friend LogLaurentSeries operator-(const T& c, const LogLaurentSeries& a) { return (-a) += c; }

  friend LogLaurentSeries operator/(const LogLaurentSeries& a, const LogLaurentSeries& b) {
    return a * invert(b);
  }
  friend LogLaurentSeries operator/(const T& c, const LogLaurentSeries& b) { return invert(b) *= c; }
  friend LogLaurentSeries operator/(LogLaurentSeries a, const T& c) { return a *= T(1) / c; }

  /// Multiplicative inverse. Exact inputs are expanded to `length` terms.
  friend LogLaurentSeries invert(const LogLaurentSeries& a, int length = kDefaultSeriesLength) {
    if (a.has_log()) throw Error(Errc::LogBearingInput, "cannot invert a log-bearing series");
    const int k0 = a.leading_order();
    const T a0 = a.coeff(k0);
    const int L = a.is_exact() ? length : a.trunc_ - k0;
    std::vector<T> b(L, T(0));
    b[0] = T(1) / a0;
    for (int n = 1; n < L; ++n) {
      T acc(0);
      for (int j = 1; j <= n; ++j) {
        const int k = k0 + j;
        if (k >= a.min_ + a.length()) break;
        acc += a.plain_[k - a.min_] * b[n - j];
      }
      b[n] = -acc / a0;
    }
    return from_coeffs(-k0, std::move(b));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "LogLaurentSeries[min=" << min_ << ", trunc=" << (is_exact() ? std::string("exact") : std::to_string(trunc_))
       << "]{";
    for (int i = 0; i < length(); ++i) {
      os << (i ? ", " : "") << "t^" << (min_ + i) << ": " << plain_[i];
      if (log_[i] != T(0)) os << " + ln(t)*" << log_[i];
    }
    os << "}";
    return os.str();
  }

 private:
  static LogLaurentSeries combine(const LogLaurentSeries& a, const LogLaurentSeries& b, const T& sign) {
    if (b.is_exact_zero()) return a;
    if (a.is_exact_zero()) return sign == T(1) ? b : -b;
    const int trunc = std::min(a.trunc_, b.trunc_);
    const int m = std::min(a.min_, b.min_);
    const int end = trunc == kExactOrder ? std::max(a.min_ + a.length(), b.min_ + b.length()) : trunc;
    const int len = std::max(0, end - m);
    std::vector<T> p(len, T(0)), g(len, T(0));
    for (int i = 0; i < a.length(); ++i) {
      const int k = a.min_ + i - m;
      if (k >= len) break;
      p[k] += a.plain_[i];
      g[k] += a.log_[i];
    }
    for (int i = 0; i < b.length(); ++i) {
      const int k = b.min_ + i - m;
      if (k >= len) break;
      p[k] += sign * b.plain_[i];
      g[k] += sign * b.log_[i];
    }
    return with_truncation(m, std::move(p), std::move(g), trunc);
  }

  // Drop exact leading zeros (and trailing ones for exact series).
  void normalize() {
    size_t lead = 0;
    while (lead < plain_.size() && plain_[lead] == T(0) && log_[lead] == T(0)) ++lead;
    if (lead > 0) {
      plain_.erase(plain_.begin(), plain_.begin() + lead);
      log_.erase(log_.begin(), log_.begin() + lead);
      min_ += int(lead);
    }
    if (is_exact()) {
      while (!plain_.empty() && plain_.back() == T(0) && log_.back() == T(0)) {
        plain_.pop_back();
        log_.pop_back();
      }
      if (plain_.empty()) min_ = 0;
    } else if (min_ > trunc_) {
      min_ = trunc_;
    }
  }

  int min_ = 0;
  int trunc_ = kExactOrder;
  std::vector<T> plain_;
  std::vector<T> log_;
};

using Series = LogLaurentSeries<std::complex<double>>;
using RationalSeries = LogLaurentSeries<Rational>;

namespace detail {

// Taylor coefficients of the elementary functions at the origin.
template <class T>
std::vector<T> elementary_taylor(ElementaryFn f, int n) {
  using Tr = CoeffTraits<T>;
  std::vector<T> c(n + 1, T(0));
  T fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= Tr::from_int(k);
    const T inv = T(1) / fact;
    switch (f) {
      case ElementaryFn::Exp: c[k] = inv; break;
      case ElementaryFn::Cosh: c[k] = k % 2 == 0 ? inv : T(0); break;
      case ElementaryFn::Sinh: c[k] = k % 2 == 1 ? inv : T(0); break;
      case ElementaryFn::Cos: c[k] = k % 2 == 0 ? ((k / 2) % 2 == 0 ? inv : -inv) : T(0); break;
      case ElementaryFn::Sin: c[k] = k % 2 == 1 ? (((k - 1) / 2) % 2 == 0 ? inv : -inv) : T(0); break;
      case ElementaryFn::Log1p:
        c[k] = k == 0 ? T(0) : (k % 2 == 1 ? T(1) / Tr::from_int(k) : -T(1) / Tr::from_int(k));
        break;
    }
  }
  return c;
}

// f(a) for a with zero constant term and no log part; window [0, trunc).
template <class T>
LogLaurentSeries<T> compose_at_zero(ElementaryFn f, const LogLaurentSeries<T>& a, int length) {
  using S = LogLaurentSeries<T>;
  const int trunc = a.is_exact() ? length : a.truncation_order();
  if (trunc <= 0) return S::zero(trunc);
  if (a.is_exact_zero() || a.min_order() >= trunc) {
    const auto c = elementary_taylor<T>(f, 0);
    return S::constant(c[0], trunc);
  }
  const int v = a.min_order();
  const int nterms = (trunc + v - 1) / v;
  const auto c = elementary_taylor<T>(f, nterms);
  S result = S::constant(c[0], trunc);
  S p = a.truncated(trunc);
  for (int k = 1; k <= nterms; ++k) {
    if (c[k] != T(0)) result = result + c[k] * p;
    if (k < nterms) p = (p * a).truncated(trunc);
  }
  return result.truncated(trunc);
}

template <class T>
void require_plain(const LogLaurentSeries<T>& a) {
  if (a.has_log()) throw Error(Errc::DomainViolation, "elementary function of a log-bearing series");
  if (!a.is_zero() && a.min_order() < 0)
    throw Error(Errc::DomainViolation, "elementary function of a series with a pole");
}

template <class T>
std::pair<T, LogLaurentSeries<T>> split_constant(const LogLaurentSeries<T>& a) {
  if (a.min_order() > 0 || a.is_zero()) return {T(0), a};
  const T c = a.coeff(0);
  return {c, a - c};
}

}  // namespace detail

/// Composition f(a) restricted to the preconditions of the series algebra:
/// a must vanish at t = 0 (exp also accepts a constant term).
template <class T>
LogLaurentSeries<T> lift_elementary(ElementaryFn f, const LogLaurentSeries<T>& a,
                                    int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  if (!a.is_zero() && a.min_order() < 1) {
    if (f != ElementaryFn::Exp) throw Error(Errc::DomainViolation, "argument must vanish at t = 0");
    auto [c, rest] = detail::split_constant(a);
    return CoeffTraits<T>::exp(c) * detail::compose_at_zero(ElementaryFn::Exp, rest, length);
  }
  return detail::compose_at_zero(f, a, length);
}

// The functions below also split off a nonzero constant term through the
// addition formulas. In exact mode the constant must be zero.

template <class T>
LogLaurentSeries<T> exp(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  auto [c, r] = detail::split_constant(a);
  return CoeffTraits<T>::exp(c) * detail::compose_at_zero(ElementaryFn::Exp, r, length);
}

template <class T>
LogLaurentSeries<T> expm1(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  auto [c, r] = detail::split_constant(a);
  auto e = detail::compose_at_zero(ElementaryFn::Exp, r, length) - T(1);
  if (c == T(0)) return e;
  // e^c (e^r - 1) + (e^c - 1)
  const T ec = CoeffTraits<T>::exp(c);
  return ec * e + (ec - T(1));
}

template <class T>
LogLaurentSeries<T> cosh(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  auto [c, r] = detail::split_constant(a);
  auto ch = detail::compose_at_zero(ElementaryFn::Cosh, r, length);
  if (c == T(0)) return ch;
  auto sh = detail::compose_at_zero(ElementaryFn::Sinh, r, length);
  return CoeffTraits<T>::cosh(c) * ch + CoeffTraits<T>::sinh(c) * sh;
}

template <class T>
LogLaurentSeries<T> sinh(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  auto [c, r] = detail::split_constant(a);
  auto sh = detail::compose_at_zero(ElementaryFn::Sinh, r, length);
  if (c == T(0)) return sh;
  auto ch = detail::compose_at_zero(ElementaryFn::Cosh, r, length);
  return CoeffTraits<T>::sinh(c) * ch + CoeffTraits<T>::cosh(c) * sh;
}

template <class T>
LogLaurentSeries<T> cos(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  auto [c, r] = detail::split_constant(a);
  auto co = detail::compose_at_zero(ElementaryFn::Cos, r, length);
  if (c == T(0)) return co;
  auto si = detail::compose_at_zero(ElementaryFn::Sin, r, length);
  return CoeffTraits<T>::cos(c) * co - CoeffTraits<T>::sin(c) * si;
}

template <class T>
LogLaurentSeries<T> sin(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  detail::require_plain(a);
  auto [c, r] = detail::split_constant(a);
  auto si = detail::compose_at_zero(ElementaryFn::Sin, r, length);
  if (c == T(0)) return si;
  auto co = detail::compose_at_zero(ElementaryFn::Cos, r, length);
  return CoeffTraits<T>::sin(c) * co + CoeffTraits<T>::cos(c) * si;
}

/// ln(a) = m ln t + ln(c_m) + log1p(a / (c_m t^m) - 1), c_m the leading coefficient.
/// The m ln t piece populates the log channel at t^0.
template <class T>
LogLaurentSeries<T> log(const LogLaurentSeries<T>& a, int length = kDefaultSeriesLength) {
  using S = LogLaurentSeries<T>;
  if (a.has_log()) throw Error(Errc::DomainViolation, "logarithm of a log-bearing series");
  const int m = a.leading_order();
  const T cm = a.coeff(m);
  S r = (a * (T(1) / cm)).shifted(-m);
  if (r.min_order() < m && !r.is_exact()) r = r.truncated(r.truncation_order());
  std::vector<T> p;
  for (int k = 1; k < (r.is_exact() ? r.min_order() + r.length() : r.truncation_order()); ++k)
    p.push_back(k >= r.min_order() && k < r.min_order() + r.length() ? r.coeff(k) : T(0));
  const int trunc = r.is_exact() ? kExactOrder : r.truncation_order();
  S rest = S::with_truncation(1, std::move(p), {}, trunc);
  S out = detail::compose_at_zero(ElementaryFn::Log1p, rest, length);
  out += CoeffTraits<T>::log(cm);
  if (m != 0) {
    S lg = S::with_truncation(0, {T(0)}, {CoeffTraits<T>::from_int(m)}, kExactOrder);
    out = out + lg;
  }
  return out;
}

}  // namespace zetaren

#endif
