#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "biortho/errors.hpp"
#include "biortho/polynomial.hpp"
#include "biortho/rational.hpp"

namespace biortho {

/// Scalar hooks used by TruncSeries. Specialized for Rational (exact),
/// Polynomial (exact, coefficients polynomial in a spectator variable) and
/// double (numeric).
template <class S>
struct SeriesScalar;

template <>
struct SeriesScalar<Rational> {
  static constexpr const char* name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& s) { return s.is_zero(); }
  static Rational scale(const Rational& s, const Rational& c) { return s * c; }
  static Rational divide(const Rational& s, const Rational& c0) { return s / c0; }
  static Rational pow_constant(const Rational& c0, const Rational& e) {
    if (c0 == Rational(1)) return c0;
    if (e.is_integer()) return c0.pow(e.to_long());
    throw SeriesError("exact series power needs constant term 1 or an integer exponent");
  }
};

template <>
struct SeriesScalar<double> {
  static constexpr const char* name = "double";
  static double zero() { return 0.0; }
  static double from_rational(const Rational& r) { return r.to_double(); }
  static bool is_zero(double s) { return s == 0.0; }
  static double scale(double s, const Rational& c) { return s * c.to_double(); }
  static double divide(double s, double c0) { return s / c0; }
  static double pow_constant(double c0, const Rational& e) {
    if (!e.is_integer() && c0 <= 0.0) {
      throw SeriesError("numeric series power with a fractional exponent needs a positive constant term");
    }
    return std::pow(c0, e.to_double());
  }
};

template <>
struct SeriesScalar<Polynomial> {
  static constexpr const char* name = "polynomial";
  static Polynomial zero() { return {}; }
  static Polynomial from_rational(const Rational& r) { return Polynomial(r); }
  static bool is_zero(const Polynomial& s) { return s.is_zero(); }
  static Polynomial scale(const Polynomial& s, const Rational& c) { return s * c; }
  static Polynomial divide(const Polynomial& s, const Polynomial& c0) {
    if (c0.degree() != 0) throw SeriesError("series division needs a nonzero constant leading term");
    return s.divided_by(c0.coeff(0));
  }
  static Polynomial pow_constant(const Polynomial& c0, const Rational& e) {
    if (c0.degree() != 0) throw SeriesError("series power needs a constant leading term");
    return Polynomial(SeriesScalar<Rational>::pow_constant(c0.coeff(0), e));
  }
};

/// Power series in t truncated after t^order. Every operation agrees with the
/// infinite series modulo t^(order+1).
template <class S>
class TruncSeries {
 public:
  using Traits = SeriesScalar<S>;

  explicit TruncSeries(long order) : coeffs_(static_cast<std::size_t>(order) + 1, Traits::zero()) {
    if (order < 0) throw SeriesError("negative truncation order");
  }
  TruncSeries(long order, std::vector<S> coeffs) : TruncSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  static TruncSeries constant(long order, S c) {
    TruncSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  /// a + b t
  static TruncSeries linear(long order, S a, S b) {
    TruncSeries s(order);
    s.coeffs_[0] = std::move(a);
    if (order >= 1) s.coeffs_[1] = std::move(b);
    return s;
  }

  [[nodiscard]] long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const S& operator[](long k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  S& operator[](long k) { return coeffs_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const std::vector<S>& coefficients() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    truncate_to(o.order());
    for (long k = 0; k <= order(); ++k) (*this)[k] = (*this)[k] + o[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    truncate_to(o.order());
    for (long k = 0; k <= order(); ++k) (*this)[k] = (*this)[k] - o[k];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const long t = std::min(a.order(), b.order());
    TruncSeries out(t);
    for (long i = 0; i <= t; ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (long j = 0; i + j <= t; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
  }

  /// Multiplies every coefficient by the scalar s.
  [[nodiscard]] TruncSeries times(const S& s) const {
    TruncSeries out(order());
    for (long k = 0; k <= order(); ++k) out[k] = coeffs_[static_cast<std::size_t>(k)] * s;
    return out;
  }
  [[nodiscard]] TruncSeries scaled(const Rational& c) const {
    TruncSeries out(order());
    for (long k = 0; k <= order(); ++k) out[k] = Traits::scale(coeffs_[static_cast<std::size_t>(k)], c);
    return out;
  }

  /// Evaluates the truncated polynomial at t (only meaningful for double).
  [[nodiscard]] S evaluate(const S& t) const {
    S acc = Traits::zero();
    for (long k = order(); k >= 0; --k) acc = acc * t + (*this)[k];
    return acc;
  }

 private:
  void truncate_to(long t) {
    if (t < order()) coeffs_.resize(static_cast<std::size_t>(t) + 1);
  }
  std::vector<S> coeffs_;
};

/// f^e by the J.C.P. Miller recurrence
///   g_0 = f_0^e,  g_k = 1/(k f_0) sum_{i=1..k} ((e+1) i - k) f_i g_{k-i}.
/// Exact for Rational/Polynomial scalars when f_0 = 1 (or e is an integer).
template <class S>
TruncSeries<S> series_pow(const TruncSeries<S>& f, const Rational& e) {
  using Traits = SeriesScalar<S>;
  if (Traits::is_zero(f[0])) throw SeriesError("series_pow: zero constant term");
  TruncSeries<S> g(f.order());
  g[0] = Traits::pow_constant(f[0], e);
  for (long k = 1; k <= f.order(); ++k) {
    S acc = Traits::zero();
    for (long i = 1; i <= k; ++i) {
      const Rational w = (e + Rational(1)) * Rational(i) - Rational(k);
      if (w.is_zero() || Traits::is_zero(f[i])) continue;
      acc = acc + Traits::scale(f[i] * g[k - i], w);
    }
    g[k] = Traits::scale(Traits::divide(acc, f[0]), Rational(1, k));
  }
  return g;
}

/// f(g(t)) truncated to min(order f, order g). Requires g_0 = 0.
template <class S>
TruncSeries<S> series_compose(const TruncSeries<S>& f, const TruncSeries<S>& g) {
  using Traits = SeriesScalar<S>;
  if (!Traits::is_zero(g[0])) throw SeriesError("series_compose: inner series has a nonzero constant term");
  const long t = std::min(f.order(), g.order());
  TruncSeries<S> inner(t);
  for (long k = 0; k <= t; ++k) inner[k] = g[k];
  TruncSeries<S> acc = TruncSeries<S>::constant(t, f[t]);
  for (long k = t - 1; k >= 0; --k) {
    acc = acc * inner;
    acc[0] = acc[0] + f[k];
  }
  return acc;
}

/// exp(c t) with rational c.
template <class S>
TruncSeries<S> series_exp_linear(long order, const Rational& c) {
  using Traits = SeriesScalar<S>;
  TruncSeries<S> out(order);
  Rational term(1);
  for (long k = 0; k <= order; ++k) {
    out[k] = Traits::from_rational(term);
    term = term * c / Rational(k + 1);
  }
  return out;
}

}  // namespace biortho
