#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "biortho/rational.hpp"

namespace biortho {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  /// c * x^k
  static Polynomial monomial(const Rational& c, long k);
  /// a + b x
  static Polynomial linear(const Rational& a, const Rational& b);

  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  [[nodiscard]] Rational coeff(long k) const;
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  /// Horner in double precision on the rounded coefficients.
  [[nodiscard]] double eval(double x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] Polynomial pow(long e) const;
  /// f(g(x)).
  [[nodiscard]] Polynomial compose(const Polynomial& g) const;
  /// f(a + b x), exact.
  [[nodiscard]] Polynomial substitute_linear(const Rational& a, const Rational& b) const;
  /// x^k f(x).
  [[nodiscard]] Polynomial shift_up(long k) const;
  /// Divides by the nonzero constant c.
  [[nodiscard]] Polynomial divided_by(const Rational& c) const;
  /// Largest absolute coefficient (zero for the zero polynomial).
  [[nodiscard]] Rational max_abs_coeff() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Termwise derivative.
Polynomial poly_derivative(const Polynomial& f);

/// Antiderivative vanishing at x = 0.
Polynomial poly_integrate(const Polynomial& f);

/// Applies (xD + a)(xD + a + 1)...(xD + a + v - 1). On c x^k this gives
/// c (k + a)_v x^k since xD is diagonal on monomials.
Polynomial theta_shifted_product(const Polynomial& f, const Rational& a, long upsilon);

/// Applies xD.
Polynomial theta(const Polynomial& f);

}  // namespace biortho
