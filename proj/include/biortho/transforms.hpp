#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biortho/families.hpp"
#include "biortho/polynomial.hpp"
#include "biortho/rational.hpp"
#include "biortho/report.hpp"

namespace biortho {

enum class Variant { Printed, Corrected };

std::string_view variant_name(Variant v);

/// Value of the Laplace transform of x^q M_n(p,q,v; w x) at alpha, written as
/// coefficient * Gamma(q+1) / alpha^(q+1).
struct LaplaceValue {
  Rational coefficient;
  /// Full value when q is a nonnegative integer (then the factor is rational).
  std::optional<Rational> exact;
  double value = 0.0;
  std::string factor_symbol;
};

/// Closed form (-1)^n Gamma(vn+q+1)/alpha^(q+1) * F[-n, Delta(v, n+1-p); -; A].
/// PRINTED uses A = (-w/alpha)^v; CORRECTED uses A = (-v w/alpha)^v, which
/// restores the v^(vj) block factor. Requires alpha > 0 and q > -1. The
/// series terminates, so no condition on |w/alpha| is imposed.
LaplaceValue laplace_closed_form(const ParamSet& params, long n, const Rational& w, const Rational& alpha,
                                 Variant variant);

/// Termwise transform of x^q f(x): sum_k c_k Gamma(q+k+1)/alpha^(q+k+1),
/// again as a coefficient of Gamma(q+1)/alpha^(q+1).
LaplaceValue laplace_of_polynomial(const Rational& q, const Polynomial& f, const Rational& alpha);

struct QuadratureCheck {
  double numeric = 0.0;
  double closed = 0.0;
  /// Residual divided by max(|closed|, largest termwise magnitude).
  double relative_residual = 0.0;
  double cutoff = 0.0;
  long panels = 0;
};

/// Integrates e^(-alpha x) x^q M_n(p,q,v; w x) over (0, X) adaptively, with X
/// chosen so the neglected tail is below 1e-12 of the closed form, and
/// compares against the CORRECTED closed form.
QuadratureCheck laplace_quadrature_check(const ParamSet& params, long n, const Rational& w, const Rational& alpha);

/// Riemann-Liouville order. Derivatives also carry r = floor(value) + 1.
struct FracOrder {
  enum class Kind { Integral, Derivative };
  Rational value;
  Kind kind = Kind::Integral;
  Rational a;  // left endpoint

  static FracOrder integral(const Rational& mu, const Rational& a = Rational(0));
  static FracOrder derivative(const Rational& lambda, const Rational& a = Rational(0));
  [[nodiscard]] long r() const { return value.floor() + 1; }
  /// +value for integrals, -value for derivatives.
  [[nodiscard]] Rational signed_value() const { return kind == Kind::Integral ? value : -value; }
};

/// A finite sum  sum_e c_e y^e / Gamma(e+1)  over rational exponents e, with
/// y = x - a. In this basis I^mu shifts every exponent by mu and D lowers it
/// by one; terms whose exponent is a negative integer vanish identically.
class GammaMonomials {
 public:
  GammaMonomials() = default;

  /// y^q f(y) / Gamma(q+1): the coefficient of y^(q+k)/Gamma(q+k+1) is c_k (q+1)_k.
  static GammaMonomials from_weighted(const Rational& q, const Polynomial& f);

  [[nodiscard]] GammaMonomials integrate(const Rational& mu) const;
  [[nodiscard]] GammaMonomials differentiate(long times = 1) const;
  [[nodiscard]] GammaMonomials apply(const FracOrder& order) const;

  [[nodiscard]] const std::map<Rational, Rational>& terms() const { return terms_; }
  void add(const Rational& exponent, const Rational& coefficient);
  friend bool operator==(const GammaMonomials&, const GammaMonomials&) = default;
  [[nodiscard]] GammaMonomials operator-(const GammaMonomials& o) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// For integer exponents >= 0: multiplies through by Gamma(q+1) with q a
  /// nonnegative integer and returns the ordinary polynomial in y.
  [[nodiscard]] Polynomial to_polynomial(long q) const;

 private:
  std::map<Rational, Rational> terms_;
};

struct FracShift {
  Rational new_q;
  /// Gamma(vn+q+1) / Gamma(vn+new_q+1) as a token, exact when rational.
  std::string prefactor_symbol;
  std::optional<Rational> prefactor_exact;
  /// (q+1)_(vj) / (new_q+1)_(vj) for j = 0..n.
  std::vector<Rational> coefficient_ratios;
  GammaMonomials lhs;
  GammaMonomials rhs;
  IdentityReport report;
};

/// Applies the operator to (x-a)^q M_n(p,q,v; w(x-a)) and compares with the
/// stated right side prefactor (x-a)^new_q M_n(p,new_q,v; w(x-a)) exactly, in
/// the Gamma-normalized basis (both sides carry the common factor Gamma(q+1)).
/// Throws PoleError when Gamma(vn+new_q+1) is a pole.
FracShift fractional_shift(const ParamSet& params, long n, const FracOrder& order, const Rational& w);

}  // namespace biortho
