#include "biortho/audit.hpp"

#include <cmath>

#include "biortho/errors.hpp"
#include "biortho/families.hpp"
#include "biortho/scalar.hpp"
#include "biortho/series.hpp"

namespace biortho {

namespace {

using unchecked::M;

Rational sign_pow(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

ResidualReport exact_poly_report(std::string id, std::string variant, ParamSample s, const Polynomial& residual) {
  ResidualReport rep;
  rep.id = std::move(id);
  rep.variant = std::move(variant);
  rep.mode = Mode::ExactPoly;
  rep.add_sample(std::move(s));
  rep.residual = residual;
  rep.verdict = residual.is_zero() ? Verdict::Pass : Verdict::Fail;
  return rep;
}

ParamSample pqvn(const Rational& p, const Rational& q, long v, long n) {
  return sample({{"p", p}, {"q", q}, {"upsilon", Rational(v)}, {"n", Rational(n)}});
}

void require_positive_degree(long n) {
  if (n < 1) throw ConstraintError("the derivative relations need n >= 1");
}

// Product of the Pochhammers of a parameter block.
Rational block_pochhammer(const std::vector<Rational>& block, long k) {
  Rational out(1);
  for (const auto& b : block) out *= pochhammer(b, k);
  return out;
}

}  // namespace

ResidualReport check_derivative_relation_15(const Rational& p, const Rational& q, long v, long n, Variant variant) {
  require_positive_degree(n);
  const Polynomial lhs = poly_derivative(M(p, q, v, n));
  const Polynomial lower = variant == Variant::Printed ? M(Rational(1) - p - q, p - Rational(1 + v), v, n - 1)
                                                       : M(p - Rational(1 + v), q + Rational(v), v, n - 1);
  const Polynomial rhs = neg_x_pow(v - 1) * lower * (-Rational(v * n) * pochhammer(Rational(n + 1) - p, v));
  auto rep = exact_poly_report("eq15-" + std::string(variant_name(variant)), std::string(variant_name(variant)),
                               pqvn(p, q, v, n), lhs - rhs);
  if (variant == Variant::Corrected) rep.note("lower family M_(n-1)(p-1-v, q+v); re-derived by differentiating the series");
  return rep;
}

ResidualReport check_derivative_relation_16(const Rational& p, const Rational& q, long v, long n, Variant variant) {
  require_positive_degree(n);
  const Polynomial lhs = theta(M(p, q, v, n));
  const Rational vn(v * n);
  const Rational c = vn * pochhammer(vn - Rational(v) + q + Rational(1), v);
  Polynomial rhs;
  if (variant == Variant::Printed) {
    rhs = M(-p - q, p, v, n) * vn + M(Rational(1) - p - q, p - Rational(1), v, n - 1) * c;
  } else {
    rhs = M(p, q, v, n) * vn + M(p - Rational(1), q, v, n - 1) * c;
  }
  auto rep = exact_poly_report("eq16-" + std::string(variant_name(variant)), std::string(variant_name(variant)),
                               pqvn(p, q, v, n), lhs - rhs);
  if (variant == Variant::Corrected) rep.note("parameter slots transported from the Jacobi recurrence through the forward map");
  return rep;
}

ResidualReport check_derivative_relation_17(const Rational& p, const Rational& q, long v, long n, Variant variant) {
  require_positive_degree(n);
  const Polynomial lhs = theta(M(p, q, v, n));
  const Rational a = Rational(v * n) + q;
  Polynomial rhs;
  if (variant == Variant::Printed) {
    rhs = M(Rational(1) - p - q, p, v, n) * a - M(-p - q, p, v, n) * q;
  } else {
    rhs = M(p, q - Rational(1), v, n) * a - M(p, q, v, n) * q;
  }
  auto rep = exact_poly_report("eq17-" + std::string(variant_name(variant)), std::string(variant_name(variant)),
                               pqvn(p, q, v, n), lhs - rhs);
  if (variant == Variant::Corrected) rep.note("parameter slots transported from the Jacobi recurrence through the forward map");
  return rep;
}

ResidualReport check_mdifequ(const Rational& p, const Rational& q, long v, long n) {
  const Polynomial f = M(p, q, v, n);
  const Polynomial first = theta(theta_shifted_product(f, q + Rational(1 - v), v));
  const Polynomial g = theta_shifted_product(f, Rational(n + 1) - p, v);
  const Polynomial second = neg_x_pow(v) * (theta(g) - g * Rational(v * n));
  return exact_poly_report("mdifequ", "", pqvn(p, q, v, n), first - second);
}

ResidualReport check_jacobi_recurrence(const Rational& p, const Rational& q, long v, long n, int which) {
  require_positive_degree(n);
  using unchecked::J;
  const Polynomial lhs = Polynomial::linear(-1, 1) * poly_derivative(J(p, q, v, n));
  Polynomial rhs;
  if (which == 1) {
    rhs = J(p, q, v, n) * Rational(v * n) -
          J(p, q + Rational(1), v, n - 1) * (Rational(v) * pochhammer(Rational(v * n - v + 1) + p, v));
  } else {
    rhs = J(p - Rational(1), q + Rational(1), v, n) * (Rational(v * n) + p) - J(p, q, v, n) * p;
  }
  return exact_poly_report(which == 1 ? "jrec1" : "jrec2", "", pqvn(p, q, v, n), lhs - rhs);
}

std::string_view connection_id(Connection c) {
  switch (c) {
    case Connection::JMForward: return "eqJM-forward";
    case Connection::JMInverse: return "eqJM-inverse";
    case Connection::JMInverseRepaired: return "eqJM-inverse-repaired";
    case Connection::KMForward: return "eqKM-forward";
    case Connection::KMInverse: return "eqKM-inverse";
    case Connection::KMInverseRepaired: return "eqKM-inverse-repaired";
    case Connection::ClassicForward: return "classic-forward";
    case Connection::ClassicInverse: return "classic-inverse";
    case Connection::Eq8: return "eq8";
  }
  return "";
}

ResidualReport check_connection(Connection which, const Rational& p, const Rational& q, long v, long n) {
  const Rational sgn = sign_pow(n);
  const Rational fact = factorial(n);
  const Rational half(1, 2);
  auto to_pm = [&](const Polynomial& f) { return f.substitute_linear(Rational(1), Rational(2)); };  // 2x+1
  auto from_pm = [&](const Polynomial& f) { return f.substitute_linear(-half, half); };             // (x-1)/2
  Polynomial residual;
  std::string variant;
  switch (which) {
    case Connection::JMForward:
      residual = M(p, q, v, n) - to_pm(unchecked::J(q, -p - q, v, n)) * (sgn * fact);
      break;
    case Connection::JMInverse:
      variant = "printed";
      residual = unchecked::J(p, q, v, n) - from_pm(M(q, -p - q, v, n)) * (sgn / fact);
      break;
    case Connection::JMInverseRepaired:
      variant = "repaired";
      residual = unchecked::J(p, q, v, n) - from_pm(M(-p - q, p, v, n)) * (sgn / fact);
      break;
    case Connection::KMForward:
      residual = unchecked::Mfrak(p, q, v, n) - to_pm(unchecked::K(q, -p - q, v, n)) * (sgn * fact);
      break;
    case Connection::KMInverse:
      variant = "printed";
      residual = unchecked::K(p, q, v, n) - from_pm(unchecked::Mfrak(q, -p - q, v, n)) * (sgn / fact);
      break;
    case Connection::KMInverseRepaired:
      variant = "repaired";
      residual = unchecked::K(p, q, v, n) - from_pm(unchecked::Mfrak(-p - q, p, v, n)) * (sgn / fact);
      break;
    case Connection::ClassicForward:
      residual = unchecked::classic_M(p, q, n) - to_pm(unchecked::J(q, -p - q, 1, n)) * (sgn * fact);
      break;
    case Connection::ClassicInverse:
      residual = unchecked::J(p, q, 1, n) - from_pm(unchecked::classic_M(-p - q, p, n)) * (sgn / fact);
      break;
    case Connection::Eq8: {
      // int t^(n+p+q) e^-t Z_n^(p)(-xt) dt, termwise, divided by Gamma(n+p+q+1)
      const Polynomial z = unchecked::Z(p, v, n);
      Polynomial lhs;
      for (long k = 0; k <= z.degree(); ++k) {
        lhs += Polynomial::monomial(z.coeff(k) * sign_pow(k) * pochhammer(Rational(n + 1) + p + q, k), k);
      }
      residual = lhs - M(-p - q, p, v, n) * (sgn / fact);
      break;
    }
  }
  auto rep = exact_poly_report(std::string(connection_id(which)), variant, pqvn(p, q, v, n), residual);
  if (which == Connection::JMInverseRepaired || which == Connection::KMInverseRepaired) {
    rep.note("inverse read off from the forward map (p,q) -> (q,-p-q), whose inverse is (p,q) -> (-p-q,p)");
  }
  if (which == Connection::Eq8) rep.note("both sides divided by Gamma(n+p+q+1); moments reduced to Pochhammer symbols");
  return rep;
}

ResidualReport check_limit_relations(Konhauser which, const Rational& q, long v, long n,
                                     const std::vector<Rational>& schedule) {
  ResidualReport rep;
  rep.id = which == Konhauser::Z ? "eq12-Z" : "eq12-Y";
  rep.mode = Mode::NumericLimit;
  rep.tolerance = 0.1;
  const Polynomial target =
      (which == Konhauser::Z ? unchecked::Z(q, v, n) : unchecked::Y(q, v, n)) * (sign_pow(n) * factorial(n));
  std::vector<double> dev;
  for (const auto& p : schedule) {
    rep.add_sample(pqvn(p, q, v, n));
    const Polynomial f = which == Konhauser::Z ? M(p, q, v, n) : unchecked::Mfrak(p, q, v, n);
    const Rational d = (f.substitute_linear(Rational(0), Rational(1) / p) - target).max_abs_coeff();
    dev.push_back(d.to_double());
    rep.note("p=" + p.to_string() + " deviation " + format_double(dev.back()));
  }
  double worst = 0.0;
  bool all_zero = true;
  for (double d : dev) all_zero = all_zero && d == 0.0;
  if (!all_zero) {
    for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
      const double expected = (schedule[i] / schedule[i + 1]).to_double();
      const double ratio = dev[i] == 0.0 ? INFINITY : dev[i + 1] / dev[i];
      worst = std::max(worst, std::abs(ratio / expected - 1.0));
    }
  }
  rep.residual = worst;
  rep.verdict = worst <= rep.tolerance ? Verdict::Pass : Verdict::Fail;
  return rep;
}

ResidualReport check_special_cases(Konhauser which, const Rational& q, long v, long n) {
  Polynomial residual;
  Rational p;
  if (which == Konhauser::Z) {
    p = Rational(n + 1);
    residual = M(p, q, v, n) - unchecked::Z(q, v, n).substitute_linear(Rational(0), Rational(-1)) *
                                   (sign_pow(n) * factorial(n));
  } else {
    p = Rational(n) - q;
    // (-(1+x))^n Y(x/(1+x)) = (-1)^n sum_k y_k x^k (1+x)^(n-k)
    const Polynomial y = unchecked::Y(q, v, n);
    Polynomial rhs;
    for (long k = 0; k <= y.degree(); ++k) {
      rhs += Polynomial::monomial(y.coeff(k), k) * Polynomial::linear(1, 1).pow(n - k);
    }
    residual = unchecked::Mfrak(p, q, v, n) - rhs * (sign_pow(n) * factorial(n));
  }
  auto rep = exact_poly_report(which == Konhauser::Z ? "special-Z" : "special-Y", "", pqvn(p, q, v, n), residual);
  if (which == Konhauser::Z && n >= 1) rep.note("(n+1-p)_(vj) = (0)_(vj) removes every j >= 1 term at p = n+1");
  return rep;
}

ResidualReport check_operational_rep(const Rational& p, const Rational& q, long v, long n, OpForm form) {
  if (q <= Rational(-1)) throw ConstraintError("q must exceed -1");
  if (form == OpForm::Normalization && !(q.is_integer() && q >= Rational(2))) {
    throw ConstraintError("the normalization check needs an integer q >= 2");
  }
  GammaMonomials base;
  base.add(q, Rational(1));  // x^q / Gamma(q+1)
  const std::vector<Rational> block = delta_params(v, Rational(n + 1) - p);
  GammaMonomials acc;
  for (long j = 0; j <= n; ++j) {
    Rational c = pochhammer(Rational(-n), j) / factorial(j);
    if (form == OpForm::HypPrinted || form == OpForm::HypRepaired) {
      c *= block_pochhammer(block, j);
      if (form == OpForm::HypRepaired) c *= Rational(v).pow(v * j);
    } else {
      c *= pochhammer(Rational(n + 1) - p, v * j);
    }
    // (-1/D)^(vj) = (-D^-1)^(vj)
    c *= sign_pow(v * j);
    const GammaMonomials shifted = base.integrate(Rational(v * j));
    for (const auto& [e, coeff] : shifted.terms()) acc.add(e, coeff * c);
  }
  // (-1)^n (q+1)_(vn) / x^q times the sum. x^(q+k)/Gamma(q+k+1) over x^q is
  // x^k / (Gamma(q+1) (q+1)_k).
  const Rational pre = sign_pow(n) * pochhammer(q + Rational(1), v * n);
  Polynomial lhs;
  for (const auto& [e, coeff] : acc.terms()) {
    const long k = (e - q).to_long();
    lhs += Polynomial::monomial(pre * coeff / pochhammer(q + Rational(1), k), k);
  }
  std::string variant;
  switch (form) {
    case OpForm::Series: variant = "series"; break;
    case OpForm::HypPrinted: variant = "printed"; break;
    case OpForm::HypRepaired: variant = "repaired"; break;
    case OpForm::Normalization: variant = "literal"; break;
  }
  if (form == OpForm::Normalization) lhs = lhs * (Rational(1) / factorial(q.to_long()));
  const std::string id = form == OpForm::Series          ? "op-rep"
                         : form == OpForm::Normalization ? "op-rep-normalization"
                                                         : "op-rep-hyp-" + variant;
  auto rep = exact_poly_report(id, variant, pqvn(p, q, v, n), lhs - M(p, q, v, n));
  if (form != OpForm::Normalization) {
    rep.note("operator side multiplied by Gamma(q+1) before comparing");
  } else {
    rep.note("operator side taken literally: it equals M_n / Gamma(q+1)");
  }
  if (form == OpForm::HypRepaired) rep.note("argument (-v/D)^v restores the v^(vj) factor of the parameter block");
  return rep;
}

std::string_view genfun_id(GenFun g) {
  switch (g) {
    case GenFun::Eq13: return "eq13";
    case GenFun::Eq14: return "eq14";
    case GenFun::Mdog: return "mdog";
    case GenFun::Eq18: return "eq18";
    case GenFun::Mgen: return "mgen";
  }
  return "";
}

namespace {

using RS = TruncSeries<Rational>;
using PS = TruncSeries<Polynomial>;

PS lift(const RS& s) {
  PS out(s.order());
  for (long k = 0; k <= s.order(); ++k) out[k] = Polynomial(s[k]);
  return out;
}

// t * f(t)
RS times_t(const RS& f) {
  RS out(f.order());
  for (long k = 1; k <= f.order(); ++k) out[k] = f[k - 1];
  return out;
}

// 1 + ((1-t)^(1/v) - 1)/(1+x0), the rescaled bracket x0 + (1-t)^(1/v)
RS bracket(long v, const Rational& x0, long order) {
  RS root = series_pow(RS::linear(order, Rational(1), Rational(-1)), Rational(1, v));
  root[0] -= Rational(1);
  RS out = root.scaled(Rational(1) / (Rational(1) + x0));
  out[0] += Rational(1);
  return out;
}

// Largest order at which (1-p-q)_(v n) is still nonzero, capped at T. Past it
// the coefficients of eq13/eq14 are undefined.
long defined_order(const GenFunArgs& a) {
  const Rational base = Rational(1) - a.p - a.q;
  if (!base.is_nonpositive_integer()) return a.order;
  const long zero_at = -base.to_long();  // (base)_k = 0 once k > zero_at
  return std::min(a.order, zero_at / a.upsilon);
}

std::vector<Polynomial> residual_orders(GenFun which, const GenFunArgs& a) {
  const long T = (which == GenFun::Eq13 || which == GenFun::Eq14) ? defined_order(a) : a.order;
  const long v = a.upsilon;
  const Rational& p = a.p;
  const Rational& q = a.q;
  std::vector<Polynomial> out;
  switch (which) {
    case GenFun::Eq13: {
      const auto num = delta_params(v + 1, Rational(1) - q);
      const auto den = delta_params(v, Rational(1) - p - q);
      // t (1+t)^-(v+1)
      const RS w = times_t(series_pow(RS::linear(T, Rational(1), Rational(1)), Rational(-(v + 1))));
      const Rational c = Rational(v + 1) * (-Rational(v + 1) / Rational(v)).pow(v);
      PS sum(T);
      RS wk = RS::constant(T, Rational(1));
      for (long k = 0; k <= T; ++k) {
        const Rational dk = block_pochhammer(den, k);
        if (dk.is_zero()) throw PoleError("denominator block vanishes");
        const Polynomial ak = Polynomial::monomial(block_pochhammer(num, k) / dk * c.pow(k) / factorial(k), v * k);
        for (long m = 0; m <= T; ++m) sum[m] += ak * wk[m];
        wk = wk * w;
      }
      const PS rhs = lift(series_pow(RS::linear(T, Rational(1), Rational(1)), q - Rational(1))) * sum;
      for (long n = 0; n <= T; ++n) {
        const Rational d = pochhammer(Rational(1) - p - q, v * n);
        if (d.is_zero()) throw PoleError("(1-p-q)_(vn) vanishes");
        const Polynomial lhs = M(p, q, v, n) * (pochhammer(Rational(1) - q, n) / d / factorial(n));
        out.push_back(lhs - rhs[n]);
      }
      break;
    }
    case GenFun::Eq14: {
      const auto num = delta_params(v, Rational(1) - q);
      const auto den = delta_params(v, Rational(1) - p - q);
      PS f(T);
      for (long k = 0; k <= T; ++k) {
        const Rational dk = block_pochhammer(den, k);
        if (dk.is_zero()) throw PoleError("denominator block vanishes");
        f[k] = neg_x_pow(v * k) * (block_pochhammer(num, k) / dk / factorial(k));
      }
      const PS rhs = lift(series_exp_linear<Rational>(T, Rational(-1))) * f;
      for (long n = 0; n <= T; ++n) {
        const Rational d = pochhammer(Rational(1) - p - q, v * n);
        if (d.is_zero()) throw PoleError("(1-p-q)_(vn) vanishes");
        const Polynomial lhs = M(p - Rational(n), q + Rational(n), v, n) * (Rational(1) / d / factorial(n));
        out.push_back(lhs - rhs[n]);
      }
      break;
    }
    case GenFun::Eq18: {
      if (a.x0 <= Rational(0)) throw ConstraintError("x0 must be positive");
      // (1+x0)^(n-p) [x0 + (1-t)^(1/v)]^p = (1+x0)^n bracket^p
      const RS g = series_pow(RS::linear(T, Rational(1), Rational(-1)), (q - Rational(1)) / Rational(v)) *
                   series_pow(bracket(v, a.x0, T), p);
      for (long n = 0; n <= T; ++n) {
        const Rational rhs = sign_pow(n) * (Rational(1) + a.x0).pow(n) * factorial(n) * g[n];
        const Rational lhs = unchecked::Mfrak(p - Rational(n), q + Rational(n), v, n)(a.x0);
        out.emplace_back(lhs - rhs);
      }
      break;
    }
    case GenFun::Mgen: {
      if (a.x0 <= Rational(0)) throw ConstraintError("x0 must be positive");
      const Rational x = a.x0;
      const Rational one(1);
      // u = -t (1+x)^-1 (1-t)^((1-theta)/v) bracket^(-1-zeta)
      const RS u = times_t(series_pow(RS::linear(T, one, Rational(-1)), (one - a.theta) / Rational(v)) *
                           series_pow(bracket(v, x, T), -one - a.zeta))
                       .scaled(-one / (one + x));
      RS lhs(T);
      RS un = RS::constant(T, one);
      for (long n = 0; n <= T; ++n) {
        const Rational c =
            unchecked::Mfrak(p + a.zeta * Rational(n), q + a.theta * Rational(n), v, n)(x) / factorial(n);
        lhs += un.scaled(c);
        un = un * u;
      }
      RS e = series_pow(RS::linear(T, one, one), Rational(v));
      e[0] -= one;
      RS first = e.scaled(a.zeta + a.theta);
      first[0] += Rational(v);
      first = first * series_pow(RS::linear(T, one, one), Rational(-1));
      // x(1+zeta) E / (1+x+xt) = x(1+zeta)/(1+x) E (1 + x t/(1+x))^-1
      const RS shifted = RS::linear(T, one, x / (one + x));
      const RS second = (e * series_pow(shifted, Rational(-1))).scaled(x * (one + a.zeta) / (one + x));
      const RS braces = first - second;
      const RS rhs = (series_pow(RS::linear(T, one, one), -p - q) * series_pow(shifted, p) *
                      series_pow(braces, Rational(-1)))
                         .scaled(Rational(v));
      for (long n = 0; n <= T; ++n) out.emplace_back(lhs[n] - rhs[n]);
      break;
    }
    case GenFun::Mdog:
      throw ConstraintError("mdog is compared pointwise, not by orders");
  }
  return out;
}

ParamSample genfun_sample(GenFun which, const GenFunArgs& a) {
  ParamSample s = sample({{"p", a.p}, {"q", a.q}, {"upsilon", Rational(a.upsilon)}, {"T", Rational(a.order)}});
  if (which == GenFun::Eq18 || which == GenFun::Mgen || which == GenFun::Mdog) {
    s.emplace_back("x0", a.x0.to_string());
  }
  if (which == GenFun::Mgen) {
    s.emplace_back("zeta", a.zeta.to_string());
    s.emplace_back("theta", a.theta.to_string());
  }
  return s;
}

double mdog_relative(const GenFunArgs& a, long T, double t) {
  const double x = a.x0.to_double();
  const double p = a.p.to_double();
  const double q = a.q.to_double();
  const double v = static_cast<double>(a.upsilon);
  double lhs = 0.0;
  for (long n = 0; n <= T; ++n) {
    const double c = unchecked::Mfrak(a.p - Rational(n), a.q + Rational(n), a.upsilon, n).eval(x);
    lhs += c * std::pow(t / (2.0 * (1.0 + x)), static_cast<double>(n)) / std::tgamma(static_cast<double>(n + 1));
  }
  const double b = 1.0 + 1.0 / (2.0 * t);
  const double rhs = std::pow(1.0 + x, -p) * std::pow(b, (q - 1.0) / v) * std::pow(x + std::pow(b, 1.0 / v), p);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace

std::vector<Polynomial> genfun_order_residuals(GenFun which, const GenFunArgs& args) {
  return residual_orders(which, args);
}

ResidualReport check_generating_function(GenFun which, const GenFunArgs& args) {
  ResidualReport rep;
  rep.id = std::string(genfun_id(which));
  rep.add_sample(genfun_sample(which, args));
  if (which == GenFun::Mdog) {
    rep.mode = Mode::NumericSeries;
    rep.tolerance = 1e-9;
    double worst = 0.0;
    bool shrinks = true;
    for (double t : {1.0 / 16.0, 1.0 / 8.0}) {
      const double r = mdog_relative(args, args.order, t);
      const double r_more = mdog_relative(args, args.order + 4, t);
      worst = std::max(worst, r);
      if (!(r_more <= 0.1 * r || r_more == 0.0)) shrinks = false;
      rep.note("t=" + format_double(t) + " relative residual " + format_double(r) + " (T+4: " + format_double(r_more) +
               ")");
    }
    rep.residual = worst;
    rep.verdict = worst <= rep.tolerance && shrinks ? Verdict::Pass : Verdict::Fail;
    rep.note("right side has 1/(2t) and is not analytic at t = 0, so no coefficient comparison exists");
    return rep;
  }
  const std::vector<Polynomial> orders = residual_orders(which, args);
  rep.mode = (which == GenFun::Eq13 || which == GenFun::Eq14) ? Mode::ExactPoly : Mode::ExactScalar;
  rep.verdict = Verdict::Pass;
  if (rep.mode == Mode::ExactPoly) {
    rep.residual = Polynomial();
  } else {
    rep.residual = Rational(0);
  }
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (orders[k].is_zero()) continue;
    if (rep.verdict == Verdict::Pass) {
      rep.verdict = Verdict::Fail;
      if (rep.mode == Mode::ExactPoly) {
        rep.residual = orders[k];
      } else {
        rep.residual = orders[k].coeff(0);
      }
      rep.note("first nonzero residual at order t^" + std::to_string(k));
    }
  }
  if (static_cast<long>(orders.size()) <= args.order) {
    rep.note("orders above t^" + std::to_string(orders.size() - 1) + " are undefined: (1-p-q)_(vn) vanishes");
  }
  std::string zeros;
  for (std::size_t k = 0; k < orders.size(); ++k) zeros += orders[k].is_zero() ? '0' : 'x';
  rep.note("order pattern (0 = agrees) " + zeros);
  if (which == GenFun::Mgen) rep.note("the right side mixes (1+t) with the (1-t) of the substitution u(t)");
  return rep;
}

std::string_view expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Pass: return "pass";
    case Expectation::Fail: return "fail";
    case Expectation::Record: return "record";
  }
  return "";
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace biortho
