#include "biortho/families.hpp"

#include <algorithm>
#include <optional>

#include "biortho/errors.hpp"
#include "biortho/scalar.hpp"

namespace biortho {

namespace {

Rational sign_of(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational choose(long n, long k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void require_degree(long n) {
  if (n < 0) throw ConstraintError("degree index n must be nonnegative");
}

void require_upsilon(long upsilon) {
  if (upsilon < 1) throw ConstraintError("upsilon must be a positive integer");
}

}  // namespace

Polynomial neg_x_pow(long k) { return Polynomial::monomial(sign_of(k), k); }

ParamSet ParamSet::make(const Rational& p, const Rational& q, long upsilon, long n_max) {
  ParamSet ps{p, q, upsilon, n_max};
  if (auto why = ps.violation(); !why.empty()) throw ConstraintError(why);
  return ps;
}

std::string ParamSet::violation() const {
  if (upsilon < 1) return "upsilon must be >= 1";
  if (n_max < 0) return "N must be nonnegative";
  if (q <= Rational(-1)) return "q must exceed -1 (got " + q.to_string() + ")";
  const Rational bound = Rational((upsilon + 1) * n_max + 1);
  if (p <= bound) {
    return "p must exceed (upsilon+1)N+1 = " + bound.to_string() + " (got " + p.to_string() + ")";
  }
  return {};
}

std::string_view family_name(FamilyId id) {
  switch (id) {
    case FamilyId::M: return "M";
    case FamilyId::MFrak: return "Mfrak";
    case FamilyId::KonhauserZ: return "konhauser-Z";
    case FamilyId::KonhauserY: return "konhauser-Y";
    case FamilyId::JacobiJ: return "jacobi-J";
    case FamilyId::JacobiK: return "jacobi-K";
    case FamilyId::ClassicM: return "classic-M";
  }
  return "?";
}

FamilyId parse_family(std::string_view name) {
  if (name == "M") return FamilyId::M;
  if (name == "Mfrak" || name == "MFRAK" || name == "mfrak") return FamilyId::MFrak;
  if (name == "konhauser-Z" || name == "Z" || name == "KONHAUSER_Z") return FamilyId::KonhauserZ;
  if (name == "konhauser-Y" || name == "Y" || name == "KONHAUSER_Y") return FamilyId::KonhauserY;
  if (name == "jacobi-J" || name == "J" || name == "JACOBI_J") return FamilyId::JacobiJ;
  if (name == "jacobi-K" || name == "K" || name == "JACOBI_K") return FamilyId::JacobiK;
  if (name == "classic-M" || name == "classic" || name == "CLASSIC_M") return FamilyId::ClassicM;
  throw ConstraintError("unknown family '" + std::string(name) + "'");
}

namespace unchecked {

Polynomial M(const Rational& p, const Rational& q, long upsilon, long n) {
  require_degree(n);
  require_upsilon(upsilon);
  // (q+1)_{vn} / (q+1)_{vj} = (q+1+vj)_{v(n-j)}
  std::vector<Rational> c(static_cast<std::size_t>(upsilon * n) + 1);
  for (long j = 0; j <= n; ++j) {
    const long e = upsilon * j;
    Rational term = sign_of(n + j + e) * choose(n, j) *
                    pochhammer(q + Rational(1 + e), upsilon * (n - j)) *
                    pochhammer(Rational(n + 1) - p, e);
    c[static_cast<std::size_t>(e)] = term;
  }
  return Polynomial(std::move(c));
}

Polynomial Mfrak(const Rational& p, const Rational& q, long upsilon, long n) {
  require_degree(n);
  require_upsilon(upsilon);
  const Rational v(upsilon);
  const Polynomial one_plus_x = Polynomial::linear(1, 1);
  Polynomial out;
  for (long r = 0; r <= n; ++r) {
    Rational inner(0);
    for (long s = 0; s <= r; ++s) {
      inner += sign_of(s) * choose(r, s) * pochhammer((Rational(s + 1) + q) / v, n);
    }
    if (inner.is_zero()) continue;
    const Rational coef = sign_of(n) * pochhammer(p + q - Rational(n), r) / factorial(r) * inner;
    if (coef.is_zero()) continue;
    out += Polynomial::monomial(coef, r) * one_plus_x.pow(n - r);
  }
  return out;
}

Polynomial Z(const Rational& gamma, long upsilon, long n) {
  require_degree(n);
  require_upsilon(upsilon);
  // Gamma(vn+g+1)/Gamma(vj+g+1) = (g+1+vj)_{v(n-j)}
  std::vector<Rational> c(static_cast<std::size_t>(upsilon * n) + 1);
  const Rational inv_fact = Rational(1) / factorial(n);
  for (long j = 0; j <= n; ++j) {
    const long e = upsilon * j;
    c[static_cast<std::size_t>(e)] =
        inv_fact * sign_of(j) * choose(n, j) * pochhammer(gamma + Rational(1 + e), upsilon * (n - j));
  }
  return Polynomial(std::move(c));
}

Polynomial Y(const Rational& gamma, long upsilon, long n) {
  require_degree(n);
  require_upsilon(upsilon);
  const Rational v(upsilon);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational inv_fact = Rational(1) / factorial(n);
  for (long r = 0; r <= n; ++r) {
    Rational inner(0);
    for (long j = 0; j <= r; ++j) {
      inner += sign_of(j) * choose(r, j) * pochhammer((Rational(1 + j) + gamma) / v, n);
    }
    c[static_cast<std::size_t>(r)] = inv_fact * inner / factorial(r);
  }
  return Polynomial(std::move(c));
}

Polynomial J(const Rational& p, const Rational& q, long upsilon, long n) {
  require_degree(n);
  require_upsilon(upsilon);
  // Work in y = (1-x)/2, then substitute y = 1/2 - x/2.
  std::vector<Rational> c(static_cast<std::size_t>(upsilon * n) + 1);
  const Rational inv_fact = Rational(1) / factorial(n);
  for (long j = 0; j <= n; ++j) {
    const long e = upsilon * j;
    c[static_cast<std::size_t>(e)] = inv_fact * sign_of(j) * choose(n, j) *
                                     pochhammer(Rational(1 + e) + p, upsilon * (n - j)) *
                                     pochhammer(Rational(1 + n) + p + q, e);
  }
  return Polynomial(std::move(c)).substitute_linear(Rational(1, 2), Rational(-1, 2));
}

Polynomial K(const Rational& p, const Rational& q, long upsilon, long n) {
  require_degree(n);
  require_upsilon(upsilon);
  const Rational v(upsilon);
  const Polynomial xm = Polynomial::linear(Rational(-1, 2), Rational(1, 2));
  const Polynomial xp = Polynomial::linear(Rational(1, 2), Rational(1, 2));
  Polynomial out;
  const Rational inv_fact = Rational(1) / factorial(n);
  for (long r = 0; r <= n; ++r) {
    Rational inner(0);
    for (long s = 0; s <= r; ++s) {
      inner += sign_of(s) * choose(r, s) * pochhammer((Rational(s + 1) + p) / v, n);
    }
    // (1+q)_n / (1+q)_{n-r} = (1+q+n-r)_r
    const Rational coef =
        sign_of(r) * inv_fact / factorial(r) * pochhammer(Rational(1 + n - r) + q, r) * inner;
    if (coef.is_zero()) continue;
    out += coef * xm.pow(r) * xp.pow(n - r);
  }
  return out;
}

Polynomial classic_M(const Rational& p, const Rational& q, long n) {
  require_degree(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational a = p - Rational(n + 1);
  const Rational b = q + Rational(n);
  for (long j = 0; j <= n; ++j) {
    c[static_cast<std::size_t>(j)] =
        sign_of(n + j) * factorial(n) * binomial(a, j) * binomial(b, n - j);
  }
  return Polynomial(std::move(c));
}

}  // namespace unchecked

Polynomial make_M(const ParamSet& params, long n) {
  if (auto why = params.violation(); !why.empty()) throw ConstraintError(why);
  if (n < 0 || n > params.n_max) throw ConstraintError("n must lie in [0, N]");
  return unchecked::M(params.p, params.q, params.upsilon, n);
}

Polynomial make_Mfrak(const ParamSet& params, long n) {
  if (auto why = params.violation(); !why.empty()) throw ConstraintError(why);
  if (n < 0 || n > params.n_max) throw ConstraintError("n must lie in [0, N]");
  return unchecked::Mfrak(params.p, params.q, params.upsilon, n);
}

Polynomial make_konhauser_Z(const Rational& gamma, long upsilon, long n) {
  if (gamma <= Rational(-1)) throw ConstraintError("gamma must exceed -1");
  return unchecked::Z(gamma, upsilon, n);
}

Polynomial make_konhauser_Y(const Rational& gamma, long upsilon, long n) {
  if (gamma <= Rational(-1)) throw ConstraintError("gamma must exceed -1");
  return unchecked::Y(gamma, upsilon, n);
}

Polynomial make_jacobi_J(const Rational& p, const Rational& q, long upsilon, long n) {
  if (p <= Rational(-1) || q <= Rational(-1)) throw ConstraintError("p and q must exceed -1");
  return unchecked::J(p, q, upsilon, n);
}

Polynomial make_jacobi_K(const Rational& p, const Rational& q, long upsilon, long n) {
  if (p <= Rational(-1) || q <= Rational(-1)) throw ConstraintError("p and q must exceed -1");
  return unchecked::K(p, q, upsilon, n);
}

Polynomial make_classic_M(const Rational& p, const Rational& q, long n) {
  if (n < 0) throw ConstraintError("degree index n must be nonnegative");
  if (q <= Rational(-1)) throw ConstraintError("q must exceed -1");
  if (p <= Rational(2 * n + 1)) throw ConstraintError("p must exceed 2n+1");
  return unchecked::classic_M(p, q, n);
}

Polynomial hyp_terminating(const std::vector<Rational>& numer, const std::vector<Rational>& denom,
                           const Polynomial& arg, long n_trunc) {
  std::optional<long> stop;
  for (const auto& a : numer) {
    if (a.is_nonpositive_integer()) {
      const long k = -a.to_long();
      if (k <= n_trunc) stop = stop ? std::min(*stop, k) : k;
    }
  }
  if (!stop) throw ConstraintError("hypergeometric sum does not terminate within the truncation");
  Polynomial out;
  Polynomial power(Rational(1));
  Rational coef(1);
  for (long j = 0; j <= *stop; ++j) {
    if (j > 0) {
      for (const auto& a : numer) coef *= a + Rational(j - 1);
      for (const auto& b : denom) {
        const Rational f = b + Rational(j - 1);
        if (f.is_zero()) throw PoleError("denominator parameter " + b.to_string() + " reaches a pole");
        coef /= f;
      }
      coef /= Rational(j);
      power *= arg;
    }
    if (!coef.is_zero()) out += power * coef;
  }
  return out;
}

}  // namespace biortho
