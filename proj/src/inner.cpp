#include "biortho/inner.hpp"

#include <climits>
#include <cmath>

#include "biortho/errors.hpp"
#include "biortho/scalar.hpp"

namespace biortho {

WeightSpec WeightSpec::m_weight(const Rational& p, const Rational& q) {
  WeightSpec w;
  w.kind = WeightKind::MWeight;
  w.p = p;
  w.q = q;
  return w;
}

WeightSpec WeightSpec::laguerre(const Rational& gamma) {
  WeightSpec w;
  w.kind = WeightKind::Laguerre;
  w.gamma = gamma;
  return w;
}

WeightSpec WeightSpec::jacobi(const Rational& p, const Rational& q) {
  WeightSpec w;
  w.kind = WeightKind::Jacobi;
  w.p = p;
  w.q = q;
  return w;
}

long WeightSpec::max_moment_order() const {
  if (kind != WeightKind::MWeight) return LONG_MAX;
  // largest integer k with k < p - 1
  const Rational bound = p - Rational(1);
  return bound.is_integer() ? bound.to_long() - 1 : bound.floor();
}

namespace {

bool is_positive_integer(const Rational& r) { return r.is_integer() && r.sign() > 0; }

double lgamma_of(const Rational& r) { return std::lgamma(r.to_double()); }

}  // namespace

MassToken weight_mass(const WeightSpec& w) {
  MassToken t;
  switch (w.kind) {
    case WeightKind::MWeight: {
      const Rational a = w.q + Rational(1);
      const Rational b = w.p - Rational(1);
      t.symbol = "B(" + a.to_string() + "," + b.to_string() + ")";
      if (is_positive_integer(a) && is_positive_integer(b)) {
        t.exact = factorial(a.to_long() - 1) * factorial(b.to_long() - 1) / factorial(a.to_long() + b.to_long() - 1);
      }
      t.approx = std::exp(lgamma_of(a) + lgamma_of(b) - lgamma_of(a + b));
      break;
    }
    case WeightKind::Laguerre: {
      const Rational a = w.gamma + Rational(1);
      t.symbol = "Gamma(" + a.to_string() + ")";
      if (is_positive_integer(a)) t.exact = factorial(a.to_long() - 1);
      t.approx = std::exp(lgamma_of(a));
      break;
    }
    case WeightKind::Jacobi: {
      const Rational a = w.p + Rational(1);
      const Rational b = w.q + Rational(1);
      t.symbol = "2^(" + (a + b - Rational(1)).to_string() + ")*B(" + a.to_string() + "," + b.to_string() + ")";
      if (is_positive_integer(a) && is_positive_integer(b)) {
        t.exact = Rational(2).pow(a.to_long() + b.to_long() - 1) * factorial(a.to_long() - 1) *
                  factorial(b.to_long() - 1) / factorial(a.to_long() + b.to_long() - 1);
      }
      t.approx = std::exp((a + b - Rational(1)).to_double() * std::log(2.0) + lgamma_of(a) + lgamma_of(b) -
                          lgamma_of(a + b));
      break;
    }
  }
  return t;
}

MomentTable::MomentTable(WeightSpec weight, long order) : weight_(std::move(weight)) {
  if (order < 0) return;
  if (order > weight_.max_moment_order()) {
    throw DivergentMoment("moment of order " + std::to_string(order) + " diverges (needs order < p-1)");
  }
  moments_.reserve(static_cast<std::size_t>(order) + 1);
  switch (weight_.kind) {
    case WeightKind::MWeight:
      for (long k = 0; k <= order; ++k) {
        moments_.push_back(beta_moment_ratio(weight_.q + Rational(1), weight_.p - Rational(1), k, -k));
      }
      break;
    case WeightKind::Laguerre:
      for (long k = 0; k <= order; ++k) moments_.push_back(pochhammer(weight_.gamma + Rational(1), k));
      break;
    case WeightKind::Jacobi: {
      // x = 2v - 1 with v = (1+x)/2 distributed as Beta(q+1, p+1)
      std::vector<Rational> v;
      for (long i = 0; i <= order; ++i) {
        v.push_back(beta_moment_ratio(weight_.q + Rational(1), weight_.p + Rational(1), i, 0));
      }
      for (long k = 0; k <= order; ++k) {
        Rational acc(0);
        for (long i = 0; i <= k; ++i) {
          Rational term = binomial(Rational(k), i) * Rational(2).pow(i) * v[static_cast<std::size_t>(i)];
          acc += ((k - i) % 2 == 0) ? term : -term;
        }
        moments_.push_back(acc);
      }
      break;
    }
  }
}

const Rational& MomentTable::operator[](long k) const {
  if (k < 0 || k > order()) throw std::out_of_range("moment index outside the table");
  return moments_[static_cast<std::size_t>(k)];
}

Rational jacobi_mixed_moment(const Rational& p, const Rational& q, long a, long b) {
  Rational two_pow = (a + b >= 0) ? Rational(2).pow(a + b) : Rational(1) / Rational(2).pow(-(a + b));
  return two_pow * beta_moment_ratio(p + Rational(1), q + Rational(1), a, b);
}

std::optional<Rational> InnerValue::absolute() const {
  if (!mass.exact) return std::nullopt;
  return normalized * *mass.exact;
}

Rational inner_normalized(const MomentTable& table, const Polynomial& f, const Polynomial& g) {
  const Polynomial h = f * g;
  Rational acc(0);
  for (long k = 0; k <= h.degree(); ++k) {
    const Rational c = h.coeff(k);
    if (!c.is_zero()) acc += c * table[k];
  }
  return acc;
}

InnerValue inner(const WeightSpec& w, const Polynomial& f, const Polynomial& g) {
  const long deg = (f.is_zero() || g.is_zero()) ? 0 : f.degree() + g.degree();
  MomentTable table(w, deg);
  return {inner_normalized(table, f, g), weight_mass(w)};
}

Rational mort_rhs_normalized(const Rational& p, const Rational& q, long upsilon, long n) {
  // n! G(p-n) G(q+1+vn) / ((p-1-n-vn) G(p+q-n)) over G(q+1) G(p-1) / G(p+q)
  const Rational denom = p - Rational(1 + n + upsilon * n);
  if (denom.is_zero()) throw PoleError("p - 1 - n - vn vanishes");
  return factorial(n) * gamma_ratio(p - Rational(1), 1 - n) * pochhammer(q + Rational(1), upsilon * n) *
         pochhammer(p + q - Rational(n), n) / denom;
}

Rational konhauser_rhs_normalized(const Rational& gamma, long upsilon, long n) {
  return pochhammer(gamma + Rational(1), upsilon * n) / factorial(n);
}

Rational jacobi_rhs_normalized(const Rational& p, const Rational& q, long upsilon, long n) {
  // G(p+vn+1) G(q+n+1) / (n! G(p+q+n+1) (p+q+vn+n+1)) over G(p+1) G(q+1) / G(p+q+2)
  const Rational denom = p + q + Rational(upsilon * n + n + 1);
  if (denom.is_zero()) throw PoleError("p + q + vn + n + 1 vanishes");
  return pochhammer(p + Rational(1), upsilon * n) * pochhammer(q + Rational(1), n) *
         gamma_ratio(p + q + Rational(n + 1), 1 - n) / (factorial(n) * denom);
}

namespace {

void divergent(IdentityReport& rep, const std::string& why) {
  rep.verdict = Verdict::Divergent;
  rep.note(why);
}

void settle_exact(IdentityReport& rep, const Rational& residual) {
  if (!residual.is_zero() && std::get<Rational>(rep.residual).is_zero()) rep.residual = residual;
  if (!residual.is_zero()) rep.verdict = Verdict::Fail;
}

}  // namespace

IdentityReport verify_Mort(const ParamSet& params, long n, long m) {
  IdentityReport rep;
  rep.id = "mort";
  rep.mode = Mode::ExactScalar;
  rep.add_sample(sample({{"p", params.p}, {"q", params.q}, {"upsilon", Rational(params.upsilon)},
                         {"n", Rational(n)}, {"m", Rational(m)}}));
  if (auto why = params.violation(); !why.empty()) rep.note("outside the admissible region: " + why);
  const auto w = WeightSpec::m_weight(params.p, params.q);
  const Polynomial f = unchecked::M(params.p, params.q, params.upsilon, n);
  const Polynomial g = unchecked::Mfrak(params.p, params.q, params.upsilon, m);
  InnerValue lhs;
  try {
    lhs = inner(w, f, g);
  } catch (const DivergentMoment& e) {
    divergent(rep, e.what());
    return rep;
  }
  const Rational rhs = (n == m) ? mort_rhs_normalized(params.p, params.q, params.upsilon, n) : Rational(0);
  settle_exact(rep, lhs.normalized - rhs);
  rep.note("values are divided by the mass " + lhs.mass.symbol);
  if (auto abs = lhs.absolute()) rep.note("absolute value " + abs->to_string());
  return rep;
}

IdentityReport verify_monomial_conditions(const ParamSet& params, long n) {
  IdentityReport rep;
  rep.id = "monomial-conditions";
  rep.mode = Mode::ExactScalar;
  const long v = params.upsilon;
  rep.add_sample(sample({{"p", params.p}, {"q", params.q}, {"upsilon", Rational(v)}, {"n", Rational(n)}}));
  if (n == 0) {
    rep.note("n = 0: no lower-degree conditions to check");
  }
  const auto w = WeightSpec::m_weight(params.p, params.q);
  const Polynomial mn = unchecked::M(params.p, params.q, v, n);
  const Polynomial mf = unchecked::Mfrak(params.p, params.q, v, n);
  try {
    MomentTable table(w, std::max(mn.degree() + n, mf.degree() + v * n));
    for (long j = 0; j <= n; ++j) {
      const Rational a = inner_normalized(table, mn, Polynomial::monomial(1, j));
      const Rational b = inner_normalized(table, mf, Polynomial::monomial(1, v * j));
      if (j < n) {
        settle_exact(rep, a);
        settle_exact(rep, b);
      } else if (a.is_zero() || b.is_zero()) {
        rep.verdict = Verdict::Fail;
        rep.note("diagonal value vanishes at j = n");
      }
    }
  } catch (const DivergentMoment& e) {
    divergent(rep, e.what());
  }
  return rep;
}

IdentityReport verify_konhauser(const Rational& gamma, long upsilon, long n, long m) {
  IdentityReport rep;
  rep.id = "konhauser-biort";
  rep.mode = Mode::ExactScalar;
  rep.add_sample(sample({{"gamma", gamma}, {"upsilon", Rational(upsilon)}, {"n", Rational(n)}, {"m", Rational(m)}}));
  const auto w = WeightSpec::laguerre(gamma);
  const InnerValue lhs = inner(w, make_konhauser_Z(gamma, upsilon, n), make_konhauser_Y(gamma, upsilon, m));
  const Rational rhs = (n == m) ? konhauser_rhs_normalized(gamma, upsilon, n) : Rational(0);
  settle_exact(rep, lhs.normalized - rhs);
  rep.note("values are divided by the mass " + lhs.mass.symbol);
  if (auto abs = lhs.absolute()) rep.note("absolute value " + abs->to_string());
  return rep;
}

IdentityReport verify_jacobi_biorth(const Rational& p, const Rational& q, long upsilon, long n, long m) {
  IdentityReport rep;
  rep.id = "jacobi-biort";
  rep.mode = Mode::ExactScalar;
  rep.add_sample(sample({{"p", p}, {"q", q}, {"upsilon", Rational(upsilon)}, {"n", Rational(n)}, {"m", Rational(m)}}));
  const auto w = WeightSpec::jacobi(p, q);
  const InnerValue lhs = inner(w, make_jacobi_J(p, q, upsilon, n), make_jacobi_K(p, q, upsilon, m));
  const Rational rhs = (n == m) ? jacobi_rhs_normalized(p, q, upsilon, n) : Rational(0);
  settle_exact(rep, lhs.normalized - rhs);
  rep.note("values are divided by the mass " + lhs.mass.symbol);
  if (auto abs = lhs.absolute()) rep.note("absolute value " + abs->to_string());
  return rep;
}

IdentityReport verify_classic_orth(const Rational& p, const Rational& q, long n, long m) {
  IdentityReport rep;
  rep.id = "classic-orth";
  rep.mode = Mode::ExactScalar;
  rep.add_sample(sample({{"p", p}, {"q", q}, {"n", Rational(n)}, {"m", Rational(m)}}));
  const auto w = WeightSpec::m_weight(p, q);
  InnerValue lhs;
  try {
    lhs = inner(w, unchecked::classic_M(p, q, n), unchecked::classic_M(p, q, m));
  } catch (const DivergentMoment& e) {
    divergent(rep, e.what());
    return rep;
  }
  const Rational rhs = (n == m) ? mort_rhs_normalized(p, q, 1, n) : Rational(0);
  settle_exact(rep, lhs.normalized - rhs);
  return rep;
}

}  // namespace biortho
