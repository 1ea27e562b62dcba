#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biortho/families.hpp"
#include "biortho/polynomial.hpp"
#include "biortho/rational.hpp"
#include "biortho/report.hpp"

namespace biortho {

enum class WeightKind {
  MWeight,   // x^q (1+x)^-(p+q) on (0, inf)
  Laguerre,  // x^g e^-x on (0, inf)
  Jacobi,    // (1-x)^p (1+x)^q on (-1, 1)
};

struct WeightSpec {
  WeightKind kind = WeightKind::MWeight;
  Rational p;      // MWeight, Jacobi
  Rational q;      // MWeight, Jacobi
  Rational gamma;  // Laguerre

  static WeightSpec m_weight(const Rational& p, const Rational& q);
  static WeightSpec laguerre(const Rational& gamma);
  static WeightSpec jacobi(const Rational& p, const Rational& q);

  /// Largest k whose moment converges (LONG_MAX when every moment exists,
  /// negative when none does).
  [[nodiscard]] long max_moment_order() const;
};

/// The total mass m_0 of a weight. It is transcendental in general, so it is
/// carried as a symbolic token; `exact` is filled when the parameters make it
/// rational (integer p, q or gamma).
struct MassToken {
  std::string symbol;
  std::optional<Rational> exact;
  double approx = 0.0;
};

MassToken weight_mass(const WeightSpec& w);

/// Normalized moments m_k / m_0 for k = 0..order.
class MomentTable {
 public:
  MomentTable(WeightSpec weight, long order);

  [[nodiscard]] const WeightSpec& weight() const { return weight_; }
  [[nodiscard]] long order() const { return static_cast<long>(moments_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](long k) const;
  [[nodiscard]] const std::vector<Rational>& normalized_moments() const { return moments_; }

 private:
  WeightSpec weight_;
  std::vector<Rational> moments_;
};

/// (1-x)^(p+a)(1+x)^(q+b) integrated over (-1,1), divided by the a=b=0 value:
/// 2^(a+b) B(p+a+1, q+b+1) / B(p+1, q+1).
Rational jacobi_mixed_moment(const Rational& p, const Rational& q, long a, long b);

struct InnerValue {
  Rational normalized;  // <f, g> / m_0
  MassToken mass;
  /// normalized * m_0 when the mass is rational.
  [[nodiscard]] std::optional<Rational> absolute() const;
};

/// Exact <f, g> against the weight. Throws DivergentMoment when
/// deg f + deg g reaches the integrability bound of M_WEIGHT.
InnerValue inner(const WeightSpec& w, const Polynomial& f, const Polynomial& g);
/// Same with a prebuilt table (must cover deg f + deg g).
Rational inner_normalized(const MomentTable& table, const Polynomial& f, const Polynomial& g);

/// Right side of the M / Mfrak relation at n = m, divided by B(q+1, p-1).
Rational mort_rhs_normalized(const Rational& p, const Rational& q, long upsilon, long n);
/// Right side of the Konhauser relation at n = m, divided by Gamma(g+1).
Rational konhauser_rhs_normalized(const Rational& gamma, long upsilon, long n);
/// Right side of the J / K relation at n = m, divided by 2^(p+q+1) B(p+1, q+1).
Rational jacobi_rhs_normalized(const Rational& p, const Rational& q, long upsilon, long n);

IdentityReport verify_Mort(const ParamSet& params, long n, long m);
IdentityReport verify_monomial_conditions(const ParamSet& params, long n);
IdentityReport verify_konhauser(const Rational& gamma, long upsilon, long n, long m);
IdentityReport verify_jacobi_biorth(const Rational& p, const Rational& q, long upsilon, long n, long m);
/// Orthogonality of the classical finite M^(p,q)_n against the same weight.
IdentityReport verify_classic_orth(const Rational& p, const Rational& q, long n, long m);

}  // namespace biortho
