#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "biortho/polynomial.hpp"
#include "biortho/rational.hpp"

namespace biortho {

/// (p, q, upsilon) together with the largest degree index N the caller will
/// request. Construction through make() enforces q > -1, upsilon >= 1 and
/// p > (upsilon + 1) N + 1.
struct ParamSet {
  Rational p;
  Rational q;
  long upsilon = 1;
  long n_max = 0;

  static ParamSet make(const Rational& p, const Rational& q, long upsilon, long n_max);
  /// Returns an empty string when valid, otherwise the reason.
  [[nodiscard]] std::string violation() const;
};

enum class FamilyId { M, MFrak, KonhauserZ, KonhauserY, JacobiJ, JacobiK, ClassicM };

std::string_view family_name(FamilyId id);
/// Accepts the names printed by family_name plus a few aliases ("Mfrak", "Z", "Y", "J", "K").
FamilyId parse_family(std::string_view name);

Polynomial make_M(const ParamSet& params, long n);
Polynomial make_Mfrak(const ParamSet& params, long n);
Polynomial make_konhauser_Z(const Rational& gamma, long upsilon, long n);
Polynomial make_konhauser_Y(const Rational& gamma, long upsilon, long n);
Polynomial make_jacobi_J(const Rational& p, const Rational& q, long upsilon, long n);
Polynomial make_jacobi_K(const Rational& p, const Rational& q, long upsilon, long n);
Polynomial make_classic_M(const Rational& p, const Rational& q, long n);

/// The same constructors without parameter validation. The audit engine uses
/// them to test identities as polynomial identities in p and q, which hold
/// outside the biorthogonality region. All of them are polynomial in the
/// parameters (no division by a parameter-dependent quantity), so any
/// rational input is safe.
namespace unchecked {
Polynomial M(const Rational& p, const Rational& q, long upsilon, long n);
Polynomial Mfrak(const Rational& p, const Rational& q, long upsilon, long n);
Polynomial Z(const Rational& gamma, long upsilon, long n);
Polynomial Y(const Rational& gamma, long upsilon, long n);
Polynomial J(const Rational& p, const Rational& q, long upsilon, long n);
Polynomial K(const Rational& p, const Rational& q, long upsilon, long n);
Polynomial classic_M(const Rational& p, const Rational& q, long n);
}  // namespace unchecked

/// Terminating generalized hypergeometric sum
///   sum_j prod (numer)_j / prod (denom)_j * arg^j / j!
/// stopping at the first numerator parameter -k (0 <= k <= n_trunc).
/// Throws ConstraintError if no numerator terminates within n_trunc and
/// PoleError if a denominator Pochhammer vanishes before termination.
Polynomial hyp_terminating(const std::vector<Rational>& numer, const std::vector<Rational>& denom,
                           const Polynomial& arg, long n_trunc);

/// (-x)^k as a polynomial.
Polynomial neg_x_pow(long k);

}  // namespace biortho
