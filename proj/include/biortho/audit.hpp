#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "biortho/rational.hpp"
#include "biortho/report.hpp"
#include "biortho/transforms.hpp"

namespace biortho {

// Single-point checks. Each returns a report for one parameter point with an
// exact residual; the registry below sweeps them over sampled parameters.

/// D M_n against the derivative formula. Needs n >= 1.
ResidualReport check_derivative_relation_15(const Rational& p, const Rational& q, long v, long n, Variant variant);
/// x D M_n, first form. Needs n >= 1.
ResidualReport check_derivative_relation_16(const Rational& p, const Rational& q, long v, long n, Variant variant);
/// x D M_n, second form. Needs n >= 1.
ResidualReport check_derivative_relation_17(const Rational& p, const Rational& q, long v, long n, Variant variant);

ResidualReport check_mdifequ(const Rational& p, const Rational& q, long v, long n);

/// Recurrences for J_n with (x-1) D on the left.
ResidualReport check_jacobi_recurrence(const Rational& p, const Rational& q, long v, long n, int which);

enum class Connection {
  JMForward,
  JMInverse,
  JMInverseRepaired,
  KMForward,
  KMInverse,
  KMInverseRepaired,
  ClassicForward,
  ClassicInverse,
  Eq8
};
std::string_view connection_id(Connection c);
ResidualReport check_connection(Connection which, const Rational& p, const Rational& q, long v, long n);

enum class Konhauser { Z, Y };

/// Max coefficient deviation of M_n(p,q,v;x/p) from (-1)^n n! Z_n^(q)(x;v)
/// (or the second family against Y) at every p in the schedule. PASS iff
/// the deviations fall off like 1/p: each successive ratio is within 10% of
/// p_i/p_(i+1).
ResidualReport check_limit_relations(Konhauser which, const Rational& q, long v, long n,
                                     const std::vector<Rational>& schedule);

/// First case: M_n(n+1, q, v; x) against (-1)^n n! Z_n^(q)(-x; v).
/// Second case: the second family at p = n - q against Y, cleared of
/// the (1+x)^n denominators.
ResidualReport check_special_cases(Konhauser which, const Rational& q, long v, long n);

enum class OpForm { Series, HypPrinted, HypRepaired, Normalization };
/// Builds the operator side from the monomial x^q / Gamma(q+1) with exact
/// repeated integration and compares it to M_n. Series/Hyp forms compare
/// after restoring the common Gamma(q+1); Normalization compares the literal
/// statement at integer q >= 2 where Gamma(q+1) is rational.
ResidualReport check_operational_rep(const Rational& p, const Rational& q, long v, long n, OpForm form);

enum class GenFun { Eq13, Eq14, Mdog, Eq18, Mgen };
std::string_view genfun_id(GenFun g);

struct GenFunArgs {
  Rational p, q;
  long upsilon = 1;
  long order = 8;       // truncation T
  Rational x0{1, 2};    // evaluation point for the claims with fractional powers
  Rational zeta{1, 2};  // extra parameters of the Mgen claim
  Rational theta{1, 3};
};

/// Compares the two sides as truncated power series in t. Eq13/Eq14 are
/// exact in x; Eq18 and Mgen are exact at the rational point x0 (the
/// fractional powers are rewritten so every constant term is one). Mdog is
/// compared pointwise at t = 1/16 and 1/8 in double precision.
ResidualReport check_generating_function(GenFun which, const GenFunArgs& args);

/// Residual (left minus right) at each order t^0..t^T. Not available for Mdog.
std::vector<Polynomial> genfun_order_residuals(GenFun which, const GenFunArgs& args);

// Registry.

enum class Expectation { Pass, Fail, Record };
std::string_view expectation_name(Expectation e);

struct AuditConfig {
  std::uint64_t seed = 7;
  long n_max = 4;
  long trials = 50;
};

struct Claim {
  std::string id;
  Expectation expect;
  std::string summary;
  std::function<ResidualReport(const AuditConfig&)> run;
};

const std::vector<Claim>& claim_registry();
/// Throws ConstraintError for an unknown id.
const Claim& find_claim(std::string_view id);

struct ClaimOutcome {
  ResidualReport report;
  Expectation expect;
  bool drift = false;
};

struct AuditRun {
  std::vector<ClaimOutcome> outcomes;  // sorted by id
  bool drift = false;
  nlohmann::json json;
};

/// Runs the named claims (all of them for {"all"}) concurrently and builds
/// the JSON document. Deterministic for a given (ids, config).
AuditRun run_audit(const std::vector<std::string>& ids, const AuditConfig& config);

/// FNV-1a, used to derive a per-claim seed.
std::uint64_t fnv1a(std::string_view s);

/// Bounded draws by reduction modulo the range, so the stream is identical
/// across standard libraries.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  long integer(long lo, long hi);
  /// num/den with num in [lo*den, hi*den] and den in [1, max_den].
  Rational rational(long lo, long hi, long max_den = 12);
  /// Like rational() but strictly greater than lo.
  Rational above(long lo, long hi, long max_den = 12);

 private:
  std::mt19937_64 engine_;
};

}  // namespace biortho
