#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "biortho/polynomial.hpp"
#include "biortho/rational.hpp"

namespace biortho {

enum class Mode { ExactPoly, ExactScalar, NumericSeries, NumericLimit };
enum class Verdict { Pass, Fail, Divergent };

std::string_view mode_name(Mode m);
std::string_view verdict_name(Verdict v);

using ParamSample = std::vector<std::pair<std::string, std::string>>;
using Residual = std::variant<Rational, Polynomial, double>;

/// Outcome of checking one claim. Exact modes pass iff the residual is
/// identically zero; numeric modes pass iff |residual| <= tolerance.
struct ResidualReport {
  static constexpr std::size_t kMaxStoredSamples = 100;

  std::string id;
  std::string variant;
  std::vector<ParamSample> params;
  std::size_t sample_count = 0;
  Mode mode = Mode::ExactScalar;
  Residual residual = Rational(0);
  Verdict verdict = Verdict::Pass;
  double tolerance = 0.0;
  std::vector<std::string> notes;

  /// Records a parameter point; only the first kMaxStoredSamples are kept.
  void add_sample(ParamSample s);
  void note(std::string text) { notes.push_back(std::move(text)); }

  [[nodiscard]] bool residual_is_zero() const;
  [[nodiscard]] double residual_magnitude() const;
  [[nodiscard]] bool passed() const { return verdict == Verdict::Pass; }
};

using IdentityReport = ResidualReport;

/// Builds a ParamSample from alternating name/value pairs.
ParamSample sample(std::initializer_list<std::pair<std::string, Rational>> values);

/// ["num","den"] for a rational.
nlohmann::json rational_json(const Rational& r);
/// Exact residuals become ["num","den"] (or a list of them for polynomials,
/// ascending degree); numeric residuals become a decimal string.
nlohmann::json residual_repr(const Residual& r);
nlohmann::json report_json(const ResidualReport& r);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

}  // namespace biortho
