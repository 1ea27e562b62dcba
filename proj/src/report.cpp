#include "biortho/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace biortho {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::ExactPoly: return "EXACT_POLY";
    case Mode::ExactScalar: return "EXACT_SCALAR";
    case Mode::NumericSeries: return "NUMERIC_SERIES";
    case Mode::NumericLimit: return "NUMERIC_LIMIT";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Divergent: return "DIVERGENT";
  }
  return "?";
}

void ResidualReport::add_sample(ParamSample s) {
  ++sample_count;
  if (params.size() < kMaxStoredSamples) params.push_back(std::move(s));
}

bool ResidualReport::residual_is_zero() const {
  if (const auto* r = std::get_if<Rational>(&residual)) return r->is_zero();
  if (const auto* p = std::get_if<Polynomial>(&residual)) return p->is_zero();
  return std::get<double>(residual) == 0.0;
}

double ResidualReport::residual_magnitude() const {
  if (const auto* r = std::get_if<Rational>(&residual)) return std::abs(r->to_double());
  if (const auto* p = std::get_if<Polynomial>(&residual)) return p->max_abs_coeff().to_double();
  return std::abs(std::get<double>(residual));
}

ParamSample sample(std::initializer_list<std::pair<std::string, Rational>> values) {
  ParamSample s;
  for (const auto& [k, v] : values) s.emplace_back(k, v.to_string());
  return s;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json rational_json(const Rational& r) {
  return nlohmann::json::array({r.numerator_string(), r.denominator_string()});
}

nlohmann::json residual_repr(const Residual& r) {
  if (const auto* q = std::get_if<Rational>(&r)) return rational_json(*q);
  if (const auto* p = std::get_if<Polynomial>(&r)) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p->coefficients()) arr.push_back(rational_json(c));
    return arr;
  }
  return format_double(std::get<double>(r));
}

nlohmann::json report_json(const ResidualReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["variant"] = r.variant;
  auto params = nlohmann::json::array();
  for (const auto& s : r.params) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, v] : s) obj[k] = v;
    params.push_back(std::move(obj));
  }
  j["params"] = std::move(params);
  j["sample_count"] = r.sample_count;
  j["mode"] = std::string(mode_name(r.mode));
  j["residual_repr"] = residual_repr(r.residual);
  j["verdict"] = std::string(verdict_name(r.verdict));
  if (r.mode == Mode::NumericSeries || r.mode == Mode::NumericLimit) {
    j["tolerance"] = format_double(r.tolerance);
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace biortho
