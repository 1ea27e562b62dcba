#include "biortho/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace biortho {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::invalid_argument bad_literal(std::string_view text) {
  return std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) throw bad_literal(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw bad_literal(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw bad_literal(text);
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class value = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value) {
  if (v_.get_den() == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw bad_literal(text);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) throw bad_literal(text);
    mpz_class n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero();
    return Rational(mpq_class(n, d));
  }
  return parse_decimal(text);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot convert a non-finite double to Rational");
  mpq_class q(value);
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

long Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::domain_error("rational floor does not fit in long");
  return f.get_si();
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw std::domain_error("rational " + to_string() + " is not a machine integer");
  }
  return v_.get_num().get_si();
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero();
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace biortho
