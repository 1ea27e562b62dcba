#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace biortho {

/// Raised when a Rational is divided by zero. Zero denominators always
/// signal a parameter-constraint violation upstream, so they never saturate.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by a zero rational") {}
};

/// Exact rational number in lowest terms with a positive denominator.
/// Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : v_(integer) {}
  explicit Rational(const mpq_class& value);

  /// Parses "a", "a/b", or a decimal literal such as "-0.125" or "2.5e-3".
  /// Decimal input is converted exactly (0.1 becomes 1/10).
  static Rational parse(std::string_view text);

  /// Exact conversion of a finite double (binary expansion, no rounding).
  static Rational from_double(double value);

  [[nodiscard]] std::string numerator_string() const { return v_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_string() const { return v_.get_den().get_str(); }
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] const mpz_class& numerator() const { return v_.get_num(); }
  [[nodiscard]] const mpz_class& denominator() const { return v_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return v_; }

  [[nodiscard]] double to_double() const { return v_.get_d(); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  /// True for 0, -1, -2, ... (the poles of the Gamma function).
  [[nodiscard]] bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

  /// Largest integer not exceeding the value. Throws if it does not fit.
  [[nodiscard]] long floor() const;
  /// Integer value; throws std::domain_error unless is_integer() and it fits.
  [[nodiscard]] long to_long() const;

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational pow(long exponent) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

}  // namespace biortho
