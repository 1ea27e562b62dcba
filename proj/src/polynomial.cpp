#include "biortho/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "biortho/scalar.hpp"

namespace biortho {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& c, long k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial{a, b}; }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(long k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw std::invalid_argument("polynomial power: negative exponent");
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= g;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::substitute_linear(const Rational& a, const Rational& b) const {
  return compose(Polynomial::linear(a, b));
}

Polynomial Polynomial::shift_up(long k) const {
  if (k < 0) throw std::invalid_argument("shift_up: negative shift");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::divided_by(const Rational& c) const {
  if (c.is_zero()) throw DivisionByZero();
  Polynomial r = *this;
  for (auto& a : r.coeffs_) a /= c;
  return r;
}

Rational Polynomial::max_abs_coeff() const {
  Rational m(0);
  for (const auto& a : coeffs_) m = std::max(m, a.abs());
  return m;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (long k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    const Rational shown = first ? c : c.abs();
    first = false;
    if (k == 0) {
      os << shown;
    } else {
      if (shown != Rational(1)) os << shown << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os;
}

Polynomial poly_derivative(const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Rational> v(static_cast<std::size_t>(f.degree()));
  for (long k = 1; k <= f.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = f.coeff(k) * Rational(k);
  return Polynomial(std::move(v));
}

Polynomial poly_integrate(const Polynomial& f) {
  if (f.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(f.degree()) + 2);
  for (long k = 0; k <= f.degree(); ++k) v[static_cast<std::size_t>(k + 1)] = f.coeff(k) / Rational(k + 1);
  return Polynomial(std::move(v));
}

Polynomial theta_shifted_product(const Polynomial& f, const Rational& a, long upsilon) {
  if (upsilon < 1) throw std::invalid_argument("theta_shifted_product: upsilon must be >= 1");
  std::vector<Rational> v(f.coefficients().begin(), f.coefficients().end());
  for (long k = 0; k < static_cast<long>(v.size()); ++k) {
    auto& c = v[static_cast<std::size_t>(k)];
    if (!c.is_zero()) c *= pochhammer(Rational(k) + a, upsilon);
  }
  return Polynomial(std::move(v));
}

Polynomial theta(const Polynomial& f) {
  std::vector<Rational> v(f.coefficients().begin(), f.coefficients().end());
  for (long k = 0; k < static_cast<long>(v.size()); ++k) v[static_cast<std::size_t>(k)] *= Rational(k);
  return Polynomial(std::move(v));
}

}  // namespace biortho
