#include "biortho/scalar.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace biortho {

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational out(1);
  Rational factor = a;
  for (long i = 0; i < k; ++i) {
    out *= factor;
    if (out.is_zero()) return out;
    factor += Rational(1);
  }
  return out;
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(const Rational& a, long j) {
  if (j < 0) return Rational(0);
  Rational r = pochhammer(-a, j) / factorial(j);
  return (j % 2 == 0) ? r : -r;
}

std::vector<Rational> delta_params(long upsilon, const Rational& gamma) {
  if (upsilon < 1) throw std::invalid_argument("delta_params: upsilon must be >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(upsilon));
  const Rational v(upsilon);
  for (long i = 0; i < upsilon; ++i) out.push_back((gamma + Rational(i)) / v);
  return out;
}

Rational gamma_ratio(const Rational& a, long k) {
  if (a.is_nonpositive_integer()) {
    throw PoleError("Gamma pole at argument " + a.to_string());
  }
  const Rational shifted = a + Rational(k);
  if (shifted.is_nonpositive_integer()) {
    throw PoleError("Gamma pole at shifted argument " + shifted.to_string());
  }
  if (k >= 0) return pochhammer(a, k);
  return Rational(1) / pochhammer(shifted, -k);
}

Rational beta_moment_ratio(const Rational& a, const Rational& b, long j, long k) {
  // B(a+j, b+k)/B(a, b) = [G(a+j)/G(a)] [G(b+k)/G(b)] / [G(a+b+j+k)/G(a+b)]
  const Rational num = gamma_ratio(a, j) * gamma_ratio(b, k);
  const Rational den = gamma_ratio(a + b, j + k);
  return num / den;
}

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

ComplexF lanczos_log_gamma(ComplexF z) {
  z -= 1.0;
  ComplexF x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const ComplexF t = z + kLanczosG + 0.5;
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(w) up to a multiple of 2*pi*i, without overflow for large |Im w|.
ComplexF log_sin(ComplexF w) {
  const ComplexF i(0.0, 1.0);
  if (std::abs(w.imag()) < 30.0) return std::log(std::sin(w));
  if (w.imag() > 0.0) {
    return -i * w + ComplexF(-std::log(2.0), std::numbers::pi / 2) + std::log(1.0 - std::exp(2.0 * i * w));
  }
  return i * w + ComplexF(-std::log(2.0), -std::numbers::pi / 2) + std::log(1.0 - std::exp(-2.0 * i * w));
}

}  // namespace

ComplexF log_gamma_complex(ComplexF z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
    throw PoleError("log Gamma pole at " + std::to_string(z.real()));
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);

  const double pi = std::numbers::pi;
  ComplexF value = std::log(pi) - log_sin(pi * z) - lanczos_log_gamma(1.0 - z);

  // Branch: Im log Gamma(z) = Im log Gamma(z + k) - sum_j arg(z + j).
  const long k = static_cast<long>(std::ceil(0.5 - z.real()));
  double target = lanczos_log_gamma(z + static_cast<double>(k)).imag();
  for (long j = 0; j < k; ++j) target -= std::arg(z + static_cast<double>(j));
  const double turns = std::round((target - value.imag()) / (2.0 * pi));
  value.imag(value.imag() + 2.0 * pi * turns);
  return value;
}

ComplexF pochhammer(ComplexF a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  ComplexF out(1.0, 0.0);
  for (long i = 0; i < k; ++i) out *= a + static_cast<double>(i);
  return out;
}

}  // namespace biortho
