#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "biortho/errors.hpp"
#include "biortho/quadrature.hpp"
#include "biortho/scalar.hpp"
#include "biortho/transforms.hpp"

using namespace biortho;

namespace {

ParamSet raw(const Rational& p, const Rational& q, long v, long n) { return ParamSet{p, q, v, n}; }

}  // namespace

TEST_CASE("gauss-kronrod basics") {
  const double v = integrate_gk<double>([](double x) { return std::exp(-x); }, 0.0, 40.0, 1e-14);
  CHECK(v == doctest::Approx(1.0 - std::exp(-40.0)).epsilon(1e-13));
  // integrable endpoint singularity
  const double s = integrate_gk<double>([](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0, 1e-11);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-10));
  const auto c = integrate_gk<std::complex<double>>(
      [](double x) { return std::complex<double>(std::cos(x), std::sin(x)); }, 0.0, M_PI, 1e-13);
  CHECK(std::abs(c - std::complex<double>(0.0, 2.0)) < 1e-12);
}

TEST_CASE("laplace closed form fixtures") {
  const auto n0 = laplace_closed_form(raw(8, 1, 2, 0), 0, 1, 2, Variant::Corrected);
  CHECK(n0.coefficient == Rational(1));
  CHECK(laplace_closed_form(raw(8, 1, 2, 0), 0, 1, 2, Variant::Printed).coefficient == Rational(1));

  const auto corr = laplace_closed_form(raw(8, 1, 2, 1), 1, 1, 2, Variant::Corrected);
  REQUIRE(corr.exact.has_value());
  CHECK(*corr.exact == Rational(39, 4));
  CHECK(corr.coefficient == Rational(39));
  const auto printed = laplace_closed_form(raw(8, 1, 2, 1), 1, 1, 2, Variant::Printed);
  CHECK(*printed.exact == Rational(21, 16));

  // termwise oracle: x (-6 + 30 x^2) -> -6 * 1!/2^2 + 30 * 3!/2^4
  const auto direct = laplace_of_polynomial(1, Polynomial{-6, 0, 30}, 2);
  CHECK(*direct.exact == Rational(39, 4));

  CHECK_THROWS_AS(laplace_closed_form(raw(8, 1, 2, 1), 1, 1, 0, Variant::Corrected), ConstraintError);
}

TEST_CASE("laplace corrected form equals termwise transform") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(1, 40), den(1, 5);
  for (int i = 0; i < 60; ++i) {
    const long v = 1 + i % 3, n = i % 4;
    const Rational p(num(rng) + 20, den(rng)), q(num(rng) - 4, den(rng) + 4), w(num(rng), den(rng));
    const Rational alpha(num(rng), den(rng));
    const auto closed = laplace_closed_form(raw(p, q, v, n), n, w, alpha, Variant::Corrected);
    const auto direct =
        laplace_of_polynomial(q, unchecked::M(p, q, v, n).substitute_linear(0, w), alpha);
    REQUIRE(closed.coefficient == direct.coefficient);
  }
}

TEST_CASE("laplace linearity") {
  const Rational q(1, 3), alpha(5, 2);
  const Polynomial f = unchecked::M(11, q, 2, 2), g = unchecked::M(11, q, 2, 1);
  const Rational a(3, 7), b(-2);
  CHECK(laplace_of_polynomial(q, f * a + g * b, alpha).coefficient ==
        a * laplace_of_polynomial(q, f, alpha).coefficient + b * laplace_of_polynomial(q, g, alpha).coefficient);
}

TEST_CASE("laplace quadrature cross-check") {
  const auto a = laplace_quadrature_check(raw(5, 0, 1, 0), 0, 1, 1);
  CHECK(std::abs(a.numeric - 1.0) <= 1e-10);
  const auto b = laplace_quadrature_check(raw(8, 1, 2, 1), 1, 1, 2);
  CHECK(b.relative_residual <= 1e-9);
  CHECK(b.closed == doctest::Approx(39.0 / 4.0));
  const auto c = laplace_quadrature_check(raw(10, Rational(1, 2), 2, 2), 2, Rational(1, 3), 1);
  CHECK(c.relative_residual <= 1e-8);
  const auto d = laplace_quadrature_check(raw(12, Rational(-1, 2), 1, 2), 2, Rational(1, 2), 3);
  CHECK(d.relative_residual <= 1e-8);
}

TEST_CASE("fractional integral fixtures") {
  const auto n0 = fractional_shift(raw(8, 0, 1, 0), 0, FracOrder::integral(1), 1);
  CHECK(n0.report.passed());
  REQUIRE(n0.prefactor_exact.has_value());
  CHECK(*n0.prefactor_exact == Rational(1));  // Gamma(1)/Gamma(2) at q = 0

  const Rational q(2, 3);
  const auto n0q = fractional_shift(raw(8, q, 1, 0), 0, FracOrder::integral(1), 1);
  CHECK(*n0q.prefactor_exact == Rational(1) / (q + Rational(1)));

  const auto half = fractional_shift(raw(8, 1, 2, 1), 1, FracOrder::integral(Rational(1, 2)), 1);
  CHECK(half.report.passed());
  REQUIRE(half.coefficient_ratios.size() == 2);
  CHECK(half.coefficient_ratios[0] == Rational(1));
  // (q+1)_2 / (q+3/2)_2 at q = 1: 2*3 / (5/2 * 7/2)
  CHECK(half.coefficient_ratios[1] == Rational(24, 35));
}

TEST_CASE("fractional derivative fixture") {
  const auto d = fractional_shift(raw(8, 0, 1, 1), 1, FracOrder::derivative(Rational(1, 2)), 1);
  CHECK(d.report.passed());
  CHECK(d.new_q == Rational(-1, 2));
  CHECK(d.prefactor_symbol == "Gamma(2)/Gamma(3/2)");
  CHECK_THROWS_AS(fractional_shift(raw(8, 0, 1, 0), 0, FracOrder::derivative(1), 1), PoleError);
}

TEST_CASE("fractional sweep, semigroup and integer collapse") {
  const Rational orders[] = {Rational(1, 2), Rational(1), Rational(3, 2)};
  for (long v = 1; v <= 2; ++v) {
    for (long n = 0; n <= 3; ++n) {
      const Rational p = Rational((v + 1) * n + 3, 1) + Rational(1, 3);
      for (const Rational& q : {Rational(2, 3), Rational(2), Rational(7, 2)}) {
        const auto ps = raw(p, q, v, n);
        for (const auto& mu : orders) {
          REQUIRE(fractional_shift(ps, n, FracOrder::integral(mu), Rational(3, 4)).report.passed());
          REQUIRE(fractional_shift(ps, n, FracOrder::derivative(mu), Rational(3, 4)).report.passed());
          for (const auto& mu2 : orders) {
            const auto step1 = fractional_shift(ps, n, FracOrder::integral(mu), 1);
            const auto step2 = fractional_shift(raw(p, q + mu, v, n), n, FracOrder::integral(mu2), 1);
            const auto both = fractional_shift(ps, n, FracOrder::integral(mu + mu2), 1);
            for (long j = 0; j <= n; ++j) {
              REQUIRE(step1.coefficient_ratios[j] * step2.coefficient_ratios[j] == both.coefficient_ratios[j]);
            }
            const auto lhs = GammaMonomials::from_weighted(q, unchecked::M(p, q, v, n)).integrate(mu).integrate(mu2);
            REQUIRE(lhs == both.lhs);
          }
        }
      }
    }
  }
  // integer collapse against ordinary calculus, q a nonnegative integer
  for (long n = 0; n <= 4; ++n) {
    for (long q = 0; q <= 2; ++q) {
      const Polynomial f = unchecked::M(Rational(41, 2), q, 2, n).shift_up(q);
      const auto g = GammaMonomials::from_weighted(q, unchecked::M(Rational(41, 2), q, 2, n));
      REQUIRE(g.apply(FracOrder::integral(1)).to_polynomial(q) == poly_integrate(f));
      REQUIRE(g.apply(FracOrder::derivative(1)).to_polynomial(q) == poly_derivative(f));
    }
  }
}
