#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "biortho/errors.hpp"
#include "biortho/fourier.hpp"

using namespace biortho;

namespace {

FourierParams all(long g, long v = 1) { return FourierParams::make(g, g, g, g, v); }

// int Gamma(a+ix)Gamma(b+ix)Gamma(c-ix)Gamma(d-ix) dx
double barnes(double a, double b, double c, double d) {
  return 2.0 * std::numbers::pi * std::tgamma(a + c) * std::tgamma(a + d) * std::tgamma(b + c) *
         std::tgamma(b + d) / std::tgamma(a + b + c + d);
}

}  // namespace

TEST_CASE("phi and chi fixtures") {
  const auto fp = all(2);
  CHECK(eval_phi(fp, 0, {0.3, 1.0}) == ComplexF(1.0, 0.0));
  CHECK(eval_chi(fp, 0, {0.3, 1.0}) == ComplexF(1.0, 0.0));
  CHECK(std::abs(eval_phi(fp, 1, 0.0) - ComplexF(0.25, 0.0)) < 1e-15);
  // reference values from an independent 30-digit summation
  CHECK(std::abs(eval_phi(fp, 1, {0.0, 1.0}) - ComplexF(0.625, 0.375)) < 1e-12);
  CHECK(std::abs(eval_chi(fp, 1, 0.0) - ComplexF(2.0 / 3.0, 0.0)) < 1e-12);
  // 1 - lambda1 - z = 0
  CHECK_THROWS_AS(eval_chi(fp, 1, ComplexF(-1.0, 0.0)), PoleError);
  CHECK_THROWS_AS(FourierParams::make(0, 1, 1, 1, 1), ConstraintError);
  CHECK_THROWS_AS(all(1).require_degree(1), ConstraintError);
}

TEST_CASE("phi term ratios at v = 1") {
  const auto fp = FourierParams::make(Rational(5, 2), 3, Rational(7, 3), Rational(3, 2), 1);
  const double g1 = 2.5, g2 = 3.0, l1 = 7.0 / 3.0, l2 = 1.5, z = 0.4;
  for (long n = 1; n <= 4; ++n) {
    double sum = 0.0, t = 1.0;
    for (long j = 0; j <= n; ++j) {
      sum += t;
      t *= (j - n) * (n - g2 - l1 + j) / ((g1 + l2 + j) * (1.0 - g2 - z + j) * (j + 1));
    }
    CHECK(eval_phi(fp, n, z).real() == doctest::Approx(sum).epsilon(1e-13));
  }
}

TEST_CASE("weight mass is the Barnes integral") {
  const auto fp = all(2);
  const double want = barnes(2, 2, 2, 2);
  CHECK(want == doctest::Approx(2.0 * std::numbers::pi * 1296.0 / 5040.0));
  CHECK(fourier_closed_form(fp, 0) == doctest::Approx(want).epsilon(1e-14));
  const auto rep = verify_parseval_pair(fp, 0, 0, Normalization::TwoPi);
  CHECK(rep.passed());
  CHECK(!verify_parseval_pair(fp, 0, 0, Normalization::TwoPiI).passed());
  const auto I = fourier_integral(fp, 0, 0, PhiForm::Repaired);
  CHECK(std::abs(I.value - ComplexF(want, 0.0)) / want < 1e-10);
  CHECK(std::abs(I.value.imag()) <= 1e-9 * std::abs(I.value));

  const auto odd = FourierParams::make(2, 3, Rational(5, 2), Rational(3, 2), 1);
  CHECK(fourier_closed_form(odd, 0) == doctest::Approx(barnes(3, 1.5, 2, 2.5)).epsilon(1e-13));
}

TEST_CASE("biorthogonality with the repaired phi") {
  CHECK(verify_parseval_pair(all(2), 0, 1, Normalization::TwoPi).passed());
  CHECK(verify_parseval_pair(all(3), 1, 1, Normalization::TwoPi).passed());
  CHECK(verify_parseval_pair(all(3), 1, 0, Normalization::TwoPi).passed());
  CHECK(verify_parseval_pair(all(4, 2), 1, 1, Normalization::TwoPi).passed());
  CHECK(verify_parseval_pair(all(4), 2, 2, Normalization::TwoPi).passed());
  CHECK(verify_parseval_pair(all(4), 2, 1, Normalization::TwoPi).passed());
  CHECK(fourier_closed_form(all(3), 1) == doctest::Approx(-17.951958020513104).epsilon(1e-12));
  CHECK(fourier_closed_form(all(4, 2), 1) == doctest::Approx(-1328.6959698539209).epsilon(1e-12));
  const auto mixed = FourierParams::make(2, 3, Rational(5, 2), Rational(3, 2), 1);
  CHECK(verify_parseval_pair(mixed, 1, 1, Normalization::TwoPi).passed());
}

TEST_CASE("printed phi fails for n >= 1") {
  const auto rep = verify_parseval_pair(all(3), 1, 1, Normalization::TwoPi, PhiForm::Printed);
  CHECK(rep.verdict == Verdict::Fail);
  // the printed form still gives the right mass at n = 0
  CHECK(verify_parseval_pair(all(3), 0, 0, Normalization::TwoPi, PhiForm::Printed).passed());
}

TEST_CASE("cutoff stability and conjugate symmetry") {
  const auto fp = all(3);
  const auto base = fourier_integral(fp, 1, 1, PhiForm::Repaired);
  const auto wide = fourier_integral(fp, 1, 1, PhiForm::Repaired, 1e-12, 2.0 * base.cutoff);
  CHECK(std::abs(wide.value - base.value) < 1e-10 * std::abs(base.value));
  CHECK(std::abs(base.value.imag()) <= 1e-9 * std::abs(base.value));
  for (double x : {0.3, 1.7, 4.0}) {
    const ComplexF a = fourier_weight(fp, x) * eval_phi(fp, 1, {0.0, x}, PhiForm::Repaired) * eval_chi(fp, 1, {0.0, -x});
    const ComplexF b =
        fourier_weight(fp, -x) * eval_phi(fp, 1, {0.0, -x}, PhiForm::Repaired) * eval_chi(fp, 1, {0.0, x});
    CHECK(std::abs(a - std::conj(b)) <= 1e-13 * std::abs(a));
  }
}
