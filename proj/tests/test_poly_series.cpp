#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biortho/polynomial.hpp"
#include "biortho/scalar.hpp"
#include "biortho/series.hpp"

using namespace biortho;

namespace {

Rational rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937_64& rng, long max_deg) {
  std::uniform_int_distribution<long> d(0, max_deg);
  std::vector<Rational> c;
  for (long k = 0, deg = d(rng); k <= deg; ++k) c.push_back(rnd(rng));
  return Polynomial(std::move(c));
}

using RSeries = TruncSeries<Rational>;

}  // namespace

TEST_CASE("polynomial normalization and arithmetic") {
  CHECK(Polynomial{1, 0, 0}.degree() == 0);
  CHECK(Polynomial().degree() == -1);
  CHECK((Polynomial{1, 2} - Polynomial{1, 2}).is_zero());
  CHECK(Polynomial{-1, 1} * Polynomial{1, 1} == Polynomial{-1, 0, 1});
  CHECK(Polynomial{0, 1}.pow(3) == Polynomial::monomial(1, 3));
  CHECK(Polynomial{0, 0, 1}.substitute_linear(1, 2) == Polynomial{1, 4, 4});
  CHECK(Polynomial{1, 1}.compose(Polynomial{0, 0, 1}) == Polynomial{1, 0, 1});
  CHECK(Polynomial{3, -1}(Rational(2)) == Rational(1));
  CHECK(Polynomial{-6, 0, 30}.eval(0.5) == doctest::Approx(1.5));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + Polynomial() == a);
    REQUIRE(a * Polynomial(1) == a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("poly_derivative examples") {
  CHECK(poly_derivative(Polynomial()).is_zero());
  CHECK(poly_derivative(Polynomial{-1, 3}) == Polynomial{3});
  CHECK(poly_derivative(Polynomial{-6, 0, 30}) == Polynomial{0, 60});
  CHECK(poly_integrate(Polynomial{3}) == Polynomial{0, 3});
  CHECK(poly_derivative(poly_integrate(Polynomial{1, 2, 3})) == Polynomial{1, 2, 3});
}

TEST_CASE("theta_shifted_product examples") {
  const Rational q(3, 7);
  CHECK(theta_shifted_product(Polynomial{0, 1}, q, 1) == Polynomial{0, q + Rational(1)});
  const Rational p(23, 3);
  CHECK(theta_shifted_product(Polynomial{1}, Rational(2) - p, 2) ==
        Polynomial{(Rational(2) - p) * (Rational(3) - p)});
  CHECK(theta_shifted_product(Polynomial::monomial(1, 2), 0, 1) == Polynomial::monomial(2, 2));
}

TEST_CASE("theta_shifted_product linearity and composition") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 7), g = random_poly(rng, 7);
    const Rational a = rnd(rng), s = rnd(rng);
    for (long v = 1; v <= 3; ++v) {
      REQUIRE(theta_shifted_product(f * s + g, a, v) ==
              theta_shifted_product(f, a, v) * s + theta_shifted_product(g, a, v));
      REQUIRE(theta_shifted_product(f, a, v + 1) ==
              theta_shifted_product(theta_shifted_product(f, a + Rational(v), 1), a, v));
    }
    REQUIRE(theta(f) == theta_shifted_product(f, 0, 1));
  }
}

TEST_CASE("series_pow examples") {
  const RSeries one_minus_t3 = RSeries::linear(3, 1, -1);
  const auto sq = series_pow(one_minus_t3, Rational(2));
  CHECK(sq[0] == Rational(1));
  CHECK(sq[1] == Rational(-2));
  CHECK(sq[2] == Rational(1));
  CHECK(sq[3] == Rational(0));

  const auto root = series_pow(RSeries::linear(2, 1, -1), Rational(1, 2));
  for (long k = 0; k <= 2; ++k) {
    const Rational expect = binomial(Rational(1, 2), k) * ((k % 2 == 0) ? Rational(1) : Rational(-1));
    CHECK(root[k] == expect);
  }
  CHECK(root[1] == Rational(-1, 2));
  CHECK(root[2] == Rational(-1, 8));

  CHECK_THROWS_AS(series_pow(RSeries(3, {0, 1, 1}), Rational(3)), SeriesError);
  CHECK_THROWS_AS(series_pow(RSeries(3, {2, 1}), Rational(1, 2)), SeriesError);
  CHECK_THROWS_AS(series_pow(TruncSeries<double>(3, {-1.0, 1.0}), Rational(1, 2)), SeriesError);
}

TEST_CASE("series_pow additivity in the exponent") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c{Rational(1)};
    for (int k = 0; k < 8; ++k) c.push_back(rnd(rng));
    const RSeries f(8, c);
    const Rational e1 = rnd(rng), e2 = rnd(rng);
    const auto lhs = series_pow(f, e1 + e2);
    const auto rhs = series_pow(f, e1) * series_pow(f, e2);
    for (long k = 0; k <= 8; ++k) REQUIRE(lhs[k] == rhs[k]);
  }
}

TEST_CASE("series_compose examples") {
  const auto r = series_compose(RSeries::linear(4, 1, 1), RSeries(4, {0, 0, 1}));
  CHECK(r[0] == Rational(1));
  CHECK(r[1] == Rational(0));
  CHECK(r[2] == Rational(1));

  const auto geom = series_pow(RSeries::linear(6, 1, -1), Rational(-1));
  const auto g2 = series_compose(geom, RSeries::linear(6, 0, 2));
  for (long k = 0; k <= 6; ++k) CHECK(g2[k] == Rational(2).pow(k));

  CHECK_THROWS_AS(series_compose(geom, RSeries::linear(6, 1, 1)), SeriesError);
}

TEST_CASE("series over polynomial and double scalars") {
  using PSeries = TruncSeries<Polynomial>;
  // (1 + x t)^2 = 1 + 2x t + x^2 t^2
  const PSeries f = PSeries::linear(3, Polynomial(1), Polynomial{0, 1});
  const auto sq = series_pow(f, Rational(2));
  CHECK(sq[1] == Polynomial{0, 2});
  CHECK(sq[2] == Polynomial{0, 0, 1});
  CHECK(sq[3].is_zero());

  const auto e = series_exp_linear<double>(10, Rational(-1));
  CHECK(e.evaluate(0.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  const auto d = series_pow(TruncSeries<double>::linear(12, 4.0, 1.0), Rational(1, 2));
  CHECK(d.evaluate(0.1) == doctest::Approx(std::sqrt(4.1)).epsilon(1e-12));
}
