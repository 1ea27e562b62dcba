#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biortho/errors.hpp"
#include "biortho/inner.hpp"
#include "biortho/scalar.hpp"

using namespace biortho;

TEST_CASE("inner examples on the M weight") {
  const auto w5 = WeightSpec::m_weight(5, 0);
  const auto one = inner(w5, Polynomial{1}, Polynomial{1});
  CHECK(one.normalized == Rational(1));
  REQUIRE(one.absolute().has_value());
  CHECK(*one.absolute() == Rational(1, 4));

  const auto w10 = WeightSpec::m_weight(10, 0);
  const Polynomial m1{-2, 0, 56};
  const Polynomial mf1{Rational(-1, 2), 4};
  CHECK(*inner(w10, m1, mf1).absolute() == Rational(1, 3));
  CHECK(inner(w10, m1, Polynomial{1}).normalized == Rational(0));

  CHECK_THROWS_AS(inner(w5, Polynomial::monomial(1, 2), Polynomial::monomial(1, 2)), DivergentMoment);
}

TEST_CASE("moment tables") {
  const Rational p(37, 3), q(1, 2);
  const MomentTable t(WeightSpec::m_weight(p, q), 8);
  for (long k = 0; k < 8; ++k) {
    REQUIRE(t[k + 1] / t[k] == (q + Rational(k + 1)) / (p - Rational(k + 2)));
  }
  // closed form (q+1)_k / prod_{i=2}^{k+1} (p-i)
  for (long k = 0; k <= 8; ++k) {
    Rational den(1);
    for (long i = 2; i <= k + 1; ++i) den *= p - Rational(i);
    REQUIRE(t[k] == pochhammer(q + Rational(1), k) / den);
  }
  const MomentTable lag(WeightSpec::laguerre(Rational(1, 2)), 5);
  CHECK(lag[3] == pochhammer(Rational(3, 2), 3));

  // Legendre weight: <x^2> = 1/3
  const MomentTable leg(WeightSpec::jacobi(0, 0), 4);
  CHECK(leg[1] == Rational(0));
  CHECK(leg[2] == Rational(1, 3));
  CHECK(leg[4] == Rational(1, 5));
  CHECK(jacobi_mixed_moment(0, 0, 1, 1) == Rational(2, 3));
  CHECK_THROWS_AS(MomentTable(WeightSpec::m_weight(5, 0), 4), DivergentMoment);
}

TEST_CASE("bilinearity") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> c(-9, 9);
  const auto w = WeightSpec::m_weight(Rational(51, 2), Rational(2, 3));
  for (int i = 0; i < 50; ++i) {
    Polynomial f{c(rng), c(rng), c(rng)}, g{c(rng), c(rng)}, h{c(rng), c(rng), c(rng), c(rng)};
    const Rational a(c(rng), 3), b(c(rng), 5);
    REQUIRE(inner(w, f * a + g * b, h).normalized ==
            a * inner(w, f, h).normalized + b * inner(w, g, h).normalized);
  }
}

TEST_CASE("verify_Mort fixtures") {
  const auto ps = ParamSet::make(10, 0, 2, 1);
  const auto d = verify_Mort(ps, 1, 1);
  CHECK(d.passed());
  CHECK(mort_rhs_normalized(10, 0, 2, 1) * Rational(1, 9) == Rational(1, 3));
  CHECK(verify_Mort(ps, 1, 0).passed());
  CHECK(verify_Mort(ps, 0, 1).passed());

  const auto classic = ParamSet::make(5, 0, 1, 1);
  CHECK(verify_Mort(classic, 1, 1).passed());
  // classical norm n! G(p-n) G(q+n+1) / ((p-2n-1) G(p+q-n)) = 1/2 at p=5, q=0, n=1
  CHECK(mort_rhs_normalized(5, 0, 1, 1) * Rational(1, 4) == Rational(1, 2));
}

TEST_CASE("verify_Mort sweep") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> pn(1, 300), qn(-4, 40), den(1, 6);
  for (long v = 1; v <= 3; ++v) {
    for (int trial = 0; trial < 10; ++trial) {
      const Rational p = Rational((v + 1) * 4 + 1) + Rational(pn(rng), den(rng));
      Rational q(qn(rng), den(rng));
      if (q <= Rational(-1)) q = Rational(-1, 2);
      const auto ps = ParamSet::make(p, q, v, 4);
      for (long n = 0; n <= 4; ++n) {
        for (long m = 0; m <= 4; ++m) REQUIRE(verify_Mort(ps, n, m).passed());
        REQUIRE(verify_monomial_conditions(ps, n).passed());
      }
    }
  }
}

TEST_CASE("divergent reporting outside the admissible region") {
  ParamSet ps{Rational(7, 2), Rational(0), 2, 1};
  const auto rep = verify_Mort(ps, 1, 1);
  CHECK(rep.verdict == Verdict::Divergent);
}

TEST_CASE("monomial conditions") {
  const auto ps = ParamSet::make(10, 0, 2, 1);
  CHECK(verify_monomial_conditions(ps, 1).passed());
  CHECK(verify_monomial_conditions(ps, 0).passed());
}

TEST_CASE("Konhauser relation") {
  const auto rep = verify_konhauser(0, 2, 1, 1);
  CHECK(rep.passed());
  CHECK(konhauser_rhs_normalized(0, 2, 1) == Rational(2));
  CHECK(verify_konhauser(0, 2, 1, 0).passed());
  for (const Rational g : {Rational(0), Rational(1, 2), Rational(3)}) {
    for (long v = 1; v <= 3; ++v) {
      for (long n = 0; n <= 3; ++n) {
        for (long m = 0; m <= 3; ++m) REQUIRE(verify_konhauser(g, v, n, m).passed());
      }
    }
  }
}

TEST_CASE("Jacobi biorthogonality") {
  CHECK(verify_jacobi_biorth(0, 0, 1, 1, 1).passed());
  CHECK(jacobi_rhs_normalized(0, 0, 1, 1) * Rational(2) == Rational(2, 3));
  CHECK(verify_jacobi_biorth(0, 0, 1, 1, 0).passed());
  CHECK(verify_jacobi_biorth(Rational(3, 2), Rational(1, 3), 2, 0, 0).passed());
  for (long v = 1; v <= 3; ++v) {
    for (long n = 0; n <= 3; ++n) {
      for (long m = 0; m <= 3; ++m) REQUIRE(verify_jacobi_biorth(Rational(5, 2), Rational(2, 7), v, n, m).passed());
    }
  }
}

TEST_CASE("classical orthogonality") {
  for (long n = 0; n <= 3; ++n) {
    for (long m = 0; m <= 3; ++m) REQUIRE(verify_classic_orth(Rational(29, 2), Rational(3, 4), n, m).passed());
  }
}
