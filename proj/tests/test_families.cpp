#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "biortho/errors.hpp"
#include "biortho/families.hpp"
#include "biortho/scalar.hpp"

using namespace biortho;

namespace {

// random admissible (p, q) for degree cap N
std::pair<Rational, Rational> random_pq(std::mt19937_64& rng, long upsilon, long N) {
  std::uniform_int_distribution<long> pn(1, 400), qn(-5, 60), den(1, 7);
  const Rational p = Rational((upsilon + 1) * N + 1) + Rational(pn(rng), den(rng));
  Rational q = Rational(qn(rng), den(rng));
  if (q <= Rational(-1)) q = Rational(-1) + Rational(1, den(rng) + 1);
  return {p, q};
}

}  // namespace

TEST_CASE("ParamSet validation") {
  CHECK_NOTHROW(ParamSet::make(5, 0, 1, 1));
  CHECK_THROWS_AS(ParamSet::make(3, 0, 2, 1), ConstraintError);  // p <= (v+1)N+1
  CHECK_THROWS_AS(ParamSet::make(10, -1, 1, 1), ConstraintError);
  CHECK_THROWS_AS(ParamSet::make(10, 0, 0, 1), ConstraintError);
  const auto ps = ParamSet::make(10, 0, 2, 1);
  CHECK_THROWS_AS(make_M(ps, 2), ConstraintError);
}

TEST_CASE("make_M examples") {
  CHECK(make_M(ParamSet::make(5, 0, 1, 1), 0) == Polynomial{1});
  CHECK(make_M(ParamSet::make(5, 0, 1, 1), 1) == Polynomial{-1, 3});
  CHECK(make_M(ParamSet::make(8, 1, 2, 1), 1) == Polynomial{-6, 0, 30});
  CHECK(make_M(ParamSet::make(10, 0, 2, 1), 1) == Polynomial{-2, 0, 56});
}

TEST_CASE("make_Mfrak examples") {
  CHECK(make_Mfrak(ParamSet::make(7, Rational(1, 2), 2, 1), 0) == Polynomial{1});
  CHECK(make_Mfrak(ParamSet::make(5, 0, 1, 1), 1) == Polynomial{-1, 3});
  CHECK(make_Mfrak(ParamSet::make(10, 0, 2, 1), 1) == Polynomial{Rational(-1, 2), 4});
}

TEST_CASE("M structure: degree, support, leading and constant terms") {
  std::mt19937_64 rng(17);
  for (long v = 1; v <= 3; ++v) {
    for (long n = 0; n <= 8; ++n) {
      const auto [p, q] = random_pq(rng, v, n);
      const auto ps = ParamSet::make(p, q, v, n);
      const Polynomial m = make_M(ps, n);
      REQUIRE(m.degree() == v * n);
      for (long k = 0; k <= m.degree(); ++k) {
        if (k % v != 0) REQUIRE(m.coeff(k).is_zero());
      }
      const Rational sgn_n = (n % 2 == 0) ? Rational(1) : Rational(-1);
      const Rational sgn_vn = ((v * n) % 2 == 0) ? Rational(1) : Rational(-1);
      REQUIRE(m.coeff(0) == sgn_n * pochhammer(q + Rational(1), v * n));
      REQUIRE(m.leading() == sgn_vn * pochhammer(Rational(n + 1) - p, v * n));
      REQUIRE(make_Mfrak(ps, n).degree() == n);
    }
  }
}

TEST_CASE("upsilon = 1 collapse") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [p, q] = random_pq(rng, 1, 8);
    for (long n = 0; n <= 8; ++n) {
      const Polynomial a = unchecked::M(p, q, 1, n);
      REQUIRE(a == unchecked::Mfrak(p, q, 1, n));
      REQUIRE(a == make_classic_M(p, q, n));
    }
  }
  CHECK(make_classic_M(5, 0, 0) == Polynomial{1});
  CHECK(make_classic_M(5, 0, 1) == Polynomial{-1, 3});
  CHECK_THROWS_AS(make_classic_M(3, 0, 1), ConstraintError);
}

TEST_CASE("Konhauser pair") {
  CHECK(make_konhauser_Z(0, 2, 1) == Polynomial{2, 0, -1});
  CHECK(make_konhauser_Y(0, 2, 1) == Polynomial{Rational(1, 2), Rational(-1, 2)});
  CHECK(make_konhauser_Z(Rational(5, 3), 3, 0) == Polynomial{1});
  CHECK_THROWS_AS(make_konhauser_Z(-1, 1, 1), ConstraintError);
  // at upsilon = 1 both reduce to the Laguerre polynomial
  for (long n = 0; n <= 6; ++n) {
    for (const Rational g : {Rational(0), Rational(1, 2), Rational(3)}) {
      REQUIRE(make_konhauser_Z(g, 1, n) == make_konhauser_Y(g, 1, n));
    }
  }
  CHECK(make_konhauser_Z(0, 1, 2) == Polynomial{1, -2, Rational(1, 2)});
}

TEST_CASE("Jacobi pair") {
  CHECK(make_jacobi_J(0, 0, 1, 0) == Polynomial{1});
  CHECK(make_jacobi_K(0, 0, 1, 0) == Polynomial{1});
  CHECK(make_jacobi_J(0, 0, 1, 1) == Polynomial{0, 1});
  CHECK(make_jacobi_J(0, 0, 1, 2) == Polynomial{Rational(-1, 2), 0, Rational(3, 2)});
  // at upsilon = 1 both are the classical Jacobi polynomial
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [p, q] = random_pq(rng, 1, 0);
    for (long n = 0; n <= 5; ++n) REQUIRE(unchecked::J(p, q, 1, n) == unchecked::K(p, q, 1, n));
  }
  CHECK_THROWS_AS(make_jacobi_J(-1, 0, 1, 1), ConstraintError);
}

TEST_CASE("hyp_terminating") {
  CHECK(hyp_terminating({Rational(0)}, {}, Polynomial{0, 1}, 0) == Polynomial{1});
  CHECK(hyp_terminating({Rational(-1)}, {}, Polynomial{0, 1}, 1) == Polynomial{1, -1});
  CHECK_THROWS_AS(hyp_terminating({Rational(-3)}, {Rational(-1)}, Polynomial{0, 1}, 3), PoleError);
  CHECK_THROWS_AS(hyp_terminating({Rational(1, 2)}, {}, Polynomial{0, 1}, 3), ConstraintError);

  std::mt19937_64 rng(41);
  for (long v = 1; v <= 3; ++v) {
    for (long n = 0; n <= 6; ++n) {
      const auto [p, q] = random_pq(rng, v, n);
      std::vector<Rational> numer{Rational(-n)};
      for (const auto& d : delta_params(v, Rational(n + 1) - p)) numer.push_back(d);
      const auto denom = delta_params(v, q + Rational(1));
      const Rational sgn = (n % 2 == 0) ? Rational(1) : Rational(-1);
      const Polynomial h = hyp_terminating(numer, denom, neg_x_pow(v), n) * (sgn * pochhammer(q + Rational(1), v * n));
      REQUIRE(h == unchecked::M(p, q, v, n));
    }
  }
}

TEST_CASE("family name round trip") {
  for (auto id : {FamilyId::M, FamilyId::MFrak, FamilyId::KonhauserZ, FamilyId::KonhauserY, FamilyId::JacobiJ,
                  FamilyId::JacobiK, FamilyId::ClassicM}) {
    CHECK(parse_family(family_name(id)) == id);
  }
  CHECK_THROWS_AS(parse_family("nosuch"), ConstraintError);
}
