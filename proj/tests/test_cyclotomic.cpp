#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "twa/cyclotomic.hpp"

using namespace twa;

TEST_CASE("cyclotomic polynomials have the known coefficients", "[cyclotomic]") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
  CHECK(cyclotomic_polynomial(3) == IntPoly{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  // Smallest index with a coefficient outside {-1, 0, 1}.
  const IntPoly& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
  CHECK(p105[41] == -2);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::domain_error);
}

TEST_CASE("euler_phi", "[cyclotomic]") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(105) == 48);
  for (std::uint32_t n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("zeta constructs roots of unity", "[cyclotomic]") {
  CHECK(zeta(1, 0) == CycloNum(1L));
  CHECK(zeta(2, 1) == CycloNum(-1L));
  CHECK(zeta(3, 1) + zeta(3, 2) == CycloNum(-1L));
  CHECK(zeta(4) * zeta(4) == CycloNum(-1L));
  CHECK(zeta(5, 7) == zeta(5, 2));
  CHECK(zeta(5, -1) == zeta(5, 4));
  CHECK_THROWS_AS(zeta(0, 1), std::domain_error);
}

TEST_CASE("zeta(N)^N is one and zeta(N) is a root of its cyclotomic polynomial", "[cyclotomic]") {
  for (std::uint32_t n = 1; n <= 30; ++n) {
    const CycloNum z = zeta(n);
    CycloNum power(1L);
    for (std::uint32_t k = 0; k < n; ++k) power *= z;
    CHECK(power == CycloNum(1L));

    CycloNum value(0L);
    CycloNum zk(1L);
    for (std::int64_t c : cyclotomic_polynomial(n)) {
      value += zk * CycloNum(static_cast<long>(c));
      zk *= z;
    }
    CHECK(is_zero(value));
  }
}

TEST_CASE("sum of all N-th roots of unity vanishes", "[cyclotomic]") {
  for (std::uint32_t n = 2; n <= 24; ++n) {
    CycloNum s(0L);
    for (std::uint32_t k = 0; k < n; ++k) s += zeta(n, k);
    CHECK(is_zero(s));
  }
}

TEST_CASE("inverse and division", "[cyclotomic]") {
  CHECK(inv(zeta(3, 1)) == zeta(3, 2));
  CHECK(zeta(7, 3) / zeta(7, 5) == zeta(7, 5));
  const CycloNum x = CycloNum(Rational(3, 2)) + zeta(5) - zeta(5, 3) * CycloNum(2L);
  CHECK(x * inv(x) == CycloNum(1L));
  CHECK_THROWS_AS(inv(CycloNum(0L)), DivisionByZero);
  CHECK_THROWS_AS(zeta(4) / CycloNum(0L), DivisionByZero);
}

TEST_CASE("mixed conductors promote to the lcm", "[cyclotomic]") {
  const CycloNum s = zeta(4) + zeta(6);
  CHECK(s.conductor() == 12);
  CHECK(zeta(12, 3) == zeta(4));
  CHECK(zeta(12, 2) == zeta(6));
  // i * (-1) computed in Q(zeta_12) equals -i in Q(zeta_4).
  CHECK(zeta(4) * zeta(2) == zeta(4, 3));
  CHECK(zeta(3).promoted(6) == zeta(6, 2));
  CHECK(zeta(4, 2) == CycloNum(-1L));
}

TEST_CASE("canonical form and accessors", "[cyclotomic]") {
  const CycloNum a = zeta(5, 4);
  // zeta_5^4 = -1 - z - z^2 - z^3.
  CHECK(a.conductor() == 5);
  CHECK(a.coeffs() == std::vector<Rational>{-1, -1, -1, -1});
  CHECK(CycloNum::from_coeffs(5, {-1, -1, -1, -1}) == a);
  CHECK_THROWS(CycloNum::from_coeffs(5, {1, 2}));
  CHECK(CycloNum(Rational(1, 3)).is_rational());
  CHECK_FALSE(zeta(3).is_rational());
  CHECK(to_string(CycloNum(Rational(-2, 3))) == "-2/3");
  CHECK(to_string(zeta(4)) == "[0, 1]@4");
}

TEST_CASE("to_float is the complex embedding", "[cyclotomic]") {
  CHECK(std::abs(to_float(CycloNum(1L)) - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(to_float(zeta(2)) - std::complex<double>(-1, 0)) < 1e-15);
  CHECK(std::abs(std::abs(to_float(zeta(5))) - 1.0) < 1e-12);
  const double angle = 2 * std::acos(-1.0) * 3 / 7;
  CHECK(std::abs(to_float(zeta(7, 3)) - std::polar(1.0, angle)) < 1e-12);
}

TEST_CASE("from_coeffs canonicalizes unreduced rationals", "[cyclotomic]") {
  const CycloNum a = CycloNum::from_coeffs(4, {Rational(2, 6), Rational(8, 2)});
  const CycloNum b = CycloNum::from_coeffs(4, {Rational(1, 3), Rational(4)});
  CHECK(a == b);
  CHECK(is_zero(a - b));
  CHECK(CycloNum::from_coeffs(1, {Rational(3, 3)}) == CycloNum(1L));
}
