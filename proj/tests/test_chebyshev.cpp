#include <random>

#include "doctest.h"
#include "skein/chebyshev.hpp"

using namespace skein;

TEST_CASE("first polynomials") {
  CHECK(cheb_T(0) == poly_const(Rational(2)));
  CHECK(cheb_T(1) == poly_x());
  IntPolynomial t2;
  t2.add_term(2, Rational(1));
  t2.add_term(0, Rational(-2));
  CHECK(cheb_T(2) == t2);
  IntPolynomial t4;
  t4.add_term(4, Rational(1));
  t4.add_term(2, Rational(-4));
  t4.add_term(0, Rational(2));
  CHECK(cheb_T(4) == t4);
}

TEST_CASE("recurrence") {
  for (long k = 1; k < 20; ++k)
    CHECK(cheb_T(k + 1) == poly_sub(poly_mul(poly_x(), cheb_T(k)), cheb_T(k - 1)));
}

TEST_CASE("product and composition identities") {
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; n <= 8; ++n) CHECK(verify_cheb_identities(m, n));
}

TEST_CASE("basis expansion") {
  auto one = to_cheb_basis(poly_const(Rational(1)));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == rat(1, 2));

  IntPolynomial xsq = poly_mul(poly_x(), poly_x());
  auto b = to_cheb_basis(xsq);  // x^2 = T_2 + T_0
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Rational(1));
  CHECK(b[2] == Rational(1));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    IntPolynomial p;
    for (int i = 0; i < 4; ++i)
      p.add_term(rng() % 12, rat((long)(rng() % 9) - 4, 1 + rng() % 3));
    IntPolynomial back;
    for (const auto& [k, c] : to_cheb_basis(p))
      back = poly_add(back, poly_scale(cheb_T(k), c));
    CHECK(back == p);
  }
}

TEST_CASE("power relation collapses to a monomial") {
  for (long n : {3, 5, 7, 9}) {
    IntPolynomial expect;
    expect.add_term(n, Rational(1));
    CHECK(x_power_relation(n) == expect);
  }
}

TEST_CASE("value recurrence") {
  // T_4(3) = 81 - 36 + 2
  CHECK(cheb_eval<Rational>(4, Rational(3), Rational(2)) == Rational(47));
  // T_n(q + 1/q) = q^n + q^-n at q = 2
  Rational x = rat(5, 2);
  CHECK(cheb_eval<Rational>(3, x, Rational(2)) == rat(65, 8));
  CHECK(cheb_eval<Rational>(5, x, Rational(2)) == rat(1025, 32));
}
