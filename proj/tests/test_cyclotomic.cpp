#include <random>

#include "doctest.h"
#include "skein/cyclotomic.hpp"
#include "skein/errors.hpp"

using namespace skein;

TEST_CASE("context degrees") {
  CHECK(CycloContext::get(3).order() == 6);
  CHECK(CycloContext::get(3).degree() == 2);
  CHECK(CycloContext::get(5).order() == 10);
  CHECK(CycloContext::get(5).degree() == 4);
  CHECK(CycloContext::get(7).order() == 14);
  CHECK(CycloContext::get(7).degree() == 6);
  CHECK(CycloContext::get(9).order() == 18);
  CHECK(CycloContext::get(9).degree() == 6);
  CHECK(CycloContext::get(15).order() == 30);
  CHECK(CycloContext::get(15).degree() == 8);
}

TEST_CASE("root powers") {
  for (int n : {3, 5, 7, 9}) {
    const CycloContext& ctx = CycloContext::get(n);
    CHECK(ctx.a(n) == -ctx.one());
    CHECK(ctx.a(2 * n) == ctx.one());
    for (long k = 1; k < 2 * n; ++k) {
      CHECK(ctx.a(k) * ctx.a(-k) == ctx.one());
      CHECK(ctx.a(1).pow(k) == ctx.a(k));
    }
    CHECK(ctx.a(1).pow(-3) == ctx.a(-3));
  }
}

TEST_CASE("reduction at level 3") {
  const CycloContext& ctx = CycloContext::get(3);
  // A^2 = A - 1 in the reduced representation
  CHECK(ctx.a(2) == ctx.a(1) - ctx.one());
  CHECK(ctx.a(2).coefficient(0) == Rational(-1));
  CHECK(ctx.a(2).coefficient(1) == Rational(1));
  // A^2 + A^-2 = 2 cos(2 pi / 3) = -1 is rational here
  const CycloScalar s = ctx.a(2) + ctx.a(-2);
  CHECK(s.is_rational());
  CHECK(s.rational_part() == Rational(-1));
}

TEST_CASE("detached zero") {
  CycloScalar z;
  CHECK(z.is_zero());
  CHECK(z.is_rational());
  CHECK(z.rational_part() == Rational(0));
  const CycloContext& ctx = CycloContext::get(5);
  CHECK(z + ctx.a(1) == ctx.a(1));
  CHECK(ctx.a(1) * z == CycloScalar());
  CHECK_THROWS_AS(z.inverse(), domain_error);
}

TEST_CASE("field arithmetic") {
  std::mt19937 rng(5);
  for (int n : {3, 5, 9}) {
    const CycloContext& ctx = CycloContext::get(n);
    auto rnd = [&] {
      CycloScalar v = ctx.zero();
      for (int i = 0; i < 2; ++i)
        v += ctx.a((long)(rng() % (2 * n)))
                 .times_rational(rat((long)(rng() % 9) - 4, 1 + rng() % 4));
      return v;
    };
    for (int trial = 0; trial < 25; ++trial) {
      CycloScalar a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!b.is_zero()) {
        CHECK(b * b.inverse() == ctx.one());
        CHECK((a / b) * b == a);
      }
    }
    CHECK((ctx.one() + ctx.a(1)) * (ctx.one() - ctx.a(1)) ==
          ctx.one() - ctx.a(2));
  }
}

TEST_CASE("zero inverse rejected") {
  const CycloContext& ctx = CycloContext::get(3);
  CHECK_THROWS_AS(ctx.zero().inverse(), domain_error);
}

TEST_CASE("rational embedding") {
  const CycloContext& ctx = CycloContext::get(7);
  const CycloScalar r = ctx.rational(rat(3, 4));
  CHECK(r.is_rational());
  CHECK(r.rational_part() == rat(3, 4));
  CHECK(r * ctx.rational(rat(4, 3)) == ctx.one());
  CHECK(ctx.a(3).times_rational(rat(2)) == ctx.a(3) + ctx.a(3));
}
