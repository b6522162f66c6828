#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "skein/errors.hpp"
#include "skein/linalg.hpp"
#include "skein/torus.hpp"

using namespace skein;

namespace {

CharElement tchi(int n, int p, int q) {
  return CharElement::key_term(Surface::torus, n, char_key_torus(p, q));
}

}  // namespace

TEST_CASE("product to sum") {
  const int n = 3;
  const CycloContext& ctx = CycloContext::get(n);
  TorusSkein ab = TorusSkein::curve(n, 1, 0) * TorusSkein::curve(n, 0, 1);
  TorusSkein expect(n);
  expect.add_curve(1, 1, ctx.a(1));
  expect.add_curve(1, -1, ctx.a(-1));
  CHECK(ab == expect);

  TorusSkein ba = TorusSkein::curve(n, 0, 1) * TorusSkein::curve(n, 1, 0);
  TorusSkein expect2(n);
  expect2.add_curve(1, 1, ctx.a(-1));
  expect2.add_curve(1, -1, ctx.a(1));
  CHECK(ba == expect2);
  CHECK(!(ab == ba));

  TorusSkein sq = TorusSkein::curve(n, 1, 0) * TorusSkein::curve(n, 1, 0);
  TorusSkein expect3(n);
  expect3.add_curve(2, 0, ctx.one());
  expect3.add_unit(rat(2));
  CHECK(sq == expect3);
}

TEST_CASE("rewriting identity sweep at level 3") {
  auto reports = torus_verify_identities(3);
  CHECK(reports.size() == 11);
  for (const auto& r : reports) {
    INFO(r.family, ": ", r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("reduction to B round trips") {
  std::mt19937 rng(23);
  for (int n : {3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      TorusSkein u(n);
      for (int t = 0; t < 3; ++t) {
        int p = (int)(rng() % (6 * n + 1)) - 3 * n;
        int q = (int)(rng() % (6 * n + 1)) - 3 * n;
        u.add_curve(p, q, CycloContext::get(n).rational(rat((long)(rng() % 9) - 4)));
      }
      auto comb = torus_reduce_to_B(u);
      for (const auto& [k, v] : comb) CHECK(torus_key_in_b(n, k.first, k.second));
      CHECK(torus_expand(comb, n) == u);
      CHECK(torus_roundtrip_check(u));
    }
  }
}

TEST_CASE("deletion trace equals the matrix trace") {
  std::mt19937 rng(29);
  const int n = 3;
  for (int trial = 0; trial < 5; ++trial) {
    TorusSkein u(n);
    for (int t = 0; t < 2; ++t) {
      int p = (int)(rng() % (4 * n + 1)) - 2 * n;
      int q = (int)(rng() % (4 * n + 1)) - 2 * n;
      u.add_curve(p, q, CycloContext::get(n).rational(rat((long)(rng() % 7) - 3)));
    }
    CharFraction rule = torus_trace(u);
    CharFraction mt = mat_trace(torus_left_matrix(u), CharFraction::zero(Surface::torus, n));
    CharFraction scaled =
        mt * CharFraction(CharElement::unit(Surface::torus, n).scaled(rat(1, n * n)));
    CHECK(rule == scaled);
  }
}

TEST_CASE("thread then trace is the identity") {
  std::mt19937 rng(31);
  const int n = 3;
  const CycloContext& ctx = CycloContext::get(n);
  for (int trial = 0; trial < 20; ++trial) {
    CharElement x(Surface::torus, n);
    for (int i = 0; i < 3; ++i)
      x.add_term(char_key_torus((int)(rng() % 5) - 2, (int)(rng() % 5) - 2),
                 ctx.a((long)(rng() % 6)));
    CHECK(torus_trace_raw(torus_thread(x)) == x);
  }
}

TEST_CASE("pairing matrix at level 3") {
  const int n = 3;
  auto m = torus_pairing_matrix(n);
  REQUIRE(m.rows() == 9);
  CharElement z(Surface::torus, n);
  CharElement u2 = CharElement::unit(Surface::torus, n).scaled(rat(2));
  CharElement u4 = CharElement::unit(Surface::torus, n).scaled(rat(4));
  CharElement c01 = tchi(n, 0, 1), c10 = tchi(n, 1, 0), c11 = tchi(n, 1, 1);
  CharElement n11 = -c11;
  // basis order: (0,0),(0,1),(0,2),(1,0),(1,1),(1,2),(2,0),(2,1),(2,2)
  CharElement expect[9][9] = {
      {u4, z, z, z, z, z, z, z, z},
      {z, u2, c01, z, z, z, z, z, z},
      {z, c01, u2, z, z, z, z, z, z},
      {z, z, z, u2, z, z, c10, z, z},
      {z, z, z, z, u2, z, z, z, c11},
      {z, z, z, z, z, u2, z, n11, z},
      {z, z, z, c10, z, z, u2, z, z},
      {z, z, z, z, z, n11, z, u2, z},
      {z, z, z, z, c11, z, z, z, u2},
  };
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) CHECK(m.at(i, j) == expect[i][j]);
}

TEST_CASE("pairing determinant factorization at level 3") {
  const int n = 3;
  CharElement det = torus_pairing_det(n);
  CharElement u1 = CharElement::unit(Surface::torus, n);
  CharElement sq00 = u1.scaled(rat(4));
  CharElement f1 = sq00 - tchi(n, 1, 0) * tchi(n, 1, 0);
  CharElement f2 = sq00 - tchi(n, 0, 1) * tchi(n, 0, 1);
  CharElement f3 = sq00 - tchi(n, 1, 1) * tchi(n, 1, 1);
  const int e = (n - 1) / 2;
  CharElement product = u1.scaled(rat(4)) * f1.pow(e) * f2.pow(e) *
                        f3.pow((n - 1) * (n - 1) / 2);
  CHECK(det == product);
}

TEST_CASE("basis C change matrix is nonsingular at a rational point") {
  const int n = 3;
  const CycloContext& ctx = CycloContext::get(n);
  auto m = basis_C_matrix(n);
  CycloScalar lam = ctx.rational(Rational(2)), mu = ctx.rational(Rational(3));
  auto evalf = [&](const CharFraction& f) {
    CycloScalar nv = laurent_eval(laurent_embed(f.num()), lam, mu);
    CycloScalar dv = laurent_eval(laurent_embed(f.den()), lam, mu);
    REQUIRE(!dv.is_zero());
    return nv * dv.inverse();
  };
  RingMatrix<CycloScalar> me = mat_convert(m, ctx.zero(), evalf);
  CHECK(!det_field(me, ctx.zero(), ctx.one()).is_zero());
}

TEST_CASE("inversion round trips after clearing denominators") {
  const int n = 3;
  for (auto key : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
    TorusSkein u = TorusSkein::curve(n, key.first, key.second);
    TorusReduced w = torus_invert(u);
    CharElement den(Surface::torus, n);
    TorusSkein cleared = torus_expand_cleared(w, den);
    CHECK(u * cleared == torus_thread(den));
    CHECK(!den.is_zero());
  }
  CHECK_THROWS_AS(torus_invert(TorusSkein(n)), domain_error);
}

TEST_CASE("threaded elements are central") {
  const int n = 3;
  CHECK(centrality_check(torus_thread(tchi(n, 1, 0)), TorusSkein::curve(n, 0, 1)));
  CHECK(!centrality_check(TorusSkein::curve(n, 1, 0), TorusSkein::curve(n, 0, 1)));
  std::mt19937 rng(37);
  const CycloContext& ctx = CycloContext::get(n);
  for (int trial = 0; trial < 10; ++trial) {
    CharElement x(Surface::torus, n);
    for (int i = 0; i < 2; ++i)
      x.add_term(char_key_torus((int)(rng() % 5) - 2, (int)(rng() % 5) - 2),
                 ctx.a((long)(rng() % 6)));
    TorusSkein v(n);
    for (int i = 0; i < 2; ++i)
      v.add_curve((int)(rng() % 7) - 3, (int)(rng() % 7) - 3, ctx.a((long)(rng() % 6)));
    CHECK(centrality_check(torus_thread(x), v));
  }
}
