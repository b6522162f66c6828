#include <random>

#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/linalg.hpp"

using namespace skein;

namespace {

CycloScalar random_scalar(const CycloContext& ctx, std::mt19937& rng) {
  CycloScalar v = ctx.zero();
  for (int i = 0; i < 2; ++i)
    v += ctx.a((long)(rng() % ctx.order()))
             .times_rational(rat((long)(rng() % 7) - 3, 1 + rng() % 3));
  return v;
}

RingMatrix<CycloScalar> random_matrix(const CycloContext& ctx, std::size_t n,
                                      std::mt19937& rng) {
  RingMatrix<CycloScalar> m(n, n, ctx.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(ctx, rng);
  return m;
}

}  // namespace

TEST_CASE("determinant is multiplicative") {
  const CycloContext& ctx = CycloContext::get(5);
  std::mt19937 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_matrix(ctx, 3, rng);
    auto b = random_matrix(ctx, 3, rng);
    CycloScalar lhs = det_field(mat_mul(a, b, ctx.zero()), ctx.zero(), ctx.one());
    CycloScalar rhs = det_field(a, ctx.zero(), ctx.one()) *
                      det_field(b, ctx.zero(), ctx.one());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("permutation determinants carry the sign") {
  const CycloContext& ctx = CycloContext::get(3);
  // identity
  RingMatrix<CycloScalar> id(4, 4, ctx.zero());
  for (int i = 0; i < 4; ++i) id.at(i, i) = ctx.one();
  CHECK(det_field(id, ctx.zero(), ctx.one()) == ctx.one());
  // single transposition: odd
  RingMatrix<CycloScalar> swp = id;
  swp.swap_rows(0, 2);
  CHECK(det_field(swp, ctx.zero(), ctx.one()) == -ctx.one());
  // 3-cycle: even
  RingMatrix<CycloScalar> cyc(3, 3, ctx.zero());
  cyc.at(0, 1) = ctx.one();
  cyc.at(1, 2) = ctx.one();
  cyc.at(2, 0) = ctx.one();
  CHECK(det_field(cyc, ctx.zero(), ctx.one()) == ctx.one());
}

TEST_CASE("singular matrices give a zero determinant") {
  const CycloContext& ctx = CycloContext::get(3);
  std::mt19937 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(ctx, 3, rng);
    // force row 2 = row 0 + row 1
    for (int j = 0; j < 3; ++j) m.at(2, j) = m.at(0, j) + m.at(1, j);
    CHECK(det_field(m, ctx.zero(), ctx.one()).is_zero());
  }
}

TEST_CASE("pivot preference does not change the value") {
  const CycloContext& ctx = CycloContext::get(5);
  std::mt19937 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(ctx, 3, rng);
    CycloScalar base = det_field(m, ctx.zero(), ctx.one());
    CycloScalar pref = det_field(m, ctx.zero(), ctx.one(),
                                 [](const CycloScalar& v) { return v.is_rational(); });
    CHECK(base == pref);
  }
}

TEST_CASE("solve verifies by substitution") {
  const CycloContext& ctx = CycloContext::get(3);
  std::mt19937 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_matrix(ctx, 3, rng);
    if (det_field(a, ctx.zero(), ctx.one()).is_zero()) continue;
    std::vector<CycloScalar> b;
    for (int i = 0; i < 3; ++i) b.push_back(random_scalar(ctx, rng));
    auto x = mat_solve(a, b, ctx.zero());
    CHECK(mat_apply(a, x, ctx.zero()) == b);
  }
  RingMatrix<CycloScalar> z(2, 2, ctx.zero());
  std::vector<CycloScalar> b{ctx.one(), ctx.one()};
  CHECK_THROWS_AS(mat_solve(z, b, ctx.zero()), singular_matrix_error);
}

TEST_CASE("matrix trace over the character ring") {
  const int n = 5;
  const CharElement zero(Surface::annulus, n);
  const CharElement one = CharElement::unit(Surface::annulus, n);
  RingMatrix<CharElement> id(4, 4, zero);
  for (int i = 0; i < 4; ++i) id.at(i, i) = one;
  CHECK(mat_trace(id, zero) == one.scaled(Rational(4)));

  CharElement chi = CharElement::key_term(Surface::annulus, n, char_key_annulus(1));
  RingMatrix<CharElement> d(3, 3, zero);
  for (int i = 0; i < 3; ++i) d.at(i, i) = chi;
  CHECK(mat_trace(d, zero) == chi.scaled(Rational(3)));

  // left multiplication by T_1 is traceless on the annulus at level 5
  auto lm = ann_left_matrix(AnnulusSkein::cheb(n, 1));
  CHECK(mat_trace(lm, zero).is_zero());
}

TEST_CASE("shape mismatches are rejected") {
  const CycloContext& ctx = CycloContext::get(3);
  RingMatrix<CycloScalar> a(2, 3, ctx.zero());
  RingMatrix<CycloScalar> b(2, 3, ctx.zero());
  CHECK_THROWS_AS(mat_mul(a, b, ctx.zero()), domain_error);
  CHECK_THROWS_AS(det_field(a, ctx.zero(), ctx.one()), domain_error);
  CHECK_THROWS_AS(mat_trace(a, ctx.zero()), domain_error);
}
