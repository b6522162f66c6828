#include <cstdlib>
#include <random>

#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/pants.hpp"
#include "skein/places.hpp"
#include "skein/torus.hpp"

using namespace skein;

namespace {

CharElement random_char(Surface s, int n, std::mt19937& rng) {
  const CycloContext& ctx = CycloContext::get(n);
  CharElement e(s, n);
  for (int i = 0; i < 3; ++i) {
    int a = (int)(rng() % 3);
    int b = (int)(rng() % 5) - 2;
    int c = (int)(rng() % 5) - 2;
    CharKey key;
    switch (s) {
      case Surface::annulus: key = char_key_annulus(a); break;
      case Surface::pants: key = char_key_pants(a, std::abs(b), std::abs(c)); break;
      case Surface::torus: key = char_key_torus(b, c); break;
      case Surface::punctured: key = char_key_punctured(a, b, c); break;
    }
    e.add_term(key, ctx.a((long)(rng() % 6)));
  }
  return e;
}

}  // namespace

TEST_CASE("annulus places degenerate exactly at z = +-2") {
  for (int n : {3, 5}) {
    const CycloContext& ctx = CycloContext::get(n);
    for (int z = -3; z <= 3; ++z) {
      Place phi = Place::annulus_place(n, ctx.rational(Rational(z)));
      FrobeniusResult r = specialized_frobenius_check(phi);
      const bool degenerate = (z == 2 || z == -2);
      CHECK((r.verdict == FrobeniusVerdict::degenerate) == degenerate);
      CHECK(r.det == specialize_char(ann_pairing_det(n), phi));
      CycloScalar zz = ctx.rational(Rational(z));
      CycloScalar expect = ctx.rational(Rational(4)) *
                           (ctx.rational(Rational(4)) - zz * zz).pow((n - 1) / 2);
      CHECK(r.det == expect);
    }
  }
}

TEST_CASE("left multiplication determinant at a place") {
  const CycloContext& c5 = CycloContext::get(5);
  for (int z = -3; z <= 3; ++z) {
    CycloScalar zz = c5.rational(Rational(z));
    CHECK(left_det_at_place(5, 1, zz) == zz);
    CHECK(left_det_at_place(5, 2, zz) ==
          cheb_eval<CycloScalar>(2, zz, c5.rational(Rational(2))));
    Place phi = Place::annulus_place(5, zz);
    for (long k = 1; k <= 4; ++k) {
      CharElement gen = ann_char_det(ann_left_matrix(AnnulusSkein::cheb(5, k)), 5);
      CHECK(left_det_at_place(5, k, zz) == specialize_char(gen, phi));
    }
  }
  CHECK_THROWS_AS(left_det_at_place(5, 0, c5.one()), domain_error);
  CHECK_THROWS_AS(left_det_at_place(5, 5, c5.one()), domain_error);
}

TEST_CASE("specialization is a ring homomorphism") {
  const CycloContext& c3 = CycloContext::get(3);
  std::mt19937 rng(7);
  for (Surface s : {Surface::annulus, Surface::pants, Surface::torus,
                    Surface::punctured}) {
    Place phi = [&] {
      switch (s) {
        case Surface::annulus:
          return Place::annulus_place(3, c3.rational(rat(5, 7)));
        case Surface::pants:
          return Place::pants_place(3, c3.rational(rat(1, 2)), c3.a(1),
                                    c3.rational(Rational(3)));
        case Surface::torus:
          return Place::torus_place(3, c3.rational(Rational(2)),
                                    c3.rational(Rational(3)));
        default:
          return Place::punctured_place(3, c3.rational(rat(1, 2)), c3.a(2),
                                        c3.rational(Rational(2)));
      }
    }();
    for (int t = 0; t < 40; ++t) {
      CharElement u = random_char(s, 3, rng);
      CharElement v = random_char(s, 3, rng);
      CHECK(specialize_char(u * v, phi) ==
            specialize_char(u, phi) * specialize_char(v, phi));
      CHECK(specialize_char(u + v, phi) ==
            specialize_char(u, phi) + specialize_char(v, phi));
    }
    CHECK(specialize_char(CharElement::unit(s, 3), phi) == c3.one());
  }
}

TEST_CASE("torus place checks") {
  const CycloContext& c3 = CycloContext::get(3);
  Place phi = Place::torus_place(3, c3.rational(Rational(2)), c3.rational(Rational(3)));
  FrobeniusResult r = specialized_frobenius_check(phi);
  CHECK(r.verdict == FrobeniusVerdict::frobenius);
  CHECK(r.det == specialize_char(torus_pairing_det(3), phi));

  CharElement k10 = CharElement::key_term(Surface::torus, 3, char_key_torus(1, 0));
  CycloScalar lam = c3.rational(Rational(2));
  CHECK(specialize_char(k10, phi) == -(lam.pow(3) + lam.pow(-3)));

  auto [x, y, z] = torus_trace_coordinates(phi);
  CHECK((x * x + y * y + z * z + x * y * z - c3.rational(Rational(4))).is_zero());

  CHECK_THROWS_AS(Place::torus_place(3, c3.zero(), c3.one()), domain_error);
}

TEST_CASE("pants place checks") {
  const CycloContext& c3 = CycloContext::get(3);
  Place good = Place::pants_place(3, c3.rational(Rational(0)), c3.rational(Rational(1)),
                                  c3.rational(Rational(7)));
  FrobeniusResult r = specialized_frobenius_check(good);
  CHECK(r.verdict == FrobeniusVerdict::frobenius);
  CHECK(r.det == specialize_char(pants_pairing_det(3), good));

  Place bad = Place::pants_place(3, c3.rational(Rational(2)), c3.rational(Rational(1)),
                                 c3.rational(Rational(7)));
  CHECK(specialized_frobenius_check(bad).verdict == FrobeniusVerdict::degenerate);
}

TEST_CASE("punctured places are not certified") {
  const CycloContext& c3 = CycloContext::get(3);
  Place phi = Place::punctured_place(3, c3.rational(Rational(2)),
                                     c3.rational(Rational(3)), c3.a(1));
  FrobeniusResult r = specialized_frobenius_check(phi);
  CHECK(r.verdict == FrobeniusVerdict::not_computable);
  CHECK(std::string(verdict_name(r.verdict)) == "not computable");
}

TEST_CASE("fiber roots solve the defining equation") {
  for (int n : {3, 5}) {
    const CycloContext& ctx = CycloContext::get(n);
    for (const CycloScalar& q : {ctx.rational(Rational(2)), ctx.a(1),
                                 ctx.a(2).times_rational(rat(3, 2))}) {
      CycloScalar z = annulus_z_from_q(n, q);
      auto roots = annulus_fiber_roots(n, q);
      REQUIRE((int)roots.size() == n);
      for (const CycloScalar& r : roots)
        CHECK(cheb_eval<CycloScalar>(n, r, ctx.rational(Rational(2))) == z);
    }
    CHECK_THROWS_AS(annulus_z_from_q(n, ctx.zero()), domain_error);
  }
}

TEST_CASE("surface mismatch is rejected") {
  const CycloContext& c3 = CycloContext::get(3);
  Place phi = Place::annulus_place(3, c3.one());
  CharElement u = CharElement::unit(Surface::torus, 3);
  CHECK_THROWS_AS(specialize_char(u, phi), domain_error);
}
