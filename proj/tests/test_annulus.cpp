#include <random>
#include <vector>

#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/errors.hpp"

using namespace skein;

namespace {

CharElement chi(int n, int a, const Rational& c = Rational(1)) {
  CharElement e(Surface::annulus, n);
  e.add_term(char_key_annulus(a), CycloContext::get(n).rational(c));
  return e;
}

}  // namespace

TEST_CASE("product of Chebyshev generators") {
  const int n = 5;
  CHECK(ann_mul(AnnulusSkein::cheb(n, 1), AnnulusSkein::cheb(n, 1)) ==
        AnnulusSkein::cheb(n, 2) + AnnulusSkein::cheb(n, 0));
  CHECK(ann_mul(AnnulusSkein::cheb(n, 2), AnnulusSkein::cheb(n, 3)) ==
        AnnulusSkein::cheb(n, 5) + AnnulusSkein::cheb(n, 1));
  CHECK(AnnulusSkein::cheb(n, 0) == AnnulusSkein::unit(n).scaled(Rational(2)));
}

TEST_CASE("reduce and expand are inverse") {
  std::mt19937 rng(7);
  for (int n : {3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      AnnulusSkein u(n);
      for (int t = 0; t < 4; ++t) {
        long k = rng() % (3 * n);
        u.add_term(k, rat((long)(rng() % 9) - 4));
      }
      auto coords = ann_reduce(u);
      REQUIRE(coords.size() == (std::size_t)n);
      CHECK(ann_expand(coords, n) == u);
    }
  }
}

TEST_CASE("thread then trace is the identity") {
  std::mt19937 rng(11);
  const int n = 5;
  for (int trial = 0; trial < 20; ++trial) {
    CharElement x(Surface::annulus, n);
    for (int i = 0; i < 3; ++i)
      x.add_term(char_key_annulus((int)(rng() % 4)),
                 CycloContext::get(n).a((long)(rng() % 10)));
    CHECK(ann_trace(ann_thread(x)) == x);
  }
  CHECK(ann_thread(chi(n, 2)) == AnnulusSkein::cheb(n, 2 * n));
  CHECK(ann_trace(AnnulusSkein::unit(n)) == CharElement::unit(Surface::annulus, n));
  for (int k = 1; k < n; ++k) CHECK(ann_trace(AnnulusSkein::cheb(n, k)).is_zero());
}

TEST_CASE("left multiplication table for T_1 at level 5") {
  auto m = ann_left_matrix(AnnulusSkein::cheb(5, 1));
  REQUIRE(m.rows() == 5);
  REQUIRE(m.cols() == 5);
  CharElement z(Surface::annulus, 5);
  CharElement expect[5][5] = {
      {z, chi(5, 0), z, z, chi(5, 1, rat(1, 2))},
      {chi(5, 0, Rational(2)), z, chi(5, 0), z, z},
      {z, chi(5, 0), z, chi(5, 0), z},
      {z, z, chi(5, 0), z, chi(5, 0)},
      {z, z, z, chi(5, 0), z},
  };
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(m.at(i, j) == expect[i][j]);
}

TEST_CASE("determinant of left multiplication by a generator") {
  for (int n : {3, 5}) {
    for (int k = 1; k < n; ++k) {
      CharElement d = ann_char_det(ann_left_matrix(AnnulusSkein::cheb(n, k)), n);
      CHECK(d == chi(n, k));
    }
  }
}

TEST_CASE("pairing matrix at level 3") {
  auto m = ann_pairing_matrix(3);
  REQUIRE(m.rows() == 3);
  CharElement z(Surface::annulus, 3);
  CharElement expect[3][3] = {
      {chi(3, 0, Rational(4)), z, z},
      {z, chi(3, 0, Rational(2)), chi(3, 1)},
      {z, chi(3, 1), chi(3, 0, Rational(2))},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == expect[i][j]);
}

TEST_CASE("pairing determinant closed form") {
  for (int n : {3, 5}) {
    CharElement det = ann_pairing_det(n);
    CharElement closed = (chi(n, 0, Rational(4)) - chi(n, 1) * chi(n, 1))
                             .pow((n - 1) / 2)
                             .scaled(Rational(4));
    CHECK(det == closed);
  }
}

TEST_CASE("inversion clears against the threaded denominator") {
  for (int n : {3, 5}) {
    AnnulusSkein u = AnnulusSkein::cheb(n, 1);
    auto w = ann_invert(u);
    std::vector<CharElement> dens;
    for (auto& f : w) {
      bool seen = false;
      for (auto& d : dens)
        if (d == f.den()) {
          seen = true;
          break;
        }
      if (!seen) dens.push_back(f.den());
    }
    CharElement big = CharElement::unit(Surface::annulus, n);
    for (auto& d : dens) big = big * d;
    std::vector<CharElement> cleared;
    for (auto& f : w) {
      CharElement comp = CharElement::unit(Surface::annulus, n);
      for (auto& d : dens)
        if (!(d == f.den())) comp = comp * d;
      cleared.push_back(f.num() * comp);
    }
    CHECK(ann_mul(u, ann_expand(cleared, n)) == ann_thread(big));
  }
}

TEST_CASE("non-units are rejected") {
  // T_1 - T_1 is zero, which has no inverse
  const int n = 3;
  AnnulusSkein z = AnnulusSkein::cheb(n, 1) - AnnulusSkein::cheb(n, 1);
  CHECK_THROWS_AS(ann_invert(z), domain_error);
}
