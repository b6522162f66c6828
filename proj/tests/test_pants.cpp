#include <random>

#include "doctest.h"
#include "skein/linalg.hpp"
#include "skein/pants.hpp"
#include "skein/places.hpp"

using namespace skein;

namespace {

AnnulusSkein random_ann(int n, std::mt19937& rng) {
  AnnulusSkein u(n);
  for (int t = 0; t < 3; ++t) u.add_term(rng() % (2 * n), rat((long)(rng() % 7) - 3));
  return u;
}

}  // namespace

TEST_CASE("basis monomial product") {
  const int n = 3;
  PantsSkein a(n);
  a.add_term({1, 0, 0}, Rational(1));
  PantsSkein expect(n);
  expect.add_term({2, 0, 0}, Rational(1));
  expect.add_term({0, 0, 0}, Rational(2));
  CHECK(pants_mul(a, a) == expect);
}

TEST_CASE("pure tensors multiply slotwise") {
  std::mt19937 rng(11);
  const int n = 3;
  for (int trial = 0; trial < 30; ++trial) {
    AnnulusSkein u1 = random_ann(n, rng), u2 = random_ann(n, rng), u3 = random_ann(n, rng);
    AnnulusSkein v1 = random_ann(n, rng), v2 = random_ann(n, rng), v3 = random_ann(n, rng);
    CHECK(pants_tensor(u1, u2, u3) * pants_tensor(v1, v2, v3) ==
          pants_tensor(u1 * v1, u2 * v2, u3 * v3));
  }
}

TEST_CASE("trace factors through the slots") {
  std::mt19937 rng(13);
  const int n = 3;
  for (int trial = 0; trial < 30; ++trial) {
    AnnulusSkein u1 = random_ann(n, rng), u2 = random_ann(n, rng), u3 = random_ann(n, rng);
    CharElement t = pants_trace(pants_tensor(u1, u2, u3));
    CharElement p = pants_slot_embed(ann_trace(u1), 0) *
                    pants_slot_embed(ann_trace(u2), 1) *
                    pants_slot_embed(ann_trace(u3), 2);
    CHECK(t == p);
  }
  CHECK(pants_trace(PantsSkein::unit(n)) == CharElement::unit(Surface::pants, n));
}

TEST_CASE("thread then trace is the identity") {
  std::mt19937 rng(17);
  const int n = 3;
  const CycloContext& ctx = CycloContext::get(n);
  for (int trial = 0; trial < 20; ++trial) {
    CharElement x(Surface::pants, n);
    for (int i = 0; i < 3; ++i)
      x.add_term(char_key_pants((int)(rng() % 3), (int)(rng() % 3), (int)(rng() % 3)),
                 ctx.a((long)(rng() % 6)));
    CHECK(pants_trace(pants_thread(x)) == x);
  }
}

TEST_CASE("basis size") {
  CHECK(pants_basis_keys(3).size() == 27);
  CHECK(pants_basis_keys(5).size() == 125);
}

TEST_CASE("pairing determinant agrees with the specialized matrix") {
  const int n = 3;
  const CycloContext& ctx = CycloContext::get(n);
  CharElement det = pants_pairing_det(n);
  CHECK(!det.is_zero());
  Place phi = Place::pants_place(n, ctx.rational(Rational(0)), ctx.rational(Rational(1)),
                                 ctx.rational(Rational(7)));
  RingMatrix<CycloScalar> m = mat_convert(
      pants_pairing_matrix(n), ctx.zero(),
      [&](const CharElement& e) { return specialize_char(e, phi); });
  CHECK(specialize_char(det, phi) == det_field(m, ctx.zero(), ctx.one()));
}
