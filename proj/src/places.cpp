#include "skein/places.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "skein/annulus.hpp"
#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"
#include "skein/linalg.hpp"
#include "skein/pants.hpp"
#include "skein/torus.hpp"

namespace skein {

Place::Place(Surface s, int level_n, std::vector<CycloScalar> params)
    : surf_(s), N_(level_n), ctx_(&CycloContext::get(level_n)),
      params_(std::move(params)) {}

Place Place::annulus_place(int level_n, const CycloScalar& z) {
  return Place(Surface::annulus, level_n, {z});
}

Place Place::pants_place(int level_n, const CycloScalar& z1,
                         const CycloScalar& z2, const CycloScalar& z3) {
  return Place(Surface::pants, level_n, {z1, z2, z3});
}

Place Place::torus_place(int level_n, const CycloScalar& lambda,
                         const CycloScalar& mu) {
  if (lambda.is_zero() || mu.is_zero())
    throw domain_error("torus place parameters must be nonzero");
  return Place(Surface::torus, level_n, {lambda, mu});
}

Place Place::punctured_place(int level_n, const CycloScalar& lambda,
                             const CycloScalar& mu, const CycloScalar& w) {
  if (lambda.is_zero() || mu.is_zero())
    throw domain_error("torus place parameters must be nonzero");
  return Place(Surface::punctured, level_n, {lambda, mu, w});
}

namespace {

CycloScalar curve_value(const Place& phi, long p, long q) {
  const CycloScalar& lambda = phi.params()[0];
  const CycloScalar& mu = phi.params()[1];
  const long n = phi.level();
  const long g = std::gcd(std::labs(p), std::labs(q));
  CycloScalar v = lambda.pow(n * p) * mu.pow(n * q) +
                  lambda.pow(-n * p) * mu.pow(-n * q);
  return (g % 2 != 0) ? -v : v;
}

CycloScalar specialize_key(const CharKey& key, const Place& phi) {
  const CycloContext& ctx = phi.context();
  const CycloScalar two = ctx.rational(2);
  switch (phi.surface()) {
    case Surface::annulus: {
      const int a = key.v[0];
      return a == 0 ? ctx.one() : cheb_eval<CycloScalar>(a, phi.params()[0], two);
    }
    case Surface::pants: {
      CycloScalar v = ctx.one();
      for (int slot = 0; slot < 3; ++slot)
        if (key.v[slot] != 0)
          v *= cheb_eval<CycloScalar>(key.v[slot], phi.params()[slot], two);
      return v;
    }
    case Surface::torus: {
      if (key.v[0] == 0 && key.v[1] == 0) return ctx.one();
      return curve_value(phi, key.v[0], key.v[1]);
    }
    case Surface::punctured: {
      CycloScalar v = ctx.one();
      if (key.v[0] != 0) {
        const CycloScalar tnw =
            cheb_eval<CycloScalar>(phi.level(), phi.params()[2], two);
        v *= cheb_eval<CycloScalar>(key.v[0], tnw, two);
      }
      if (key.v[1] != 0 || key.v[2] != 0)
        v *= curve_value(phi, key.v[1], key.v[2]);
      return v;
    }
  }
  throw internal_check_error("unhandled surface in specialization");
}

}  // namespace

CycloScalar specialize_char(const CharElement& u, const Place& phi) {
  if (u.surface() != phi.surface() || u.level() != phi.level())
    throw domain_error("place does not match the element's surface and level");
  CycloScalar acc = phi.context().zero();
  for (const auto& [key, c] : u.terms()) acc += c * specialize_key(key, phi);
  return acc;
}

const char* verdict_name(FrobeniusVerdict v) {
  switch (v) {
    case FrobeniusVerdict::frobenius: return "frobenius";
    case FrobeniusVerdict::degenerate: return "degenerate";
    case FrobeniusVerdict::not_computable: return "not computable";
  }
  return "?";
}

FrobeniusResult specialized_frobenius_check(const Place& phi) {
  const CycloContext& ctx = phi.context();
  if (phi.surface() == Surface::punctured)
    return {FrobeniusVerdict::not_computable, ctx.zero()};

  RingMatrix<CharElement> pairing = [&] {
    switch (phi.surface()) {
      case Surface::annulus: return ann_pairing_matrix(phi.level());
      case Surface::pants: return pants_pairing_matrix(phi.level());
      default: return torus_pairing_matrix(phi.level());
    }
  }();

  RingMatrix<CycloScalar> m = mat_convert(
      pairing, ctx.zero(),
      [&](const CharElement& e) { return specialize_char(e, phi); });
  CycloScalar det = det_field(std::move(m), ctx.zero(), ctx.one());
  return {det.is_zero() ? FrobeniusVerdict::degenerate : FrobeniusVerdict::frobenius,
          det};
}

CycloScalar left_det_at_place(int level_n, long k, const CycloScalar& z) {
  if (k < 1 || k > level_n - 1)
    throw domain_error("left multiplication index out of range");
  const CycloContext& ctx = CycloContext::get(level_n);
  Place phi = Place::annulus_place(level_n, z);
  RingMatrix<CharElement> l = ann_left_matrix(AnnulusSkein::cheb(level_n, k));
  RingMatrix<CycloScalar> m = mat_convert(
      l, ctx.zero(), [&](const CharElement& e) { return specialize_char(e, phi); });
  return det_field(std::move(m), ctx.zero(), ctx.one());
}

CycloScalar annulus_z_from_q(int level_n, const CycloScalar& q) {
  if (q.is_zero()) throw domain_error("multiplicative parameter must be nonzero");
  return q.pow(level_n) + q.pow(-level_n);
}

std::vector<CycloScalar> annulus_fiber_roots(int level_n, const CycloScalar& q) {
  if (q.is_zero()) throw domain_error("multiplicative parameter must be nonzero");
  const CycloContext& ctx = CycloContext::get(level_n);
  const CycloScalar qinv = q.inverse();
  std::vector<CycloScalar> roots;
  roots.reserve(static_cast<std::size_t>(level_n));
  for (int j = 0; j < level_n; ++j)
    roots.push_back(ctx.a(2 * j) * q + ctx.a(-2 * j) * qinv);
  return roots;
}

std::array<CycloScalar, 3> torus_trace_coordinates(const Place& phi) {
  if (phi.surface() != Surface::torus && phi.surface() != Surface::punctured)
    throw domain_error("trace coordinates need torus parameters");
  const CycloScalar& lambda = phi.params()[0];
  const CycloScalar& mu = phi.params()[1];
  const CycloScalar lm = lambda * mu;
  return {-(lambda + lambda.inverse()), -(mu + mu.inverse()),
          -(lm + lm.inverse())};
}

}  // namespace skein
