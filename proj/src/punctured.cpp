#include "skein/punctured.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"

namespace skein {

namespace {

void canon_pair(long& p, long& q) {
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
}

CycloScalar frame_scalar(const CycloContext& ctx) {
  return ctx.a(2) + ctx.a(-2);
}

}  // namespace

PuncturedSkein::PuncturedSkein(int level_n)
    : level_(level_n), ctx_(&CycloContext::get(level_n)) {}

void PuncturedSkein::add_boundary(long k, const CycloScalar& c) {
  if (k < 0) throw domain_error("negative delta exponent");
  if (c.is_zero()) return;
  Key key{k, 0, 0};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PuncturedSkein::add_curve(long k, long p, long q, const CycloScalar& c) {
  if (k < 0) throw domain_error("negative delta exponent");
  if (c.is_zero()) return;
  canon_pair(p, q);
  if (p == 0 && q == 0) {
    add_boundary(k, c + c);
    return;
  }
  Key key{k, p, q};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PuncturedSkein PuncturedSkein::unit(int level_n) {
  PuncturedSkein u(level_n);
  u.add_boundary(0, u.ctx_->one());
  return u;
}

PuncturedSkein PuncturedSkein::delta_power(int level_n, long k) {
  PuncturedSkein u(level_n);
  u.add_boundary(k, u.ctx_->one());
  return u;
}

PuncturedSkein PuncturedSkein::curve(int level_n, long p, long q) {
  PuncturedSkein u(level_n);
  u.add_curve(0, p, q, u.ctx_->one());
  return u;
}

void PuncturedSkein::check_compatible(const PuncturedSkein& o) const {
  if (level_ != o.level_)
    throw domain_error("mixed levels in punctured torus arithmetic");
}

PuncturedSkein PuncturedSkein::operator-() const {
  PuncturedSkein r(level_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

PuncturedSkein PuncturedSkein::operator+(const PuncturedSkein& o) const {
  check_compatible(o);
  PuncturedSkein r = *this;
  for (const auto& [key, c] : o.terms_) {
    auto it = r.terms_.find(key);
    if (it == r.terms_.end()) {
      r.terms_.emplace(key, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) r.terms_.erase(it);
  }
  return r;
}

PuncturedSkein PuncturedSkein::operator-(const PuncturedSkein& o) const {
  return *this + (-o);
}

bool PuncturedSkein::operator==(const PuncturedSkein& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

PuncturedSkein PuncturedSkein::scaled(const CycloScalar& c) const {
  PuncturedSkein r(level_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
  return r;
}

PuncturedSkein PuncturedSkein::scaled(const Rational& c) const {
  return scaled(ctx_->rational(c));
}

PuncturedSkein eta_delta_convert(const PuncturedSkein& u, BoundaryBasis target) {
  const CycloContext& ctx = u.context();
  CycloScalar base = frame_scalar(ctx);
  if (target == BoundaryBasis::eta_power) base = -base;

  long max_k = 0;
  for (const auto& [key, c] : u.terms())
    if (key[0] > max_k) max_k = key[0];
  std::vector<CycloScalar> base_pow;
  base_pow.reserve(static_cast<std::size_t>(max_k) + 1);
  base_pow.push_back(ctx.one());
  for (long i = 1; i <= max_k; ++i) base_pow.push_back(base_pow.back() * base);

  PuncturedSkein r(u.level());
  for (const auto& [key, c] : u.terms()) {
    const long k = key[0];
    for (long j = 0; j <= k; ++j) {
      CycloScalar term =
          c * base_pow[static_cast<std::size_t>(k - j)].times_rational(
                  Rational(binomial(k, j)));
      if (key[1] == 0 && key[2] == 0)
        r.add_boundary(j, term);
      else
        r.add_curve(j, key[1], key[2], term);
    }
  }
  return r;
}

PuncturedSkein delta_poly_mul(const PuncturedSkein& f, const PuncturedSkein& u) {
  if (f.level() != u.level())
    throw domain_error("mixed levels in punctured torus arithmetic");
  PuncturedSkein r(u.level());
  for (const auto& [fkey, fc] : f.terms()) {
    if (fkey[1] != 0 || fkey[2] != 0)
      throw domain_error("left factor must be a polynomial in the boundary curve");
    for (const auto& [ukey, uc] : u.terms()) {
      const CycloScalar c = fc * uc;
      if (ukey[1] == 0 && ukey[2] == 0)
        r.add_boundary(fkey[0] + ukey[0], c);
      else
        r.add_curve(fkey[0] + ukey[0], ukey[1], ukey[2], c);
    }
  }
  return r;
}

PuncturedSkein cheb_delta(int level_n, long a) {
  if (a < 0) throw domain_error("negative Chebyshev index");
  const CycloContext& ctx = CycloContext::get(level_n);
  PuncturedSkein r(level_n);
  for (const auto& [deg, coeff] : cheb_T(a).coeffs)
    r.add_boundary(deg, ctx.rational(coeff));
  return r;
}

CharElement punctured_trace(const PuncturedSkein& u) {
  const int n = u.level();
  CharElement out(Surface::punctured, n);
  for (const auto& [key, c] : u.terms()) {
    if (key[1] % n != 0 || key[2] % n != 0) continue;
    IntPolynomial mono;
    mono.add_term(key[0], Rational(1));
    for (const auto& [j, r] : to_cheb_basis(mono)) {
      if (j % n != 0) continue;
      Rational mult = r;
      if (j == 0) mult *= 2;
      out.add_term(char_key_punctured(static_cast<int>(j / n),
                                      static_cast<int>(key[1] / n),
                                      static_cast<int>(key[2] / n)),
                   c.times_rational(mult));
    }
  }
  return out;
}

TorusSkein quotient_to_torus(const PuncturedSkein& u) {
  const CycloContext& ctx = u.context();
  const CycloScalar neg_e = -frame_scalar(ctx);

  long max_k = 0;
  for (const auto& [key, c] : u.terms())
    if (key[0] > max_k) max_k = key[0];
  std::vector<CycloScalar> pow;
  pow.reserve(static_cast<std::size_t>(max_k) + 1);
  pow.push_back(ctx.one());
  for (long i = 1; i <= max_k; ++i) pow.push_back(pow.back() * neg_e);

  TorusSkein r(u.level());
  for (const auto& [key, c] : u.terms()) {
    const CycloScalar v = c * pow[static_cast<std::size_t>(key[0])];
    if (key[1] == 0 && key[2] == 0)
      r.add_unit(v);
    else
      r.add_curve(static_cast<int>(key[1]), static_cast<int>(key[2]), v);
  }
  return r;
}

bool epsilon_bound_predicate(const PuncturedSkein& eps, long p, long q, long r,
                             long s) {
  const long weight_bound =
      std::labs(p) + std::labs(q) + std::labs(r) + std::labs(s) - 4;
  const long degree_bound =
      std::min(std::labs(p) + std::labs(r), std::labs(q) + std::labs(s)) / 2;
  const PuncturedSkein in_eta = eta_delta_convert(eps, BoundaryBasis::eta_power);
  for (const auto& [key, c] : in_eta.terms()) {
    if (std::labs(key[1]) + std::labs(key[2]) > weight_bound) return false;
    if (key[0] > degree_bound) return false;
  }
  return true;
}

}  // namespace skein
