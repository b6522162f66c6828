#include "skein/pants.hpp"

#include <vector>

#include "skein/errors.hpp"

namespace skein {

namespace {

// Chebyshev product on one slot: list of (index, multiplicity) terms.
void slot_product(long a, long b, std::vector<std::pair<long, Rational>>& out) {
  out.clear();
  if (a == 0) {
    out.emplace_back(b, rat(1));
  } else if (b == 0) {
    out.emplace_back(a, rat(1));
  } else if (a == b) {
    out.emplace_back(a + b, rat(1));
    out.emplace_back(0, rat(2));
  } else {
    out.emplace_back(a + b, rat(1));
    out.emplace_back(a > b ? a - b : b - a, rat(1));
  }
}

}  // namespace

PantsSkein::PantsSkein(int level_n) : level_(level_n), ctx_(&CycloContext::get(level_n)) {}

void PantsSkein::add_term(const Key& k, const CycloScalar& c) {
  if (k[0] < 0 || k[1] < 0 || k[2] < 0) throw domain_error("pants indices must be nonnegative");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PantsSkein::add_term(const Key& k, const Rational& c) { add_term(k, ctx_->rational(c)); }

PantsSkein PantsSkein::unit(int level_n) {
  PantsSkein u(level_n);
  u.add_term(Key{0, 0, 0}, rat(1));
  return u;
}

PantsSkein PantsSkein::cheb(int level_n, long a, long b, long c) {
  PantsSkein u(level_n);
  Rational m = rat(1);
  if (a == 0) m *= 2;
  if (b == 0) m *= 2;
  if (c == 0) m *= 2;
  u.add_term(Key{a, b, c}, m);
  return u;
}

PantsSkein PantsSkein::operator+(const PantsSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in pants arithmetic");
  PantsSkein r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

PantsSkein PantsSkein::operator-(const PantsSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in pants arithmetic");
  PantsSkein r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c.times_rational(rat(-1)));
  return r;
}

PantsSkein PantsSkein::operator*(const PantsSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in pants arithmetic");
  PantsSkein r(level_);
  std::vector<std::pair<long, Rational>> s0, s1, s2;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      CycloScalar c = ca * cb;
      slot_product(a[0], b[0], s0);
      slot_product(a[1], b[1], s1);
      slot_product(a[2], b[2], s2);
      for (const auto& [k0, m0] : s0)
        for (const auto& [k1, m1] : s1)
          for (const auto& [k2, m2] : s2) r.add_term(Key{k0, k1, k2}, c.times_rational(m0 * m1 * m2));
    }
  return r;
}

bool PantsSkein::operator==(const PantsSkein& o) const {
  return level_ == o.level_ && terms_ == o.terms_;
}

PantsSkein PantsSkein::scaled(const CycloScalar& c) const {
  PantsSkein r(level_);
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

PantsSkein pants_tensor(const AnnulusSkein& u, const AnnulusSkein& v, const AnnulusSkein& w) {
  if (u.level() != v.level() || v.level() != w.level())
    throw domain_error("mixed levels in pants tensor");
  PantsSkein r(u.level());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms())
      for (const auto& [c, cc] : w.terms()) r.add_term(PantsSkein::Key{a, b, c}, ca * cb * cc);
  return r;
}

PantsSkein pants_thread(const CharElement& u) {
  if (u.surface() != Surface::pants) throw domain_error("pants_thread expects a pants character element");
  const long n = u.level();
  PantsSkein r(static_cast<int>(n));
  for (const auto& [key, c] : u.terms())
    r.add_term(PantsSkein::Key{n * key.v[0], n * key.v[1], n * key.v[2]}, c);
  return r;
}

CharElement pants_slot_embed(const CharElement& u, int slot) {
  if (u.surface() != Surface::annulus) throw domain_error("slot embedding expects an annulus character element");
  if (slot < 0 || slot > 2) throw domain_error("slot index out of range");
  CharElement r(Surface::pants, u.level());
  for (const auto& [key, c] : u.terms()) {
    CharKey k{};
    k.v[slot] = key.v[0];
    r.add_term(k, c);
  }
  return r;
}

CharElement pants_trace(const PantsSkein& u) {
  const int n = u.level();
  CharElement r(Surface::pants, n);
  for (const auto& [k, c] : u.terms()) {
    if (k[0] % n != 0 || k[1] % n != 0 || k[2] % n != 0) continue;
    r.add_term(CharKey{{static_cast<int>(k[0] / n), static_cast<int>(k[1] / n), static_cast<int>(k[2] / n)}}, c);
  }
  return r;
}

std::vector<PantsSkein::Key> pants_basis_keys(int level_n) {
  std::vector<PantsSkein::Key> keys;
  keys.reserve(static_cast<std::size_t>(level_n) * level_n * level_n);
  for (long a = 0; a < level_n; ++a)
    for (long b = 0; b < level_n; ++b)
      for (long c = 0; c < level_n; ++c) keys.push_back(PantsSkein::Key{a, b, c});
  return keys;
}

RingMatrix<CharElement> pants_pairing_matrix(int level_n) {
  const auto keys = pants_basis_keys(level_n);
  const std::size_t dim = keys.size();
  const CharElement zero(Surface::pants, level_n);
  std::vector<PantsSkein> basis;
  basis.reserve(dim);
  for (const auto& k : keys) basis.push_back(PantsSkein::cheb(level_n, k[0], k[1], k[2]));
  RingMatrix<CharElement> m(dim, dim, zero);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      CharElement t = pants_trace(basis[i] * basis[j]);
      m.at(i, j) = t;
      if (i != j) m.at(j, i) = t;
    }
  return m;
}

CharElement pants_pairing_det(int level_n) {
  CharElement ann_det = ann_pairing_det(level_n);
  CharElement r = CharElement::unit(Surface::pants, level_n);
  const int nsq = level_n * level_n;
  for (int slot = 0; slot < 3; ++slot) r = r * pants_slot_embed(ann_det, slot).pow(nsq);
  return r;
}

CharFraction pants_pairing_det_direct(int level_n) {
  const CharFraction fzero = CharFraction::zero(Surface::pants, level_n);
  const CharFraction fone = CharFraction::one(Surface::pants, level_n);
  RingMatrix<CharFraction> mf = mat_convert(pants_pairing_matrix(level_n), fzero,
                                            [](const CharElement& e) { return CharFraction(e); });
  return det_field(mf, fzero, fone, [](const CharFraction& f) { return f.den_is_unit(); });
}

}  // namespace skein
