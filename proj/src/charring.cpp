#include "skein/charring.hpp"

#include <cstdlib>
#include <numeric>

#include "skein/chebyshev.hpp"
#include "skein/errors.hpp"

namespace skein {

const char* surface_name(Surface s) {
  switch (s) {
    case Surface::annulus: return "annulus";
    case Surface::pants: return "pants";
    case Surface::torus: return "torus";
    case Surface::punctured: return "ptorus";
  }
  return "?";
}

static void canon_pair(int& p, int& q) {
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
}

CharKey char_key_torus(int p, int q) {
  canon_pair(p, q);
  return CharKey{{p, q, 0}};
}

CharKey char_key_punctured(int k, int p, int q) {
  if (k < 0) throw domain_error("negative delta index");
  canon_pair(p, q);
  return CharKey{{k, p, q}};
}

// ---------------------------------------------------------------------------
// key products

namespace {

using SlotTerm = std::pair<int, Rational>;     // index, multiplicity
using PairTerm = std::pair<std::pair<int, int>, Rational>;

// T_{Na} T_{Nb} = T_{N(a+b)} + T_{N|a-b|}, slot index 0 = unit, T_0 = 2 unit.
std::vector<SlotTerm> slot_mul(int a, int b) {
  if (a == 0) return {{b, Rational(1)}};
  if (b == 0) return {{a, Rational(1)}};
  std::vector<SlotTerm> out{{a + b, Rational(1)}};
  if (a == b)
    out.push_back({0, Rational(2)});
  else
    out.push_back({std::abs(a - b), Rational(1)});
  return out;
}

// (Np,Nq)_T (Nr,Ns)_T = (-1)^{ps-qr} [ (N(p+r),N(q+s))_T + (N(p-r),N(q-s))_T ],
// written on canonical pairs, with (0,0)_T = 2 unit.
std::vector<PairTerm> torus_pair_mul(int p, int q, int r, int s) {
  if (p == 0 && q == 0) return {{{r, s}, Rational(1)}};
  if (r == 0 && s == 0) return {{{p, q}, Rational(1)}};
  long det = static_cast<long>(p) * s - static_cast<long>(q) * r;
  Rational sign = (det % 2 != 0) ? Rational(-1) : Rational(1);
  std::vector<PairTerm> out;
  for (int which = 0; which < 2; ++which) {
    int pp = which == 0 ? p + r : p - r;
    int qq = which == 0 ? q + s : q - s;
    canon_pair(pp, qq);
    if (pp == 0 && qq == 0)
      out.push_back({{0, 0}, sign * 2});
    else
      out.push_back({{pp, qq}, sign});
  }
  return out;
}

std::vector<std::pair<CharKey, Rational>> key_mul(Surface s, const CharKey& k1,
                                                  const CharKey& k2) {
  std::vector<std::pair<CharKey, Rational>> out;
  switch (s) {
    case Surface::annulus:
      for (const auto& [a, m] : slot_mul(k1.v[0], k2.v[0]))
        out.push_back({char_key_annulus(a), m});
      break;
    case Surface::pants:
      for (const auto& [a, ma] : slot_mul(k1.v[0], k2.v[0]))
        for (const auto& [b, mb] : slot_mul(k1.v[1], k2.v[1]))
          for (const auto& [c, mc] : slot_mul(k1.v[2], k2.v[2]))
            out.push_back({char_key_pants(a, b, c), ma * mb * mc});
      break;
    case Surface::torus:
      for (const auto& [pq, m] : torus_pair_mul(k1.v[0], k1.v[1], k2.v[0], k2.v[1]))
        out.push_back({CharKey{{pq.first, pq.second, 0}}, m});
      break;
    case Surface::punctured:
      for (const auto& [k, mk] : slot_mul(k1.v[0], k2.v[0]))
        for (const auto& [pq, m] : torus_pair_mul(k1.v[1], k1.v[2], k2.v[1], k2.v[2]))
          out.push_back({CharKey{{k, pq.first, pq.second}}, mk * m});
      break;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharElement

CharElement::CharElement(Surface s, int N)
    : surf_(s), N_(N), ctx_(&CycloContext::get(N)) {}

CharElement CharElement::unit(Surface s, int N) {
  CharElement e(s, N);
  e.add_term(CharKey{}, e.ctx_->one());
  return e;
}

CharElement CharElement::key_term(Surface s, int N, const CharKey& k) {
  CharElement e(s, N);
  e.add_term(k, e.ctx_->one());
  return e;
}

CharElement CharElement::key_term(Surface s, int N, const CharKey& k,
                                  const CycloScalar& c) {
  CharElement e(s, N);
  e.add_term(k, c);
  return e;
}

void CharElement::add_term(const CharKey& k, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool CharElement::is_unit_multiple() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == CharKey{};
}

CycloScalar CharElement::unit_coefficient() const {
  auto it = terms_.find(CharKey{});
  return it == terms_.end() ? ctx_->zero() : it->second;
}

void CharElement::check_compatible(const CharElement& o) const {
  if (surf_ != o.surf_ || N_ != o.N_)
    throw domain_error("mixing character elements of different surfaces or levels");
}

CharElement CharElement::operator-() const {
  CharElement r(surf_, N_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

CharElement CharElement::operator+(const CharElement& o) const {
  check_compatible(o);
  CharElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

CharElement CharElement::operator-(const CharElement& o) const {
  check_compatible(o);
  CharElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

CharElement CharElement::operator*(const CharElement& o) const {
  check_compatible(o);
  CharElement r(surf_, N_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      CycloScalar c = c1 * c2;
      for (const auto& [k, m] : key_mul(surf_, k1, k2))
        r.add_term(k, c.times_rational(m));
    }
  }
  return r;
}

bool CharElement::operator==(const CharElement& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

CharElement CharElement::scaled(const CycloScalar& c) const {
  CharElement r(surf_, N_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : terms_) r.add_term(k, x * c);
  return r;
}

CharElement CharElement::scaled(const Rational& c) const {
  CharElement r(surf_, N_);
  if (c == 0) return r;
  for (const auto& [k, x] : terms_) r.terms_.emplace(k, x.times_rational(c));
  return r;
}

CharElement CharElement::pow(long e) const {
  if (e < 0) throw domain_error("negative power of a character element");
  CharElement acc = unit(surf_, N_);
  CharElement base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

CharElement char_mul(const CharElement& a, const CharElement& b) { return a * b; }

// ---------------------------------------------------------------------------
// CharFraction

CharFraction::CharFraction(const CharElement& num)
    : num_(num), den_(CharElement::unit(num.surface(), num.level())) {}

CharFraction::CharFraction(const CharElement& num, const CharElement& den)
    : num_(num), den_(den) {
  if (den.is_zero()) throw domain_error("zero denominator");
  if (num_.surface() != den_.surface() || num_.level() != den_.level())
    throw domain_error("fraction with mismatched numerator and denominator");
  if (num_.is_zero()) den_ = CharElement::unit(num_.surface(), num_.level());
}

bool CharFraction::den_is_unit() const { return den_.is_unit_multiple(); }

static bool char_is_one(const CharElement& e) {
  return e.terms().size() == 1 && e.terms().begin()->first == CharKey{} &&
         e.terms().begin()->second == e.context().one();
}

CharFraction CharFraction::operator-() const { return CharFraction(-num_, den_); }

CharFraction CharFraction::operator+(const CharFraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return CharFraction(num_ + o.num_, den_);
  return CharFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CharFraction CharFraction::operator-(const CharFraction& o) const { return *this + (-o); }

CharFraction CharFraction::operator*(const CharFraction& o) const {
  if (is_zero() || o.is_zero()) return zero(num_.surface(), num_.level());
  if (char_is_one(den_)) return CharFraction(num_ * o.num_, o.den_);
  if (char_is_one(o.den_)) return CharFraction(num_ * o.num_, den_);
  return CharFraction(num_ * o.num_, den_ * o.den_);
}

CharFraction CharFraction::operator/(const CharFraction& o) const {
  if (o.is_zero()) throw domain_error("division by zero fraction");
  if (is_zero()) return zero(num_.surface(), num_.level());
  return CharFraction(num_ * o.den_, den_ * o.num_);
}

bool CharFraction::operator==(const CharFraction& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

// ---------------------------------------------------------------------------
// Laurent oracle

LaurentElement LaurentElement::monomial(const CycloContext& ctx, long i, long j,
                                        const CycloScalar& c) {
  LaurentElement e(ctx);
  e.add_term(i, j, c);
  return e;
}

void LaurentElement::add_term(long i, long j, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement r(*ctx_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
  LaurentElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

LaurentElement LaurentElement::operator-(const LaurentElement& o) const {
  return *this + (-o);
}

LaurentElement LaurentElement::operator*(const LaurentElement& o) const {
  LaurentElement r(*ctx_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

bool LaurentElement::operator==(const LaurentElement& o) const {
  return terms_ == o.terms_;
}

LaurentElement laurent_embed_curve(const CycloContext& ctx, long p, long q) {
  LaurentElement e(ctx);
  if (p == 0 && q == 0) {
    e.add_term(0, 0, ctx.rational(Rational(2)));
    return e;
  }
  long g = std::gcd(std::abs(p), std::abs(q));
  CycloScalar c = ctx.rational(Rational(g % 2 != 0 ? -1 : 1));
  e.add_term(p, q, c);
  e.add_term(-p, -q, c);
  return e;
}

LaurentElement laurent_embed(const CharElement& u) {
  if (u.surface() != Surface::torus)
    throw domain_error("laurent_embed requires a torus character element");
  const CycloContext& ctx = u.context();
  long N = u.level();
  LaurentElement r(ctx);
  for (const auto& [k, c] : u.terms()) {
    long p = k.v[0], q = k.v[1];
    if (p == 0 && q == 0) {
      r.add_term(0, 0, c);
      continue;
    }
    long g = std::gcd(std::abs(p), std::abs(q));  // N odd, so parity of N*g is parity of g
    CycloScalar s = (g % 2 != 0) ? -c : c;
    r.add_term(N * p, N * q, s);
    r.add_term(-N * p, -N * q, s);
  }
  return r;
}

bool laurent_divide(const LaurentElement& num, const LaurentElement& den,
                    LaurentElement& quot) {
  const CycloContext& ctx = num.context();
  if (den.is_zero()) throw domain_error("laurent division by zero");
  if (num.is_zero()) {
    quot = LaurentElement(ctx);
    return true;
  }

  // Shift both operands into the polynomial quadrant; the quotient's shift is
  // the difference of the input shifts.
  long ni = num.terms().begin()->first.first, nj = 0;
  long di = den.terms().begin()->first.first, dj = 0;
  bool first = true;
  for (const auto& [k, c] : num.terms()) {
    if (first || k.second < nj) nj = k.second;
    first = false;
  }
  first = true;
  for (const auto& [k, c] : den.terms()) {
    if (first || k.second < dj) dj = k.second;
    first = false;
  }

  LaurentElement r(ctx), d(ctx);
  for (const auto& [k, c] : num.terms()) r.add_term(k.first - ni, k.second - nj, c);
  for (const auto& [k, c] : den.terms()) d.add_term(k.first - di, k.second - dj, c);

  auto lead_d = *d.terms().rbegin();
  CycloScalar lead_d_inv = lead_d.second.inverse();
  LaurentElement q(ctx);
  while (!r.is_zero()) {
    auto lead_r = *r.terms().rbegin();
    long mi = lead_r.first.first - lead_d.first.first;
    long mj = lead_r.first.second - lead_d.first.second;
    if (mi < 0 || mj < 0) return false;
    CycloScalar mc = lead_r.second * lead_d_inv;
    q.add_term(mi, mj, mc);
    r = r - d * LaurentElement::monomial(ctx, mi, mj, mc);
  }
  LaurentElement shifted(ctx);
  for (const auto& [k, c] : q.terms())
    shifted.add_term(k.first + (ni - di), k.second + (nj - dj), c);
  quot = shifted;
  return true;
}

CharElement laurent_unembed_torus(const LaurentElement& e, int N) {
  CharElement out(Surface::torus, N);
  LaurentElement rest = e;
  while (!rest.is_zero()) {
    auto lead = *rest.terms().rbegin();
    long i = lead.first.first, j = lead.first.second;
    if (i == 0 && j == 0) {
      out.add_term(CharKey{}, lead.second);
      rest.add_term(0, 0, -lead.second);
      continue;
    }
    if (i < 0 || (i == 0 && j < 0) || i % N != 0 || j % N != 0)
      throw internal_check_error("laurent element is not in the torus character image");
    long g = std::gcd(std::abs(i), std::abs(j));
    CycloScalar coeff = (g % 2 != 0) ? -lead.second : lead.second;
    out.add_term(char_key_torus(static_cast<int>(i / N), static_cast<int>(j / N)), coeff);
    rest.add_term(i, j, -lead.second);
    rest.add_term(-i, -j, -lead.second);
  }
  return out;
}

CycloScalar laurent_eval(const LaurentElement& e, const CycloScalar& lambda,
                         const CycloScalar& mu) {
  const CycloContext& ctx = e.context();
  CycloScalar out = ctx.zero();
  for (const auto& [k, c] : e.terms())
    out += c * lambda.pow(k.first) * mu.pow(k.second);
  return out;
}

// ---------------------------------------------------------------------------
// univariate expansion for the annulus

CycloPoly annulus_char_expand(const CharElement& a) {
  if (a.surface() != Surface::annulus)
    throw domain_error("expansion requires an annulus character element");
  const CycloContext& ctx = a.context();
  long N = a.level();
  CycloPoly out;
  auto add = [&](long deg, const CycloScalar& c) {
    auto it = out.find(deg);
    if (it == out.end()) {
      if (!c.is_zero()) out.emplace(deg, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  };
  for (const auto& [k, c] : a.terms()) {
    if (k.v[0] == 0) {
      add(0, c);
      continue;
    }
    for (const auto& [deg, r] : cheb_T(N * k.v[0]).coeffs) add(deg, c.times_rational(r));
  }
  return out;
}

bool cyclopoly_divide(const CycloPoly& num, const CycloPoly& den, CycloPoly& quot,
                      const CycloContext& ctx) {
  if (den.empty()) throw domain_error("polynomial division by zero");
  CycloPoly r = num;
  CycloPoly q;
  CycloScalar lead_inv = den.rbegin()->second.inverse();
  long dd = den.rbegin()->first;
  while (!r.empty()) {
    long rd = r.rbegin()->first;
    if (rd < dd) return false;
    CycloScalar f = r.rbegin()->second * lead_inv;
    q[rd - dd] = f;
    for (const auto& [deg, c] : den) {
      long t = deg + rd - dd;
      auto it = r.find(t);
      CycloScalar val = (it == r.end()) ? ctx.zero() : it->second;
      val -= c * f;
      if (val.is_zero()) {
        if (it != r.end()) r.erase(it);
      } else {
        r[t] = val;
      }
    }
  }
  quot = q;
  return true;
}

CharElement annulus_char_collect(const CycloPoly& p, int N) {
  CharElement out(Surface::annulus, N);
  CycloPoly rest = p;
  while (!rest.empty()) {
    long d = rest.rbegin()->first;
    CycloScalar lead = rest.rbegin()->second;
    if (d == 0) {
      out.add_term(CharKey{}, lead);
      break;
    }
    if (d % N != 0)
      throw internal_check_error("polynomial is not in the annulus character image");
    out.add_term(char_key_annulus(static_cast<int>(d / N)), lead);
    for (const auto& [deg, r] : cheb_T(d).coeffs) {
      auto it = rest.find(deg);
      CycloScalar val = (it == rest.end()) ? out.context().zero() : it->second;
      val -= lead.times_rational(r);
      if (val.is_zero()) {
        if (it != rest.end()) rest.erase(it);
      } else {
        rest[deg] = val;
      }
    }
  }
  return out;
}

}  // namespace skein
