#include "skein/annulus.hpp"

#include "skein/errors.hpp"

namespace skein {

AnnulusSkein::AnnulusSkein(int level_n) : level_(level_n), ctx_(&CycloContext::get(level_n)) {}

void AnnulusSkein::add_term(long k, const CycloScalar& c) {
  if (k < 0) throw domain_error("annulus basis index must be nonnegative");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AnnulusSkein::add_term(long k, const Rational& c) { add_term(k, ctx_->rational(c)); }

AnnulusSkein AnnulusSkein::unit(int level_n) {
  AnnulusSkein u(level_n);
  u.add_term(0, rat(1));
  return u;
}

AnnulusSkein AnnulusSkein::cheb(int level_n, long k) {
  AnnulusSkein u(level_n);
  if (k == 0)
    u.add_term(0, rat(2));
  else
    u.add_term(k, rat(1));
  return u;
}

AnnulusSkein AnnulusSkein::operator+(const AnnulusSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in annulus arithmetic");
  AnnulusSkein r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

AnnulusSkein AnnulusSkein::operator-(const AnnulusSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in annulus arithmetic");
  AnnulusSkein r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c.times_rational(rat(-1)));
  return r;
}

AnnulusSkein AnnulusSkein::operator*(const AnnulusSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in annulus arithmetic");
  AnnulusSkein r(level_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      CycloScalar c = ca * cb;
      if (a == 0) {
        r.add_term(b, c);
      } else if (b == 0) {
        r.add_term(a, c);
      } else {
        r.add_term(a + b, c);
        if (a == b)
          r.add_term(0, c.times_rational(rat(2)));
        else
          r.add_term(a > b ? a - b : b - a, c);
      }
    }
  return r;
}

bool AnnulusSkein::operator==(const AnnulusSkein& o) const {
  return level_ == o.level_ && terms_ == o.terms_;
}

AnnulusSkein AnnulusSkein::scaled(const CycloScalar& c) const {
  AnnulusSkein r(level_);
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

AnnulusSkein AnnulusSkein::scaled(const Rational& c) const {
  AnnulusSkein r(level_);
  for (const auto& [k, v] : terms_) r.add_term(k, v.times_rational(c));
  return r;
}

AnnulusSkein ann_thread(const CharElement& u) {
  if (u.surface() != Surface::annulus) throw domain_error("ann_thread expects an annulus character element");
  const long n = u.level();
  AnnulusSkein r(static_cast<int>(n));
  for (const auto& [key, c] : u.terms()) r.add_term(n * key.v[0], c);
  return r;
}

std::vector<CharElement> ann_reduce(const AnnulusSkein& u) {
  const int n = u.level();
  std::vector<CharElement> coords(static_cast<std::size_t>(n), CharElement(Surface::annulus, n));
  std::map<long, CycloScalar> work = u.terms();
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const long k = it->first;
    const CycloScalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    const long a = k / n;
    const long b = k % n;
    if (k == 0) {
      coords[0].add_term(CharKey{0, 0, 0}, c.times_rational(rat(1, 2)));
    } else if (a == 0) {
      coords[static_cast<std::size_t>(b)].add_term(CharKey{0, 0, 0}, c);
    } else if (b == 0) {
      coords[0].add_term(CharKey{static_cast<int>(a), 0, 0}, c.times_rational(rat(1, 2)));
    } else {
      // T_{an+b} = T_{an} T_b - T_{an-b}
      coords[static_cast<std::size_t>(b)].add_term(CharKey{static_cast<int>(a), 0, 0}, c);
      auto jt = work.find(a * n - b);
      if (jt == work.end()) {
        work.emplace(a * n - b, c.times_rational(rat(-1)));
      } else {
        jt->second = jt->second - c;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return coords;
}

AnnulusSkein ann_expand(const std::vector<CharElement>& coords, int level_n) {
  AnnulusSkein r(level_n);
  for (std::size_t j = 0; j < coords.size(); ++j)
    r = r + ann_thread(coords[j]) * AnnulusSkein::cheb(level_n, static_cast<long>(j));
  return r;
}

RingMatrix<CharElement> ann_left_matrix(const AnnulusSkein& u) {
  const int n = u.level();
  const CharElement zero(Surface::annulus, n);
  RingMatrix<CharElement> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), zero);
  for (int j = 0; j < n; ++j) {
    std::vector<CharElement> col = ann_reduce(u * AnnulusSkein::cheb(n, j));
    for (int i = 0; i < n; ++i) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

CharElement ann_trace(const AnnulusSkein& u) {
  const int n = u.level();
  CharElement r(Surface::annulus, n);
  for (const auto& [k, c] : u.terms()) {
    if (k % n != 0) continue;
    r.add_term(CharKey{static_cast<int>(k / n), 0, 0}, c);
  }
  return r;
}

RingMatrix<CharElement> ann_pairing_matrix(int level_n) {
  const CharElement zero(Surface::annulus, level_n);
  RingMatrix<CharElement> m(static_cast<std::size_t>(level_n), static_cast<std::size_t>(level_n), zero);
  for (int i = 0; i < level_n; ++i)
    for (int j = 0; j < level_n; ++j)
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          ann_trace(AnnulusSkein::cheb(level_n, i) * AnnulusSkein::cheb(level_n, j));
  return m;
}

CharElement ann_char_det(const RingMatrix<CharElement>& m, int level_n) {
  const CycloContext& ctx = CycloContext::get(level_n);
  const CharElement zero(Surface::annulus, level_n);
  const CharFraction fzero = CharFraction::zero(Surface::annulus, level_n);
  const CharFraction fone = CharFraction::one(Surface::annulus, level_n);
  RingMatrix<CharFraction> mf =
      mat_convert(m, fzero, [](const CharElement& e) { return CharFraction(e); });
  CharFraction d = det_field(mf, fzero, fone, [](const CharFraction& f) { return f.den_is_unit(); });
  if (d.is_zero()) return zero;
  CycloPoly num = annulus_char_expand(d.num());
  CycloPoly den = annulus_char_expand(d.den());
  CycloPoly q;
  if (!cyclopoly_divide(num, den, q, ctx))
    throw internal_check_error("determinant certification failed: denominator does not divide numerator exactly");
  return annulus_char_collect(q, level_n);
}

CharElement ann_pairing_det(int level_n) { return ann_char_det(ann_pairing_matrix(level_n), level_n); }

std::vector<CharFraction> ann_invert(const AnnulusSkein& u) {
  const int n = u.level();
  if (u.is_zero()) throw domain_error("cannot invert zero");
  const CharFraction fzero = CharFraction::zero(Surface::annulus, n);
  RingMatrix<CharFraction> lf = mat_convert(ann_left_matrix(u), fzero,
                                            [](const CharElement& e) { return CharFraction(e); });
  std::vector<CharFraction> e(static_cast<std::size_t>(n), fzero);
  CharElement half(Surface::annulus, n);
  half.add_term(CharKey{0, 0, 0}, CycloContext::get(n).rational(rat(1, 2)));
  e[0] = CharFraction(half);
  try {
    return mat_solve(lf, e, fzero);
  } catch (const singular_matrix_error&) {
    throw internal_check_error("left multiplication by a nonzero element is singular over the fraction field");
  }
}

}  // namespace skein
