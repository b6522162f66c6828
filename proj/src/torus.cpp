#include "skein/torus.hpp"

#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "skein/errors.hpp"

namespace skein {

namespace {

using Key = TorusSkein::Key;

Key canon(int p, int q) {
  if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
  return {p, q};
}

Rational sign_pow(long e) { return (e % 2 != 0) ? rat(-1) : rat(1); }

}  // namespace

TorusSkein::TorusSkein(int level_n) : level_(level_n), ctx_(&CycloContext::get(level_n)) {}

void TorusSkein::add_unit(const CycloScalar& c) {
  auto it = terms_.find(Key{0, 0});
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TorusSkein::add_unit(const Rational& c) { add_unit(ctx_->rational(c)); }

void TorusSkein::add_curve(int p, int q, const CycloScalar& c) {
  Key k = canon(p, q);
  if (k == Key{0, 0}) {
    add_unit(c.times_rational(rat(2)));
    return;
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TorusSkein TorusSkein::unit(int level_n) {
  TorusSkein u(level_n);
  u.add_unit(CycloContext::get(level_n).rational(rat(1)));
  return u;
}

TorusSkein TorusSkein::curve(int level_n, int p, int q) {
  TorusSkein u(level_n);
  u.add_curve(p, q, CycloContext::get(level_n).rational(rat(1)));
  return u;
}

TorusSkein TorusSkein::operator+(const TorusSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in torus arithmetic");
  TorusSkein r = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

TorusSkein TorusSkein::operator-(const TorusSkein& o) const { return *this + o.scaled(rat(-1)); }

TorusSkein TorusSkein::operator*(const TorusSkein& o) const {
  if (level_ != o.level_) throw domain_error("mixed levels in torus arithmetic");
  TorusSkein r(level_);
  const Key unit_key{0, 0};
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      CycloScalar c = ca * cb;
      if (a == unit_key) {
        if (b == unit_key)
          r.add_unit(c);
        else
          r.add_curve(b.first, b.second, c);
        continue;
      }
      if (b == unit_key) {
        r.add_curve(a.first, a.second, c);
        continue;
      }
      const long det = static_cast<long>(a.first) * b.second - static_cast<long>(a.second) * b.first;
      r.add_curve(a.first + b.first, a.second + b.second, c * ctx_->a(det));
      r.add_curve(a.first - b.first, a.second - b.second, c * ctx_->a(-det));
    }
  return r;
}

bool TorusSkein::operator==(const TorusSkein& o) const {
  return level_ == o.level_ && terms_ == o.terms_;
}

TorusSkein TorusSkein::scaled(const CycloScalar& c) const {
  TorusSkein r(level_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) {
    CycloScalar w = v * c;
    if (!w.is_zero()) r.terms_.emplace(k, w);
  }
  return r;
}

TorusSkein TorusSkein::scaled(const Rational& c) const { return scaled(ctx_->rational(c)); }

TorusSkein torus_thread(const CharElement& u) {
  if (u.surface() != Surface::torus) throw domain_error("torus_thread expects a torus character element");
  const int n = static_cast<int>(u.level());
  TorusSkein r(n);
  for (const auto& [k, c] : u.terms()) {
    if (k == CharKey{})
      r.add_unit(c);
    else
      r.add_curve(n * k.v[0], n * k.v[1], c);
  }
  return r;
}

bool centrality_check(const TorusSkein& c, const TorusSkein& v) { return c * v == v * c; }

std::vector<Key> torus_b_keys(int level_n) {
  std::set<Key> s;
  for (int q = 0; q < level_n; ++q) s.insert(Key{0, q});
  for (int p = 1; p < level_n; ++p)
    for (int q = -(level_n - 1) / 2; q <= level_n - 1; ++q) s.insert(Key{p, q});
  for (int q = 1; q <= (level_n - 1) / 2; ++q) s.insert(Key{level_n, q});
  for (int p = 1; p <= (level_n - 1) / 2; ++p) s.insert(Key{p, level_n});
  return std::vector<Key>(s.begin(), s.end());
}

std::vector<Key> torus_bprime_keys(int level_n) {
  std::vector<Key> keys;
  keys.reserve(static_cast<std::size_t>(level_n) * level_n);
  for (int p = 0; p < level_n; ++p)
    for (int q = 0; q < level_n; ++q) keys.push_back(Key{p, q});
  return keys;
}

bool torus_key_in_b(int level_n, int p, int q) {
  if (p == 0) return q >= 0 && q <= level_n - 1;
  if (p >= 1 && p <= level_n - 1) {
    if (q >= -(level_n - 1) / 2 && q <= level_n - 1) return true;
    return q == level_n && p <= (level_n - 1) / 2;
  }
  if (p == level_n) return q >= 1 && q <= (level_n - 1) / 2;
  return false;
}

std::array<CharElement, 3> torus_central_divisors(int level_n) {
  const Surface s = Surface::torus;
  CharElement c1 = CharElement::key_term(s, level_n, char_key_torus(2, 1)) -
                   CharElement::key_term(s, level_n, char_key_torus(0, 1));
  CharElement c2 = CharElement::key_term(s, level_n, char_key_torus(1, 0)) -
                   CharElement::key_term(s, level_n, char_key_torus(1, 2));
  CharElement c3 = CharElement::unit(s, level_n).scaled(rat(2)) -
                   CharElement::key_term(s, level_n, char_key_torus(2, 2));
  return {c1, c2, c3};
}

namespace {

using BComb = std::map<Key, CharElement>;

enum class Fam : int {
  step1_p,
  step1_q_pos,
  step1_q_neg,
  step2_first,
  step2_row_n,
  step2_half_a_negb,
  step2_half_aN,
  step2_half_Nb,
  quad,
  elim_negb,
  elim_aN,
  elim_Nb,
};

const char* fam_name(Fam f) {
  switch (f) {
    case Fam::step1_p: return "step1-first-entry";
    case Fam::step1_q_pos: return "step1-second-entry-positive";
    case Fam::step1_q_neg: return "step1-second-entry-negative";
    case Fam::step2_first: return "step2-(k,-N)";
    case Fam::step2_row_n: return "step2-(N,-k)";
    case Fam::step2_half_a_negb: return "step2-half-(a,-b)";
    case Fam::step2_half_aN: return "step2-half-(a,N)";
    case Fam::step2_half_Nb: return "step2-half-(N,b)";
    case Fam::quad: return "central-relation";
    case Fam::elim_negb: return "basis-elimination-(a,-b)";
    case Fam::elim_aN: return "basis-elimination-(a,N)";
    case Fam::elim_Nb: return "basis-elimination-(N,b)";
  }
  return "?";
}

struct RewriteTerm {
  CharElement coef;
  Key child;
};

struct Rewrite {
  Fam fam;
  Key lhs;
  std::vector<RewriteTerm> terms;
};

struct ElimEntry {
  int divisor;  // index into torus_central_divisors
  std::vector<RewriteTerm> terms;
};

struct Level {
  int n;
  const CycloContext* ctx;
  std::array<CharElement, 3> cdiv;
  std::array<TorusSkein, 3> cdiv_raw;
  std::recursive_mutex mu;
  std::set<std::tuple<int, int, int>> verified;
  std::map<Key, BComb> memo;
  std::map<Key, ElimEntry> elims;
  bool elims_built = false;

  Level(int level_n)
      : n(level_n),
        ctx(&CycloContext::get(level_n)),
        cdiv(torus_central_divisors(level_n)),
        cdiv_raw{torus_thread(cdiv[0]), torus_thread(cdiv[1]), torus_thread(cdiv[2])} {}
};

Level& level_for(int n) {
  static std::mutex reg_mu;
  static std::map<int, std::unique_ptr<Level>> registry;
  std::lock_guard<std::mutex> lock(reg_mu);
  auto it = registry.find(n);
  if (it == registry.end()) it = registry.emplace(n, std::make_unique<Level>(n)).first;
  return *it->second;
}

CharElement chi(const Level& L, int p, int q, const Rational& c) {
  CharElement e(Surface::torus, L.n);
  e.add_term(char_key_torus(p, q), L.ctx->rational(c));
  return e;
}

// Expands a coefficient/key list through the raw product.
TorusSkein raw_expansion(const Level& L, const std::vector<RewriteTerm>& terms) {
  TorusSkein r(L.n);
  for (const RewriteTerm& t : terms)
    r = r + torus_thread(t.coef) * TorusSkein::curve(L.n, t.child.first, t.child.second);
  return r;
}

// Checks lhs_factor * (lhs)_T == sum of thread(coef)*(child)_T, exactly.
void verify_rewrite(Level& L, Fam fam, const TorusSkein& lhs_factor, const Key& lhs,
                    const std::vector<RewriteTerm>& terms) {
  auto tag = std::make_tuple(static_cast<int>(fam), lhs.first, lhs.second);
  if (L.verified.count(tag)) return;
  TorusSkein left = lhs_factor * TorusSkein::curve(L.n, lhs.first, lhs.second);
  if (!(left == raw_expansion(L, terms)))
    throw internal_check_error(std::string("torus rewriting identity ") + fam_name(fam) +
                               " failed at (" + std::to_string(lhs.first) + "," +
                               std::to_string(lhs.second) + "), level " + std::to_string(L.n));
  L.verified.insert(tag);
}

// Single-step rewriting of a canonical key that is neither central nor in B.
Rewrite make_case(const Level& L, int p, int q) {
  const int n = L.n;
  Rewrite rw;
  rw.lhs = Key{p, q};
  if (p >= n + 1) {
    rw.fam = Fam::step1_p;
    rw.terms.push_back({chi(L, 1, 0, sign_pow(q)), Key{p - n, q}});
    rw.terms.push_back({CharElement::unit(Surface::torus, n).scaled(rat(-1)), canon(2 * n - p, -q)});
  } else if (q >= n + 1) {
    rw.fam = Fam::step1_q_pos;
    rw.terms.push_back({chi(L, 0, 1, sign_pow(p)), Key{p, q - n}});
    rw.terms.push_back({CharElement::unit(Surface::torus, n).scaled(rat(-1)), canon(p, q - 2 * n)});
  } else if (q <= -(n + 1)) {
    rw.fam = Fam::step1_q_neg;
    rw.terms.push_back({chi(L, 0, 1, sign_pow(p)), Key{p, q + n}});
    rw.terms.push_back({CharElement::unit(Surface::torus, n).scaled(rat(-1)), canon(p, q + 2 * n)});
  } else if (q == -n && p >= 1 && p <= n - 1) {
    rw.fam = Fam::step2_first;
    rw.terms.push_back({chi(L, 0, 1, sign_pow(p)), Key{p, 0}});
    rw.terms.push_back({CharElement::unit(Surface::torus, n).scaled(rat(-1)), Key{p, n}});
  } else if (p == n && q < 0) {
    rw.fam = Fam::step2_row_n;
    const int k = -q;
    rw.terms.push_back({chi(L, 1, 0, sign_pow(k)), Key{0, k}});
    rw.terms.push_back({CharElement::unit(Surface::torus, n).scaled(rat(-1)), Key{n, k}});
  } else if (p >= 1 && p <= n - 1 && q < 0) {
    rw.fam = Fam::step2_half_a_negb;
    const int a = p, b = -q;
    rw.terms.push_back({chi(L, 1, 1, sign_pow(a + b + 1) / 2), Key{n - a, b - n}});
    rw.terms.push_back({chi(L, 0, 1, sign_pow(a) / 2), Key{a, n - b}});
    rw.terms.push_back({chi(L, 1, 0, sign_pow(b) / 2), Key{n - a, b}});
  } else if (q == n && p >= 1 && p <= n - 1) {
    rw.fam = Fam::step2_half_aN;
    const int a = p;
    rw.terms.push_back({chi(L, 1, 1, sign_pow(a + 1) / 2), Key{n - a, 0}});
    rw.terms.push_back({chi(L, 0, 1, sign_pow(a) / 2), Key{a, 0}});
    rw.terms.push_back({chi(L, 1, 0, rat(1, 2)), Key{n - a, n}});
  } else if (p == n && q >= 1 && q <= n - 1) {
    rw.fam = Fam::step2_half_Nb;
    const int b = q;
    rw.terms.push_back({chi(L, 1, 1, sign_pow(b + 1) / 2), Key{0, n - b}});
    rw.terms.push_back({chi(L, 0, 1, rat(1, 2)), Key{n, n - b}});
    rw.terms.push_back({chi(L, 1, 0, sign_pow(b) / 2), Key{0, b}});
  } else {
    throw internal_check_error("no rewriting case applies to (" + std::to_string(p) + "," +
                               std::to_string(q) + "), level " + std::to_string(L.n));
  }
  return rw;
}

void bcomb_add(BComb& dst, const Key& k, const CharElement& v) {
  if (v.is_zero()) return;
  auto it = dst.find(k);
  if (it == dst.end()) {
    dst.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) dst.erase(it);
}

const BComb& reduce_key(Level& L, int p, int q) {
  const Key key{p, q};
  auto it = L.memo.find(key);
  if (it != L.memo.end()) return it->second;
  BComb comb;
  if (p % L.n == 0 && q % L.n == 0) {
    bcomb_add(comb, Key{0, 0}, chi(L, p / L.n, q / L.n, rat(1, 2)));
  } else if (torus_key_in_b(L.n, p, q)) {
    bcomb_add(comb, key, CharElement::unit(Surface::torus, L.n));
  } else {
    Rewrite rw = make_case(L, p, q);
    verify_rewrite(L, rw.fam, TorusSkein::unit(L.n), rw.lhs, rw.terms);
    for (const RewriteTerm& t : rw.terms) {
      const BComb& sub = reduce_key(L, t.child.first, t.child.second);
      for (const auto& [k, v] : sub) bcomb_add(comb, k, v * t.coef);
    }
  }
  return L.memo.emplace(key, std::move(comb)).first->second;
}

void build_elims(Level& L) {
  if (L.elims_built) return;
  const int n = L.n;
  for (int a = 1; a <= n - 1; ++a)
    for (int b = -(n - 1) / 2; b <= -1; ++b) {
      ElimEntry e;
      e.divisor = 2;
      e.terms.push_back({L.cdiv[0].scaled(sign_pow(a + 1)), Key{a, b + n}});
      e.terms.push_back({L.cdiv[1].scaled(sign_pow(b)), Key{n - a, -b}});
      verify_rewrite(L, Fam::elim_negb, L.cdiv_raw[2], Key{a, b}, e.terms);
      L.elims.emplace(Key{a, b}, std::move(e));
    }
  for (int a = 1; a <= (n - 1) / 2; ++a) {
    ElimEntry e;
    e.divisor = 0;
    e.terms.push_back({L.cdiv[1].scaled(sign_pow(a)), Key{n - a, 0}});
    e.terms.push_back({L.cdiv[2].scaled(sign_pow(a + 1)), Key{a, 0}});
    verify_rewrite(L, Fam::elim_aN, L.cdiv_raw[0], Key{a, n}, e.terms);
    L.elims.emplace(Key{a, n}, std::move(e));
  }
  for (int b = 1; b <= (n - 1) / 2; ++b) {
    ElimEntry e;
    e.divisor = 1;
    e.terms.push_back({L.cdiv[0].scaled(sign_pow(b)), Key{0, n - b}});
    e.terms.push_back({L.cdiv[2].scaled(sign_pow(b)), Key{0, b}});
    verify_rewrite(L, Fam::elim_Nb, L.cdiv_raw[1], Key{n, b}, e.terms);
    L.elims.emplace(Key{n, b}, std::move(e));
  }
  L.elims_built = true;
}

bool key_in_bprime(int n, const Key& k) {
  return k.first >= 0 && k.first < n && k.second >= 0 && k.second < n;
}

// Coordinates split by structural denominator: [plain, /C1, /C2, /C3].
using Tagged = std::map<Key, std::array<CharElement, 4>>;

Tagged tagged_reduce(Level& L, const TorusSkein& u) {
  std::lock_guard<std::recursive_mutex> lock(L.mu);
  build_elims(L);
  const CharElement zero(Surface::torus, L.n);
  Tagged out;
  auto slot = [&](const Key& k) -> std::array<CharElement, 4>& {
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, std::array<CharElement, 4>{zero, zero, zero, zero}).first;
    return it->second;
  };
  auto add_b_coeff = [&](const Key& k, const CharElement& v) {
    if (key_in_bprime(L.n, k)) {
      slot(k)[0] += v;
      return;
    }
    const ElimEntry& e = L.elims.at(k);
    for (const RewriteTerm& t : e.terms) slot(t.child)[1 + e.divisor] += v * t.coef;
  };
  for (const auto& [k, c] : u.terms()) {
    if (k == Key{0, 0}) {
      add_b_coeff(Key{0, 0}, CharElement::unit(Surface::torus, L.n).scaled(c.times_rational(rat(1, 2))));
      continue;
    }
    const BComb& comb = reduce_key(L, k.first, k.second);
    for (const auto& [bk, v] : comb) add_b_coeff(bk, v.scaled(c));
  }
  return out;
}

}  // namespace

std::map<Key, CharElement> torus_reduce_to_B(const TorusSkein& u) {
  Level& L = level_for(u.level());
  std::lock_guard<std::recursive_mutex> lock(L.mu);
  BComb out;
  for (const auto& [k, c] : u.terms()) {
    if (k == Key{0, 0}) {
      bcomb_add(out, Key{0, 0}, CharElement::unit(Surface::torus, L.n).scaled(c.times_rational(rat(1, 2))));
      continue;
    }
    const BComb& comb = reduce_key(L, k.first, k.second);
    for (const auto& [bk, v] : comb) bcomb_add(out, bk, v.scaled(c));
  }
  return out;
}

TorusReduced torus_reduce_to_Bprime(const TorusSkein& u) {
  Level& L = level_for(u.level());
  Tagged tags = tagged_reduce(L, u);
  TorusReduced red;
  red.level = L.n;
  const CharElement unit_el = CharElement::unit(Surface::torus, L.n);
  for (const Key& k : torus_bprime_keys(L.n)) {
    auto it = tags.find(k);
    if (it == tags.end()) {
      red.slots.emplace(k, CharFraction::zero(Surface::torus, L.n));
      continue;
    }
    const auto& t = it->second;
    CharElement den = unit_el;
    for (int i = 0; i < 3; ++i)
      if (!t[1 + i].is_zero()) den = den * L.cdiv[i];
    CharElement num = t[0] * den;
    for (int i = 0; i < 3; ++i) {
      if (t[1 + i].is_zero()) continue;
      CharElement comp = unit_el;
      for (int j = 0; j < 3; ++j)
        if (j != i && !t[1 + j].is_zero()) comp = comp * L.cdiv[j];
      num += t[1 + i] * comp;
    }
    red.slots.emplace(k, CharFraction(num, den));
  }
  return red;
}

TorusSkein torus_expand(const std::map<Key, CharElement>& comb, int level_n) {
  TorusSkein r(level_n);
  for (const auto& [k, v] : comb)
    r = r + torus_thread(v) * TorusSkein::curve(level_n, k.first, k.second);
  return r;
}

bool torus_roundtrip_check(const TorusSkein& u) {
  Level& L = level_for(u.level());
  Tagged tags = tagged_reduce(L, u);
  TorusSkein lhs = torus_thread(L.cdiv[0] * L.cdiv[1] * L.cdiv[2]) * u;
  TorusSkein rhs(L.n);
  for (const auto& [k, t] : tags) {
    CharElement coef = t[0] * L.cdiv[0] * L.cdiv[1] * L.cdiv[2];
    coef += t[1] * L.cdiv[1] * L.cdiv[2];
    coef += t[2] * L.cdiv[0] * L.cdiv[2];
    coef += t[3] * L.cdiv[0] * L.cdiv[1];
    rhs = rhs + torus_thread(coef) * TorusSkein::curve(L.n, k.first, k.second);
  }
  return lhs == rhs;
}

TorusSkein torus_expand_cleared(const TorusReduced& red, CharElement& den_out) {
  const int n = red.level;
  std::vector<CharElement> dens;
  for (const auto& [k, f] : red.slots) {
    if (f.is_zero()) continue;
    bool seen = false;
    for (const CharElement& d : dens)
      if (d == f.den()) {
        seen = true;
        break;
      }
    if (!seen) dens.push_back(f.den());
  }
  CharElement total = CharElement::unit(Surface::torus, n);
  for (const CharElement& d : dens) total = total * d;
  TorusSkein r(n);
  for (const auto& [k, f] : red.slots) {
    if (f.is_zero()) continue;
    CharElement comp = CharElement::unit(Surface::torus, n);
    for (const CharElement& d : dens)
      if (!(d == f.den())) comp = comp * d;
    r = r + torus_thread(f.num() * comp) * TorusSkein::curve(n, k.first, k.second);
  }
  den_out = total;
  return r;
}

RingMatrix<CharFraction> torus_left_matrix(const TorusSkein& u) {
  const int n = u.level();
  const auto keys = torus_bprime_keys(n);
  const std::size_t dim = keys.size();
  RingMatrix<CharFraction> m(dim, dim, CharFraction::zero(Surface::torus, n));
  for (std::size_t j = 0; j < dim; ++j) {
    TorusReduced col = torus_reduce_to_Bprime(u * TorusSkein::curve(n, keys[j].first, keys[j].second));
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col.slots.at(keys[i]);
  }
  return m;
}

CharElement torus_trace_raw(const TorusSkein& u) {
  const int n = u.level();
  CharElement r(Surface::torus, n);
  for (const auto& [k, c] : u.terms()) {
    if (k == Key{0, 0}) {
      r.add_term(CharKey{}, c);
      continue;
    }
    if (k.first % n != 0 || k.second % n != 0) continue;
    r.add_term(char_key_torus(k.first / n, k.second / n), c);
  }
  return r;
}

CharFraction torus_trace(const TorusSkein& u) { return CharFraction(torus_trace_raw(u)); }

CharFraction torus_trace(const TorusReduced& u) {
  const CharFraction f = u.slots.at(Key{0, 0});
  return f + f;
}

RingMatrix<CharElement> torus_pairing_matrix(int level_n) {
  const auto keys = torus_bprime_keys(level_n);
  const std::size_t dim = keys.size();
  std::vector<TorusSkein> basis;
  basis.reserve(dim);
  for (const Key& k : keys) basis.push_back(TorusSkein::curve(level_n, k.first, k.second));
  RingMatrix<CharElement> m(dim, dim, CharElement(Surface::torus, level_n));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      CharElement t = torus_trace_raw(basis[i] * basis[j]);
      m.at(i, j) = t;
      if (i != j) m.at(j, i) = torus_trace_raw(basis[j] * basis[i]);
    }
  return m;
}

CharElement torus_char_det(const RingMatrix<CharElement>& m, int level_n) {
  const CharFraction fzero = CharFraction::zero(Surface::torus, level_n);
  const CharFraction fone = CharFraction::one(Surface::torus, level_n);
  RingMatrix<CharFraction> mf =
      mat_convert(m, fzero, [](const CharElement& e) { return CharFraction(e); });
  CharFraction d = det_field(mf, fzero, fone, [](const CharFraction& f) { return f.den_is_unit(); });
  if (d.is_zero()) return CharElement(Surface::torus, level_n);
  LaurentElement num = laurent_embed(d.num());
  LaurentElement den = laurent_embed(d.den());
  LaurentElement quot(CycloContext::get(level_n));
  if (!laurent_divide(num, den, quot))
    throw internal_check_error("determinant certification failed: denominator does not divide numerator exactly");
  return laurent_unembed_torus(quot, level_n);
}

CharElement torus_pairing_det(int level_n) {
  return torus_char_det(torus_pairing_matrix(level_n), level_n);
}

TorusReduced basis_C_expand(int level_n, int p, int q) {
  if (p < 0 || p >= level_n || q < 0 || q >= level_n)
    throw domain_error("basis C indices must lie in 0..N-1");
  return torus_reduce_to_Bprime(TorusSkein::curve(level_n, p, 0) * TorusSkein::curve(level_n, 0, q));
}

RingMatrix<CharFraction> basis_C_matrix(int level_n) {
  const auto keys = torus_bprime_keys(level_n);
  const std::size_t dim = keys.size();
  RingMatrix<CharFraction> m(dim, dim, CharFraction::zero(Surface::torus, level_n));
  for (std::size_t j = 0; j < dim; ++j) {
    TorusReduced col = basis_C_expand(level_n, keys[j].first, keys[j].second);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col.slots.at(keys[i]);
  }
  return m;
}

TorusReduced torus_invert(const TorusSkein& u) {
  const int n = u.level();
  if (u.is_zero()) throw domain_error("cannot invert zero");
  RingMatrix<CharFraction> lm = torus_left_matrix(u);
  const CharFraction fzero = CharFraction::zero(Surface::torus, n);
  const auto keys = torus_bprime_keys(n);
  std::vector<CharFraction> e(keys.size(), fzero);
  CharElement half = CharElement::unit(Surface::torus, n).scaled(rat(1, 2));
  e[0] = CharFraction(half);  // unit = (1/2)*(0,0)_T and (0,0) is the first key
  std::vector<CharFraction> x;
  try {
    x = mat_solve(lm, e, fzero);
  } catch (const singular_matrix_error&) {
    throw domain_error("not a unit at the generic fiber");
  }
  TorusReduced red;
  red.level = n;
  for (std::size_t i = 0; i < keys.size(); ++i) red.slots.emplace(keys[i], x[i]);
  return red;
}

namespace {

bool quad_holds(Level& L, int p, int q) {
  const int n = L.n;
  TorusSkein t = (L.cdiv_raw[0] * TorusSkein::curve(n, p, q)).scaled(sign_pow(p)) +
                 (L.cdiv_raw[1] * TorusSkein::curve(n, n - p, n - q)).scaled(sign_pow(q)) +
                 L.cdiv_raw[2] * TorusSkein::curve(n, p, q - n);
  return t.is_zero();
}

}  // namespace

std::vector<IdentityReport> torus_verify_identities(int level_n) {
  Level& L = level_for(level_n);
  std::lock_guard<std::recursive_mutex> lock(L.mu);
  const int n = level_n;
  std::vector<IdentityReport> reports;

  auto run_family = [&](const std::string& name, auto body) {
    IdentityReport rep{name, 0, true, ""};
    try {
      body(rep);
    } catch (const internal_check_error& e) {
      rep.ok = false;
      rep.detail = e.what();
    }
    reports.push_back(std::move(rep));
  };

  run_family("central-divisors-nonzero", [&](IdentityReport& rep) {
    for (int i = 0; i < 3; ++i) {
      ++rep.instances;
      LaurentElement em = laurent_embed(L.cdiv[i]);
      bool zero = true;
      for (const auto& [k, c] : em.terms())
        if (!c.is_zero()) zero = false;
      if (zero)
        throw internal_check_error("central divisor " + std::to_string(i + 1) +
                                   " embeds to zero, level " + std::to_string(n));
    }
  });

  run_family(fam_name(Fam::quad), [&](IdentityReport& rep) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        ++rep.instances;
        if (!quad_holds(L, p, q))
          throw internal_check_error("central relation fails at (" + std::to_string(p) + "," +
                                     std::to_string(q) + "), level " + std::to_string(n));
      }
  });

  auto sweep_case = [&](Fam fam, IdentityReport& rep, int p, int q) {
    Rewrite rw = make_case(L, p, q);
    if (rw.fam != fam)
      throw internal_check_error(std::string("case dispatch mismatch for ") + fam_name(fam));
    verify_rewrite(L, rw.fam, TorusSkein::unit(n), rw.lhs, rw.terms);
    ++rep.instances;
  };

  run_family(fam_name(Fam::step1_p), [&](IdentityReport& rep) {
    for (int p = n + 1; p <= 3 * n; ++p)
      for (int q = -3 * n; q <= 3 * n; ++q) sweep_case(Fam::step1_p, rep, p, q);
  });
  run_family(fam_name(Fam::step1_q_pos), [&](IdentityReport& rep) {
    for (int p = 0; p <= n; ++p)
      for (int q = n + 1; q <= 3 * n; ++q) sweep_case(Fam::step1_q_pos, rep, p, q);
  });
  run_family(fam_name(Fam::step1_q_neg), [&](IdentityReport& rep) {
    for (int p = 1; p <= n; ++p)
      for (int q = -3 * n; q <= -(n + 1); ++q) sweep_case(Fam::step1_q_neg, rep, p, q);
  });
  run_family(fam_name(Fam::step2_first), [&](IdentityReport& rep) {
    for (int k = 1; k <= n - 1; ++k) sweep_case(Fam::step2_first, rep, k, -n);
  });
  run_family(fam_name(Fam::step2_row_n), [&](IdentityReport& rep) {
    for (int k = 1; k <= n - 1; ++k) sweep_case(Fam::step2_row_n, rep, n, -k);
  });
  run_family(fam_name(Fam::step2_half_a_negb), [&](IdentityReport& rep) {
    for (int a = 1; a <= n - 1; ++a)
      for (int b = (n + 1) / 2; b <= n - 1; ++b) sweep_case(Fam::step2_half_a_negb, rep, a, -b);
  });
  run_family(fam_name(Fam::step2_half_aN), [&](IdentityReport& rep) {
    for (int a = (n + 1) / 2; a <= n - 1; ++a) sweep_case(Fam::step2_half_aN, rep, a, n);
  });
  run_family(fam_name(Fam::step2_half_Nb), [&](IdentityReport& rep) {
    for (int b = (n + 1) / 2; b <= n - 1; ++b) sweep_case(Fam::step2_half_Nb, rep, n, b);
  });

  run_family("basis-eliminations", [&](IdentityReport& rep) {
    build_elims(L);
    rep.instances = static_cast<long>(L.elims.size());
  });

  return reports;
}

}  // namespace skein
