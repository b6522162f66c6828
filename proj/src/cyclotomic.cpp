#include "skein/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "skein/errors.hpp"

namespace skein {

namespace {

// Dense polynomials over Q, index = degree, trailing zeros trimmed.
using DPoly = std::vector<Rational>;

void dtrim(DPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DPoly dsub(DPoly a, const DPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  dtrim(a);
  return a;
}

DPoly dmul(const DPoly& a, const DPoly& b) {
  if (a.empty() || b.empty()) return {};
  DPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  dtrim(r);
  return r;
}

// Quotient and remainder against a nonzero divisor.
void ddivmod(DPoly num, const DPoly& den, DPoly& quot, DPoly& rem) {
  quot.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
  const Rational& lead = den.back();
  while (num.size() >= den.size() && !num.empty()) {
    Rational f = num.back() / lead;
    std::size_t shift = num.size() - den.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    dtrim(num);
  }
  dtrim(quot);
  rem = std::move(num);
}

DPoly to_dense(const IntPolynomial& p) {
  DPoly d;
  if (p.is_zero()) return d;
  d.assign(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  for (const auto& [deg, c] : p.coeffs) d[static_cast<std::size_t>(deg)] = c;
  return d;
}

IntPolynomial from_dense(const DPoly& d) {
  IntPolynomial p;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p.coeffs.emplace(static_cast<long>(i), d[i]);
  return p;
}

DPoly cyclotomic_dense(long n) {
  static std::mutex mu;
  static std::map<long, DPoly> memo;
  std::lock_guard<std::mutex> lock(mu);

  // Iterative over divisors so the recursion never re-enters the lock.
  std::vector<long> pending{n};
  while (!pending.empty()) {
    long m = pending.back();
    if (memo.count(m)) {
      pending.pop_back();
      continue;
    }
    bool ready = true;
    for (long d = 1; d < m; ++d) {
      if (m % d == 0 && !memo.count(d)) {
        pending.push_back(d);
        ready = false;
      }
    }
    if (!ready) continue;
    pending.pop_back();
    DPoly num(static_cast<std::size_t>(m) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;  // x^m - 1
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      DPoly q, r;
      ddivmod(num, memo.at(d), q, r);
      if (!r.empty())
        throw internal_check_error("cyclotomic division left a remainder");
      num = std::move(q);
    }
    memo.emplace(m, std::move(num));
  }
  return memo.at(n);
}

}  // namespace

IntPolynomial cyclotomic_polynomial(long n) {
  if (n < 1) throw domain_error("cyclotomic_polynomial: n must be positive");
  return from_dense(cyclotomic_dense(n));
}

// ---------------------------------------------------------------------------
// CycloContext

CycloContext::CycloContext(int N) : N_(N), order_(2 * N) {
  DPoly mod = cyclotomic_dense(order_);
  phi_ = static_cast<int>(mod.size()) - 1;
  phi_dense_ = mod;
  Phi_ = from_dense(mod);

  // x^k mod Phi for all k needed by multiplication (up to 2*phi-2) and by the
  // A-power table (up to 2N-1).
  long top = std::max<long>(2L * phi_ - 2, order_ - 1);
  std::vector<Rational> cur(static_cast<std::size_t>(phi_), Rational(0));
  cur[0] = 1;
  for (long k = 0; k <= top; ++k) {
    if (k < 2 * phi_ - 1) xpow_reduced_.push_back(cur);
    if (k < order_) a_pow_.push_back(cur);
    // multiply by x, reduce the single overflow term by the monic modulus
    Rational overflow = cur[static_cast<std::size_t>(phi_ - 1)];
    for (int i = phi_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (overflow != 0)
      for (int i = 0; i < phi_; ++i)
        cur[static_cast<std::size_t>(i)] -= overflow * phi_dense_[static_cast<std::size_t>(i)];
  }

  // A^N must reduce to -1; anything else means the modulus is wrong.
  const std::vector<Rational>& an = a_pow_[static_cast<std::size_t>(N_)];
  for (int i = 0; i < phi_; ++i) {
    Rational want = (i == 0) ? Rational(-1) : Rational(0);
    if (an[static_cast<std::size_t>(i)] != want)
      throw internal_check_error("A^N != -1 in Q[x]/Phi_2N");
  }
}

const CycloContext& CycloContext::get(int N) {
  if (N < 3 || N % 2 == 0)
    throw domain_error("level N must be odd and at least 3");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(N);
  if (it == registry.end())
    it = registry.emplace(N, std::unique_ptr<CycloContext>(new CycloContext(N))).first;
  return *it->second;
}

std::vector<Rational> CycloContext::reduce(std::vector<Rational> raw) const {
  if (static_cast<long>(raw.size()) <= 2 * phi_ - 1) {
    std::vector<Rational> out(static_cast<std::size_t>(phi_), Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == 0) continue;
      const std::vector<Rational>& row = xpow_reduced_[k];
      for (int i = 0; i < phi_; ++i) out[static_cast<std::size_t>(i)] += raw[k] * row[static_cast<std::size_t>(i)];
    }
    return out;
  }
  DPoly q, r;
  ddivmod(std::move(raw), phi_dense_, q, r);
  r.resize(static_cast<std::size_t>(phi_), Rational(0));
  return r;
}

std::vector<Rational> CycloContext::mul(const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) const {
  std::vector<Rational> raw(static_cast<std::size_t>(2 * phi_ - 1), Rational(0));
  for (int i = 0; i < phi_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < phi_; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0) continue;
      raw[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return reduce(std::move(raw));
}

std::vector<Rational> CycloContext::inv(const std::vector<Rational>& a) const {
  // Extended Euclid in Q[x]: maintain t with a * t = r (mod Phi).
  DPoly r0 = phi_dense_, r1 = a;
  dtrim(r1);
  if (r1.empty()) throw domain_error("division by zero scalar");
  DPoly t0, t1{Rational(1)};
  while (true) {
    DPoly q, r2;
    ddivmod(r0, r1, q, r2);
    DPoly t2 = dsub(t0, dmul(q, t1));
    if (r2.empty()) break;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r1 is the gcd; Phi_2N is irreducible so r1 is a nonzero constant.
  if (r1.size() != 1)
    throw internal_check_error("gcd with the cyclotomic modulus is not constant");
  Rational scale = Rational(1) / r1[0];
  std::vector<Rational> out(static_cast<std::size_t>(phi_), Rational(0));
  for (std::size_t i = 0; i < t1.size(); ++i) out[i] = t1[i] * scale;
  return reduce(std::move(out));
}

CycloScalar CycloContext::zero() const {
  CycloScalar s;
  s.ctx_ = this;
  s.c_.assign(static_cast<std::size_t>(phi_), Rational(0));
  return s;
}

CycloScalar CycloContext::one() const { return rational(Rational(1)); }

CycloScalar CycloContext::rational(const Rational& r) const {
  CycloScalar s = zero();
  s.c_[0] = r;
  return s;
}

// ---------------------------------------------------------------------------
// CycloScalar

CycloScalar CycloScalar::from_rational(const CycloContext& ctx, const Rational& r) {
  return ctx.rational(r);
}

CycloScalar CycloScalar::a_power(const CycloContext& ctx, long k) {
  long m = k % ctx.order_;
  if (m < 0) m += ctx.order_;
  CycloScalar s;
  s.ctx_ = &ctx;
  s.c_ = ctx.a_pow_[static_cast<std::size_t>(m)];
  return s;
}

bool CycloScalar::is_zero() const {
  if (!ctx_) return true;
  for (const Rational& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  if (!ctx_) return true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloScalar::rational_part() const {
  if (!is_rational()) throw domain_error("scalar is not rational");
  return ctx_ ? c_[0] : Rational(0);
}

static const CycloContext& common_ctx(const CycloScalar& a, const CycloScalar& b) {
  if (a.context() && b.context() && a.context() != b.context())
    throw domain_error("mixing scalars of different levels");
  return a.context() ? *a.context() : *b.context();
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
  if (!ctx_) return o;
  if (!o.ctx_) return *this;
  common_ctx(*this, o);
  CycloScalar r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const { return *this + (-o); }

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
  if (!ctx_ || !o.ctx_) return CycloScalar();
  const CycloContext& ctx = common_ctx(*this, o);
  CycloScalar r;
  r.ctx_ = &ctx;
  r.c_ = ctx.mul(c_, o.c_);
  return r;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
  if (!ctx_ || !o.ctx_) return is_zero() && o.is_zero();
  common_ctx(*this, o);
  return c_ == o.c_;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw domain_error("division by zero scalar");
  CycloScalar r;
  r.ctx_ = ctx_;
  r.c_ = ctx_->inv(c_);
  return r;
}

CycloScalar CycloScalar::pow(long e) const {
  if (!ctx_) {
    if (e <= 0) throw domain_error("zero to a non-positive power");
    return CycloScalar();
  }
  if (e < 0) return inverse().pow(-e);
  CycloScalar acc = ctx_->one();
  CycloScalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

CycloScalar CycloScalar::times_rational(const Rational& r) const {
  if (!ctx_ || r == 0) {
    if (!ctx_) return CycloScalar();
    return ctx_->zero();
  }
  CycloScalar out = *this;
  for (Rational& x : out.c_) x *= r;
  return out;
}

Rational CycloScalar::coefficient(long k) const {
  if (!ctx_) return Rational(0);
  if (k < 0 || k >= ctx_->degree()) throw domain_error("coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

}  // namespace skein
