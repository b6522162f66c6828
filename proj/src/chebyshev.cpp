#include "skein/chebyshev.hpp"

#include <deque>
#include <mutex>

#include "skein/errors.hpp"

namespace skein {

void IntPolynomial::add_term(long deg, const Rational& c) {
  auto it = coeffs.find(deg);
  if (it == coeffs.end()) {
    if (c != 0) coeffs.emplace(deg, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

Rational IntPolynomial::coeff(long deg) const {
  auto it = coeffs.find(deg);
  return it == coeffs.end() ? Rational(0) : it->second;
}

IntPolynomial poly_x() {
  IntPolynomial p;
  p.coeffs.emplace(1, Rational(1));
  return p;
}

IntPolynomial poly_const(const Rational& c) {
  IntPolynomial p;
  if (c != 0) p.coeffs.emplace(0, c);
  return p;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [d, c] : b.coeffs) r.add_term(d, c);
  return r;
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [d, c] : b.coeffs) r.add_term(d, -c);
  return r;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  for (const auto& [da, ca] : a.coeffs)
    for (const auto& [db, cb] : b.coeffs) r.add_term(da + db, ca * cb);
  return r;
}

IntPolynomial poly_scale(const IntPolynomial& a, const Rational& c) {
  IntPolynomial r;
  if (c == 0) return r;
  for (const auto& [d, cc] : a.coeffs) r.coeffs.emplace(d, cc * c);
  return r;
}

IntPolynomial poly_compose(const IntPolynomial& outer, const IntPolynomial& inner) {
  // Horner on the sparse degree list, highest degree first.
  IntPolynomial r;
  long prev_deg = -1;
  for (auto it = outer.coeffs.rbegin(); it != outer.coeffs.rend(); ++it) {
    if (prev_deg >= 0) {
      for (long i = 0; i < prev_deg - it->first; ++i) r = poly_mul(r, inner);
    }
    r.add_term(0, it->second);
    prev_deg = it->first;
  }
  if (prev_deg > 0)
    for (long i = 0; i < prev_deg; ++i) r = poly_mul(r, inner);
  return r;
}

const IntPolynomial& cheb_T(long k) {
  if (k < 0) throw domain_error("cheb_T: negative index");
  // deque: push_back never moves existing entries, so returned references
  // stay valid across later calls
  static std::mutex mu;
  static std::deque<IntPolynomial> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    table.push_back(poly_const(Rational(2)));
    table.push_back(poly_x());
  }
  while (static_cast<long>(table.size()) <= k) {
    long n = static_cast<long>(table.size());
    table.push_back(poly_sub(poly_mul(poly_x(), table[n - 1]), table[n - 2]));
  }
  return table[k];
}

std::map<long, Rational> to_cheb_basis(const IntPolynomial& p) {
  std::map<long, Rational> out;
  IntPolynomial rest = p;
  while (!rest.is_zero()) {
    long d = rest.degree();
    Rational lead = rest.coeffs.rbegin()->second;
    if (d == 0) {
      // constant c = (c/2) T_0
      out[0] = lead / 2;
      break;
    }
    // T_d is monic for d >= 1
    out[d] = lead;
    rest = poly_sub(rest, poly_scale(cheb_T(d), lead));
  }
  return out;
}

bool verify_cheb_identities(long m, long n) {
  const IntPolynomial& tm = cheb_T(m);
  const IntPolynomial& tn = cheb_T(n);
  if (!(poly_compose(tm, tn) == cheb_T(m * n))) return false;
  IntPolynomial sum = poly_add(cheb_T(m + n), cheb_T(m > n ? m - n : n - m));
  return poly_mul(tm, tn) == sum;
}

IntPolynomial x_power_relation(long N) {
  if (N < 1) throw domain_error("x_power_relation: N must be positive");
  IntPolynomial r = cheb_T(N);
  for (long i = 1; i <= N / 2; ++i) {
    Rational c = Rational(N) / Rational(N - i) * Rational(binomial(N - i, i));
    if (i % 2 == 0)
      r.add_term(N - 2 * i, -c);
    else
      r.add_term(N - 2 * i, c);
  }
  return r;
}

}  // namespace skein
