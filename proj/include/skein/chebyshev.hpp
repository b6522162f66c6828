#ifndef SKEIN_CHEBYSHEV_HPP
#define SKEIN_CHEBYSHEV_HPP

#include <map>

#include "skein/rational.hpp"

namespace skein {

// Sparse univariate polynomial with rational coefficients.
// Zero coefficients are never stored, so equality is map equality.
struct IntPolynomial {
  std::map<long, Rational> coeffs;  // degree -> coefficient

  bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }

  void add_term(long deg, const Rational& c);
  Rational coeff(long deg) const;
};

IntPolynomial poly_x();                           // x
IntPolynomial poly_const(const Rational& c);      // c
IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_scale(const IntPolynomial& a, const Rational& c);
IntPolynomial poly_compose(const IntPolynomial& outer, const IntPolynomial& inner);

// First-kind normalization used throughout: T_0 = 2, T_1 = x,
// T_{k+1} = x T_k - T_{k-1}.
const IntPolynomial& cheb_T(long k);

// Expansion of a polynomial in the T_k basis. The constant term lands on
// index 0 with the T_0 = 2 convention (so to_cheb_basis(1) = {0: 1/2}).
std::map<long, Rational> to_cheb_basis(const IntPolynomial& p);

// Check T_m(T_n) = T_{mn} and T_m T_n = T_{m+n} + T_{|m-n|} for one (m, n).
bool verify_cheb_identities(long m, long n);

// The polynomial T_N(x) - sum_{i=1}^{floor(N/2)} (-1)^i (N/(N-i)) C(N-i,i) x^{N-2i},
// which collapses to the monomial x^N. Callers use it to rewrite x^N against
// the Chebyshev generator T_N.
IntPolynomial x_power_relation(long N);

// Value recurrence for T_k at a point of any ring with 2 and the given ops.
template <class T>
T cheb_eval(long k, const T& x, const T& two) {
  if (k == 0) return two;
  T prev = two;  // T_0
  T cur = x;     // T_1
  for (long i = 1; i < k; ++i) {
    T next = cur * x - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace skein

#endif
