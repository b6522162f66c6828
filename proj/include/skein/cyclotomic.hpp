#ifndef SKEIN_CYCLOTOMIC_HPP
#define SKEIN_CYCLOTOMIC_HPP

#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/rational.hpp"

namespace skein {

// n-th cyclotomic polynomial, computed by dividing x^n - 1 by Phi_d over all
// proper divisors d of n. Coefficients are integers (stored as rationals).
IntPolynomial cyclotomic_polynomial(long n);

class CycloContext;

// Element of Q(zeta_2N) = Q[x] / Phi_2N(x), where x stands for
// A = exp(i*pi/N) and N >= 3 is odd. Stored as the coefficient vector of the
// reduced representative, so equality is componentwise.
//
// A default-constructed scalar is the detached zero: it carries no level and
// combines with scalars of any level. Every nonzero scalar is attached.
class CycloScalar {
 public:
  CycloScalar() : ctx_(nullptr) {}

  static CycloScalar from_rational(const CycloContext& ctx, const Rational& r);
  static CycloScalar a_power(const CycloContext& ctx, long k);  // A^k

  bool is_zero() const;
  bool is_rational() const;       // lies in Q (only coefficient 0 may be nonzero)
  Rational rational_part() const; // requires is_rational()

  CycloScalar operator-() const;
  CycloScalar operator+(const CycloScalar& o) const;
  CycloScalar operator-(const CycloScalar& o) const;
  CycloScalar operator*(const CycloScalar& o) const;
  CycloScalar operator/(const CycloScalar& o) const { return *this * o.inverse(); }
  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
  CycloScalar& operator/=(const CycloScalar& o) { return *this = *this / o; }
  bool operator==(const CycloScalar& o) const;
  bool operator!=(const CycloScalar& o) const { return !(*this == o); }

  CycloScalar inverse() const;  // throws domain_error on zero
  CycloScalar pow(long e) const;
  CycloScalar times_rational(const Rational& r) const;

  // Coefficient of x^k in the reduced representative, k in [0, phi(2N)).
  Rational coefficient(long k) const;

  const CycloContext* context() const { return ctx_; }
  const std::vector<Rational>& coefficients() const { return c_; }

 private:
  friend class CycloContext;
  const CycloContext* ctx_;  // null only for the detached zero
  std::vector<Rational> c_;  // size phi(2N) when attached
};

// Per-level immutable arithmetic data, created once per N and never freed.
class CycloContext {
 public:
  // Race-free registry lookup; N must be odd and >= 3.
  static const CycloContext& get(int N);

  int level() const { return N_; }
  int order() const { return order_; }      // 2N
  int degree() const { return phi_; }       // phi(2N)
  const IntPolynomial& modulus() const { return Phi_; }

  CycloScalar zero() const;
  CycloScalar one() const;
  CycloScalar rational(const Rational& r) const;
  CycloScalar a(long k = 1) const { return CycloScalar::a_power(*this, k); }

 private:
  friend class CycloScalar;
  explicit CycloContext(int N);

  int N_, order_, phi_;
  IntPolynomial Phi_;
  std::vector<Rational> phi_dense_;                 // modulus, monic, size phi+1
  std::vector<std::vector<Rational>> xpow_reduced_; // x^k mod Phi, k in [0, 2*phi-1)
  std::vector<std::vector<Rational>> a_pow_;        // A^k, k in [0, 2N)

  std::vector<Rational> reduce(std::vector<Rational> raw) const;
  std::vector<Rational> mul(const std::vector<Rational>& a,
                            const std::vector<Rational>& b) const;
  std::vector<Rational> inv(const std::vector<Rational>& a) const;
};

}  // namespace skein

#endif
