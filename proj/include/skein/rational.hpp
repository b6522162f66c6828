#ifndef SKEIN_RATIONAL_HPP
#define SKEIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace skein {

// Exact rational scalar. mpq_class keeps values canonicalized (reduced,
// positive denominator), so operator== is structural equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace skein

#endif
