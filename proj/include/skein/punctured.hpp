#ifndef SKEIN_PUNCTURED_HPP
#define SKEIN_PUNCTURED_HPP

#include <array>
#include <map>

#include "skein/charring.hpp"
#include "skein/torus.hpp"

namespace skein {

// Partial model of the skein algebra of the once-punctured torus.  Elements
// are combinations of delta^k (p,q)_T where delta is the boundary curve and
// (p,q)_T the torus curve skeins.  The full product of two arbitrary
// elements is not modeled; multiplication by central polynomials in delta,
// the trace, and the quotient onto the torus are.
class PuncturedSkein {
 public:
  // {k, p, q} stands for delta^k (p,q)_T, with (p,q) canonical as in the
  // torus; {k, 0, 0} is delta^k times the empty skein, so the all-zero key
  // is the unit.
  using Key = std::array<long, 3>;

  PuncturedSkein(int level_n);

  int level() const { return level_; }
  const CycloContext& context() const { return *ctx_; }
  const std::map<Key, CycloScalar>& terms() const { return terms_; }

  // Adds c * delta^k times the empty skein.
  void add_boundary(long k, const CycloScalar& c);
  // Adds c * delta^k (p,q)_T; canonicalizes and applies (0,0)_T = 2*unit.
  void add_curve(long k, long p, long q, const CycloScalar& c);
  bool is_zero() const { return terms_.empty(); }

  static PuncturedSkein unit(int level_n);
  static PuncturedSkein delta_power(int level_n, long k);
  static PuncturedSkein curve(int level_n, long p, long q);

  PuncturedSkein operator-() const;
  PuncturedSkein operator+(const PuncturedSkein& o) const;
  PuncturedSkein operator-(const PuncturedSkein& o) const;
  bool operator==(const PuncturedSkein& o) const;
  bool operator!=(const PuncturedSkein& o) const { return !(*this == o); }
  PuncturedSkein scaled(const CycloScalar& c) const;
  PuncturedSkein scaled(const Rational& c) const;

 private:
  int level_;
  const CycloContext* ctx_;
  std::map<Key, CycloScalar> terms_;

  void check_compatible(const PuncturedSkein& o) const;
};

// The boundary exponent can be read against delta powers or against powers
// of eta = delta + (A^2 + A^-2).  Internal storage is always delta powers;
// the eta reading is produced by conversion.
enum class BoundaryBasis { delta_power, eta_power };

// Rewrites the key map between the two readings: the input is read in the
// basis other than `target` and the result is written in `target`.  The two
// directions are mutually inverse.
PuncturedSkein eta_delta_convert(const PuncturedSkein& u, BoundaryBasis target);

// Multiplication by a central polynomial in the boundary curve.  The left
// factor must be supported on pure-boundary keys {k,0,0}; exponents add.
PuncturedSkein delta_poly_mul(const PuncturedSkein& f, const PuncturedSkein& u);

// T_a(delta) times the empty skein, expanded into delta powers.
PuncturedSkein cheb_delta(int level_n, long a);

// Deletion-rule trace: rewrite each delta power in the T_j(delta) basis and
// keep the terms where the level divides all of j, p, q.  The kept term
// T_{Nm}(delta)(Np,Nq)_T is the character key {m, p, q}, with T_0 = 2.
CharElement punctured_trace(const PuncturedSkein& u);

// Quotient by the ideal generated by eta: eta-power keys with k >= 1 die
// and (p,q)_T passes through; equivalently delta maps to -(A^2 + A^-2).
TorusSkein quotient_to_torus(const PuncturedSkein& u);

// Checks the two bounds on a candidate correction term for the product
// (p,q)_T (r,s)_T: every eta-power key of eps must have weight |p'|+|q'|
// at most |p|+|q|+|r|+|s| - 4 and eta degree at most
// floor(min(|p|+|r|, |q|+|s|) / 2).
bool epsilon_bound_predicate(const PuncturedSkein& eps, long p, long q, long r,
                             long s);

}  // namespace skein

#endif
