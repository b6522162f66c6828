#ifndef SKEIN_ANNULUS_HPP
#define SKEIN_ANNULUS_HPP

#include <map>
#include <vector>

#include "skein/charring.hpp"
#include "skein/linalg.hpp"

namespace skein {

// Skein of the annulus in the Chebyshev basis: a finite combination of
// T_k(x) for k >= 0, where x is the core curve.  Key 0 stands for the unit
// (the empty link), so the basis element T_0 = 2 is the term {0: 2}.
class AnnulusSkein {
 public:
  AnnulusSkein(int level_n);

  int level() const { return level_; }
  const CycloContext& context() const { return *ctx_; }
  const std::map<long, CycloScalar>& terms() const { return terms_; }

  void add_term(long k, const CycloScalar& c);
  void add_term(long k, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  static AnnulusSkein unit(int level_n);
  // T_k(x) as an element: k = 0 gives the constant 2.
  static AnnulusSkein cheb(int level_n, long k);

  AnnulusSkein operator+(const AnnulusSkein& o) const;
  AnnulusSkein operator-(const AnnulusSkein& o) const;
  AnnulusSkein operator*(const AnnulusSkein& o) const;
  bool operator==(const AnnulusSkein& o) const;
  AnnulusSkein scaled(const CycloScalar& c) const;
  AnnulusSkein scaled(const Rational& c) const;

 private:
  int level_;
  const CycloContext* ctx_;
  std::map<long, CycloScalar> terms_;
};

inline AnnulusSkein ann_mul(const AnnulusSkein& a, const AnnulusSkein& b) { return a * b; }

// Threading: the central subalgebra map sends the character-ring generator
// with key a to T_{Na}(x).
AnnulusSkein ann_thread(const CharElement& u);

// Coordinates of u in the rank-N module basis T_0, T_1, ..., T_{N-1} over
// the character ring.  Entry 0 is the coefficient of T_0 (not of the unit).
std::vector<CharElement> ann_reduce(const AnnulusSkein& u);

// Inverse of ann_reduce: assemble the skein from basis coordinates.
AnnulusSkein ann_expand(const std::vector<CharElement>& coords, int level_n);

// Matrix of left multiplication by u on the basis T_0..T_{N-1}, columns
// indexed by the basis element multiplied.
RingMatrix<CharElement> ann_left_matrix(const AnnulusSkein& u);

// Trace: kill every T_k with N not dividing k, send T_{Na} to the character
// generator with key a (and T_0 = 2 to 2).  Normalized so trace(unit) = 1.
CharElement ann_trace(const AnnulusSkein& u);

// Gram matrix of the trace pairing <u, v> = trace(uv) on T_0..T_{N-1}.
RingMatrix<CharElement> ann_pairing_matrix(int level_n);

// Determinant of a matrix over the annulus character ring, computed by
// fraction-free-certified elimination: the division of the cleared numerator
// by the cleared denominator is performed exactly in the polynomial model
// and rejected if it leaves a remainder.
CharElement ann_char_det(const RingMatrix<CharElement>& m, int level_n);

CharElement ann_pairing_det(int level_n);

// Coordinates of the inverse of u, where u is a unit of the algebra over
// the fraction field of the character ring.  Throws domain_error if u is
// not invertible there.
std::vector<CharFraction> ann_invert(const AnnulusSkein& u);

}  // namespace skein

#endif
