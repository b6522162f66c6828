#ifndef SKEIN_PANTS_HPP
#define SKEIN_PANTS_HPP

#include <array>
#include <map>

#include "skein/annulus.hpp"
#include "skein/charring.hpp"
#include "skein/linalg.hpp"

namespace skein {

// Skein of the three-holed sphere: combinations of T_a(x)T_b(y)T_c(z) with
// x, y, z the boundary curves.  Slot value 0 means no factor, so the
// all-zero key is the unit and the basis element with a zero slot carries a
// factor 2 for each T_0.
class PantsSkein {
 public:
  using Key = std::array<long, 3>;

  PantsSkein(int level_n);

  int level() const { return level_; }
  const std::map<Key, CycloScalar>& terms() const { return terms_; }

  void add_term(const Key& k, const CycloScalar& c);
  void add_term(const Key& k, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  static PantsSkein unit(int level_n);
  // T_a(x)T_b(y)T_c(z); zero slots contribute their constant 2.
  static PantsSkein cheb(int level_n, long a, long b, long c);

  PantsSkein operator+(const PantsSkein& o) const;
  PantsSkein operator-(const PantsSkein& o) const;
  PantsSkein operator*(const PantsSkein& o) const;
  bool operator==(const PantsSkein& o) const;
  PantsSkein scaled(const CycloScalar& c) const;

 private:
  int level_;
  const CycloContext* ctx_;
  std::map<Key, CycloScalar> terms_;
};

inline PantsSkein pants_mul(const PantsSkein& u, const PantsSkein& v) { return u * v; }

// Pure tensor of three annulus skeins, one per boundary slot.
PantsSkein pants_tensor(const AnnulusSkein& u, const AnnulusSkein& v, const AnnulusSkein& w);

PantsSkein pants_thread(const CharElement& u);

// Character element supported on one slot, from an annulus character element.
CharElement pants_slot_embed(const CharElement& u, int slot);

// Deletion-rule trace: keys survive only when all three indices are
// divisible by N.  Normalized with trace(unit) = 1.
CharElement pants_trace(const PantsSkein& u);

// Basis triples (a,b,c), 0 <= a,b,c < N, in lexicographic order.
std::vector<PantsSkein::Key> pants_basis_keys(int level_n);

RingMatrix<CharElement> pants_pairing_matrix(int level_n);

// Determinant of the pairing via the Kronecker identity
// det(P1 (x) P2 (x) P3) = prod_s embed_s(det P)^(N^2).
CharElement pants_pairing_det(int level_n);

// The same determinant by direct fraction elimination on the full
// N^3 x N^3 matrix; used as an independent cross-check at small N.
CharFraction pants_pairing_det_direct(int level_n);

}  // namespace skein

#endif
