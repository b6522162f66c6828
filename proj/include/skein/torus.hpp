#ifndef SKEIN_TORUS_HPP
#define SKEIN_TORUS_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/charring.hpp"
#include "skein/linalg.hpp"

namespace skein {

// Skein algebra of the torus: combinations of (p,q)-curve skeins (p,q)_T
// under the product-to-sum multiplication.  Keys are canonical ((p,q) with
// p > 0, or p = 0 and q >= 0); the key (0,0) stands for the unit, and the
// element (0,0)_T equals 2*unit and is never stored as a key.
class TorusSkein {
 public:
  using Key = std::pair<int, int>;

  TorusSkein(int level_n);

  int level() const { return level_; }
  const CycloContext& context() const { return *ctx_; }
  const std::map<Key, CycloScalar>& terms() const { return terms_; }

  void add_unit(const CycloScalar& c);
  void add_unit(const Rational& c);
  // Adds c*(p,q)_T; canonicalizes the key and applies (0,0)_T = 2*unit.
  void add_curve(int p, int q, const CycloScalar& c);
  bool is_zero() const { return terms_.empty(); }

  static TorusSkein unit(int level_n);
  static TorusSkein curve(int level_n, int p, int q);

  TorusSkein operator+(const TorusSkein& o) const;
  TorusSkein operator-(const TorusSkein& o) const;
  TorusSkein operator*(const TorusSkein& o) const;  // noncommutative
  bool operator==(const TorusSkein& o) const;
  TorusSkein scaled(const CycloScalar& c) const;
  TorusSkein scaled(const Rational& c) const;

 private:
  int level_;
  const CycloContext* ctx_;
  std::map<Key, CycloScalar> terms_;
};

inline TorusSkein torus_mul(const TorusSkein& u, const TorusSkein& v) { return u * v; }

// Central subalgebra map: character key (p,q) -> (Np,Nq)_T.
TorusSkein torus_thread(const CharElement& u);

bool centrality_check(const TorusSkein& c, const TorusSkein& v);

// Spanning set B and basis B' of the module over the character ring.
// In coordinate maps below the key (0,0) labels the basis element (0,0)_T.
std::vector<TorusSkein::Key> torus_b_keys(int level_n);
std::vector<TorusSkein::Key> torus_bprime_keys(int level_n);
bool torus_key_in_b(int level_n, int p, int q);

// The three central elements Eq-style eliminations divide by:
// [0] (2N,N)_T - (0,N)_T, [1] (N,0)_T - (N,2N)_T, [2] 2 - (2N,2N)_T,
// written in the character ring.
std::array<CharElement, 3> torus_central_divisors(int level_n);

// Coordinates over the spanning set B.  Every rewriting identity used is
// verified by expanding both sides through the raw product before first
// use at the given level; a failed verification throws internal_check_error
// naming the identity.
std::map<TorusSkein::Key, CharElement> torus_reduce_to_B(const TorusSkein& u);

// Coordinates over the basis B' with denominators limited to products of
// the central divisors.  The slot map always carries all N^2 keys.
struct TorusReduced {
  int level;
  std::map<TorusSkein::Key, CharFraction> slots;
};

TorusReduced torus_reduce_to_Bprime(const TorusSkein& u);

// Rebuild the skein from spanning-set coordinates (raw product expansion).
TorusSkein torus_expand(const std::map<TorusSkein::Key, CharElement>& comb, int level_n);

// Denominator-free restatement of expand(reduce(u)) == u: with D the
// product of the distinct central divisors, checks
// thread(D)*u == sum_s thread(num_s * complementary divisors)*b_s.
bool torus_roundtrip_check(const TorusSkein& u);

// Clears denominators of a reduced element: returns the raw expansion of
// den_out * u, where den_out is the product of the distinct slot
// denominators.
TorusSkein torus_expand_cleared(const TorusReduced& red, CharElement& den_out);

// Matrix of left multiplication on the basis B' (lexicographic order).
RingMatrix<CharFraction> torus_left_matrix(const TorusSkein& u);

// Deletion-rule trace: keep the unit and the keys with N|p and N|q.
CharElement torus_trace_raw(const TorusSkein& u);
CharFraction torus_trace(const TorusSkein& u);
CharFraction torus_trace(const TorusReduced& u);

RingMatrix<CharElement> torus_pairing_matrix(int level_n);

// Determinant of a matrix over the torus character ring via fraction
// elimination, certified by exact Laurent division of the cleared result.
CharElement torus_char_det(const RingMatrix<CharElement>& m, int level_n);

CharElement torus_pairing_det(int level_n);

// Coordinates of (p,0)_T * (0,q)_T in B'; assembling all N^2 of these gives
// the change of basis from the product basis C.
TorusReduced basis_C_expand(int level_n, int p, int q);
RingMatrix<CharFraction> basis_C_matrix(int level_n);

// Inverse over the fraction field; throws domain_error("not a unit at the
// generic fiber") if left multiplication is singular.
TorusReduced torus_invert(const TorusSkein& u);

struct IdentityReport {
  std::string family;
  long instances;
  bool ok;
  std::string detail;
};

// Sweeps every rewriting-identity family over its full parameter window at
// the given level and reports the outcome per family.
std::vector<IdentityReport> torus_verify_identities(int level_n);

}  // namespace skein

#endif
