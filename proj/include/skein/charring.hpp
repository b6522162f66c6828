#ifndef SKEIN_CHARRING_HPP
#define SKEIN_CHARRING_HPP

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "skein/cyclotomic.hpp"

namespace skein {

enum class Surface { annulus, pants, torus, punctured };

const char* surface_name(Surface s);

// Basis key of the character ring (the threaded, central subalgebra).
// Meaning by surface, with N the level:
//   annulus    {a,0,0}  T_{Na}(x)
//   pants      {a,b,c}  T_{Na}(x) T_{Nb}(y) T_{Nc}(z), index 0 = no factor
//   torus      {p,q,0}  (Np,Nq)_T, (p,q) canonical: p>0, or p=0 and q>=0
//   punctured  {k,p,q}  T_{kN}(delta) (Np,Nq)_T
// The all-zero key is the unit (empty skein) on every surface.
struct CharKey {
  std::array<int, 3> v{0, 0, 0};
  auto operator<=>(const CharKey&) const = default;
};

inline CharKey char_key_annulus(int a) { return CharKey{{a, 0, 0}}; }
inline CharKey char_key_pants(int a, int b, int c) { return CharKey{{a, b, c}}; }
CharKey char_key_torus(int p, int q);                // canonicalizes (p,q) ~ (-p,-q)
CharKey char_key_punctured(int k, int p, int q);

// Finitely supported map key -> CycloScalar over one surface and level.
// Zero coefficients are never stored.
class CharElement {
 public:
  CharElement(Surface s, int N);

  Surface surface() const { return surf_; }
  int level() const { return N_; }
  const CycloContext& context() const { return *ctx_; }
  const std::map<CharKey, CycloScalar>& terms() const { return terms_; }

  static CharElement unit(Surface s, int N);
  static CharElement key_term(Surface s, int N, const CharKey& k);
  static CharElement key_term(Surface s, int N, const CharKey& k, const CycloScalar& c);

  void add_term(const CharKey& k, const CycloScalar& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_unit_multiple() const;
  CycloScalar unit_coefficient() const;  // coefficient of the unit key

  CharElement operator-() const;
  CharElement operator+(const CharElement& o) const;
  CharElement operator-(const CharElement& o) const;
  CharElement operator*(const CharElement& o) const;
  CharElement& operator+=(const CharElement& o) { return *this = *this + o; }
  CharElement& operator-=(const CharElement& o) { return *this = *this - o; }
  CharElement& operator*=(const CharElement& o) { return *this = *this * o; }
  bool operator==(const CharElement& o) const;
  bool operator!=(const CharElement& o) const { return !(*this == o); }

  CharElement scaled(const CycloScalar& c) const;
  CharElement scaled(const Rational& r) const;
  CharElement pow(long e) const;  // e >= 0

 private:
  Surface surf_;
  int N_;
  const CycloContext* ctx_;
  std::map<CharKey, CycloScalar> terms_;

  void check_compatible(const CharElement& o) const;
};

CharElement char_mul(const CharElement& a, const CharElement& b);
inline CharElement char_add(const CharElement& a, const CharElement& b) { return a + b; }
inline CharElement char_scale(const CycloScalar& c, const CharElement& a) { return a.scaled(c); }
inline bool char_is_zero(const CharElement& a) { return a.is_zero(); }
inline bool char_eq(const CharElement& a, const CharElement& b) { return a == b; }

// Fraction over the character ring. Denominators are nonzero; equality is by
// cross-multiplication, no common-factor reduction is attempted.
class CharFraction {
 public:
  explicit CharFraction(const CharElement& num);
  CharFraction(const CharElement& num, const CharElement& den);

  const CharElement& num() const { return num_; }
  const CharElement& den() const { return den_; }

  static CharFraction zero(Surface s, int N) { return CharFraction(CharElement(s, N)); }
  static CharFraction one(Surface s, int N) { return CharFraction(CharElement::unit(s, N)); }

  bool is_zero() const { return num_.is_zero(); }
  bool den_is_unit() const;  // denominator is a rational multiple of the unit

  CharFraction operator-() const;
  CharFraction operator+(const CharFraction& o) const;
  CharFraction operator-(const CharFraction& o) const;
  CharFraction operator*(const CharFraction& o) const;
  CharFraction operator/(const CharFraction& o) const;
  CharFraction& operator+=(const CharFraction& o) { return *this = *this + o; }
  CharFraction& operator-=(const CharFraction& o) { return *this = *this - o; }
  CharFraction& operator*=(const CharFraction& o) { return *this = *this * o; }
  bool operator==(const CharFraction& o) const;
  bool operator!=(const CharFraction& o) const { return !(*this == o); }

 private:
  CharElement num_, den_;
};

inline CharFraction frac_add(const CharFraction& a, const CharFraction& b) { return a + b; }
inline CharFraction frac_mul(const CharFraction& a, const CharFraction& b) { return a * b; }
inline CharFraction frac_div(const CharFraction& a, const CharFraction& b) { return a / b; }
inline bool frac_eq(const CharFraction& a, const CharFraction& b) { return a == b; }
inline bool frac_is_zero(const CharFraction& a) { return a.is_zero(); }

// Laurent polynomial in lambda, mu over the cyclotomic field. The torus
// character ring embeds injectively here, which is the independent oracle for
// zero-testing and nonzero-divisor certification.
class LaurentElement {
 public:
  explicit LaurentElement(const CycloContext& ctx) : ctx_(&ctx) {}

  const CycloContext& context() const { return *ctx_; }
  const std::map<std::pair<long, long>, CycloScalar>& terms() const { return terms_; }

  static LaurentElement monomial(const CycloContext& ctx, long i, long j,
                                 const CycloScalar& c);

  void add_term(long i, long j, const CycloScalar& c);

  bool is_zero() const { return terms_.empty(); }
  LaurentElement operator-() const;
  LaurentElement operator+(const LaurentElement& o) const;
  LaurentElement operator-(const LaurentElement& o) const;
  LaurentElement operator*(const LaurentElement& o) const;
  bool operator==(const LaurentElement& o) const;
  bool operator!=(const LaurentElement& o) const { return !(*this == o); }

 private:
  const CycloContext* ctx_;
  std::map<std::pair<long, long>, CycloScalar> terms_;
};

// Embedding of the closed curve (p,q)_T: (-1)^gcd(p,q) (l^p m^q + l^-p m^-q),
// and 2 for (p,q) = (0,0). Defined for arbitrary integer pairs.
LaurentElement laurent_embed_curve(const CycloContext& ctx, long p, long q);

// Embedding of a torus character element; the unit maps to 1 and the key
// (p,q) maps to the curve (Np, Nq).
LaurentElement laurent_embed(const CharElement& torus_elem);

// Exact division; returns false when num is not a multiple of den.
bool laurent_divide(const LaurentElement& num, const LaurentElement& den,
                    LaurentElement& quot);

// Inverse of laurent_embed on its image; throws internal_check_error away
// from the image.
CharElement laurent_unembed_torus(const LaurentElement& e, int N);

CycloScalar laurent_eval(const LaurentElement& e, const CycloScalar& lambda,
                         const CycloScalar& mu);

// Univariate expansion of annulus character elements (key a -> T_{Na}(x)),
// with exact division and collection back. Used to certify that determinant
// denominators divide out.
using CycloPoly = std::map<long, CycloScalar>;

CycloPoly annulus_char_expand(const CharElement& a);
bool cyclopoly_divide(const CycloPoly& num, const CycloPoly& den, CycloPoly& quot,
                      const CycloContext& ctx);
CharElement annulus_char_collect(const CycloPoly& p, int N);

}  // namespace skein

#endif
