#ifndef SKEIN_TEXTIO_HPP
#define SKEIN_TEXTIO_HPP

#include <string>

#include "skein/annulus.hpp"
#include "skein/charring.hpp"
#include "skein/pants.hpp"
#include "skein/punctured.hpp"
#include "skein/torus.hpp"

namespace skein {

// Expression grammar, shared by all surfaces:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ['*' key] | key
//   coeff  := factor ('*' factor)*, stopping before a key
//   factor := rational | 'A' ['^' int] | '(' scalar ')'
//   scalar := ['+'|'-'] factors (('+'|'-') factors)*
// Keys by surface:
//   annulus    T[k], the Chebyshev skein; T[0] is the constant 2
//   pants      P(a,b,c), the basis monomial; slot 0 is an empty factor, so
//              P(0,0,0) is the unit
//   torus      (p,q); (0,0) is the constant 2
//   punctured  d^k, d^k*(p,q), (p,q), and the eta forms e^k, e^k*(p,q)
//              which expand through eta = delta + A^2 + A^-2 on parse
// A '(' in torus or punctured key position is a key exactly when a comma
// appears at depth one before the matching close.
AnnulusSkein parse_annulus(const std::string& text, int level_n);
PantsSkein parse_pants(const std::string& text, int level_n);
TorusSkein parse_torus(const std::string& text, int level_n);
PuncturedSkein parse_punctured(const std::string& text, int level_n);

// Standalone scalar expression, as used for place parameters.
CycloScalar parse_scalar(const std::string& text, int level_n);

// Canonical printed forms; parsing the printed form returns the element.
// Scalars print as a rational, as r*A^k with the least exponent in
// 1..2N-1, or as the parenthesized reduced representative.
std::string scalar_string(const CycloScalar& c);
std::string annulus_string(const AnnulusSkein& u);
std::string pants_string(const PantsSkein& u);
std::string torus_string(const TorusSkein& u);
std::string punctured_string(const PuncturedSkein& u);

// Key labels as used in printed elements; unit keys give "".
std::string annulus_key_label(long k);
std::string pants_key_label(const PantsSkein::Key& k);
std::string torus_key_label(const TorusSkein::Key& k);
std::string punctured_key_label(const PuncturedSkein::Key& k);
std::string char_key_label(Surface s, int level_n, const CharKey& k);

// Character elements print as threaded skeins: T[Na], P(Na,Nb,Nc),
// (Np,Nq), and Td[Nk]*(Np,Nq) with Td[m] the boundary-curve Chebyshev.
std::string char_string(const CharElement& u);

// Laurent elements print with explicit exponents: c*l^i*m^j.
std::string laurent_string(const LaurentElement& e);

// num / den over the character ring; a denominator that is a rational
// multiple of the unit is folded into the numerator.
std::string fraction_string(const CharFraction& f);

}  // namespace skein

#endif
