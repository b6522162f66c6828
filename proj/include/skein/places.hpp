#ifndef SKEIN_PLACES_HPP
#define SKEIN_PLACES_HPP

#include <array>
#include <vector>

#include "skein/charring.hpp"
#include "skein/cyclotomic.hpp"

namespace skein {

// A place: an evaluation of the character ring into the exact coefficient
// field Q(zeta_2N).  Parameters are multiplicative wherever a multiplicative
// parametrization exists, so every specialized value stays exact.
class Place {
 public:
  // Parameter meaning by surface:
  //   annulus    z, the image of T_N(x)
  //   pants      z1, z2, z3, the images of the three threaded generators
  //   torus      lambda, mu (both nonzero); the key (p,q) maps to
  //              (-1)^gcd(p,q) (lambda^{Np} mu^{Nq} + lambda^{-Np} mu^{-Nq})
  //   punctured  lambda, mu as for the torus plus the chosen boundary root
  //              w; the threaded boundary T_{Nk}(delta) maps to T_{Nk}(w)
  static Place annulus_place(int level_n, const CycloScalar& z);
  static Place pants_place(int level_n, const CycloScalar& z1,
                           const CycloScalar& z2, const CycloScalar& z3);
  static Place torus_place(int level_n, const CycloScalar& lambda,
                           const CycloScalar& mu);
  static Place punctured_place(int level_n, const CycloScalar& lambda,
                               const CycloScalar& mu, const CycloScalar& w);

  Surface surface() const { return surf_; }
  int level() const { return N_; }
  const CycloContext& context() const { return *ctx_; }
  const std::vector<CycloScalar>& params() const { return params_; }

 private:
  Place(Surface s, int level_n, std::vector<CycloScalar> params);

  Surface surf_;
  int N_;
  const CycloContext* ctx_;
  std::vector<CycloScalar> params_;
};

// Value of a character element at the place; a ring homomorphism.
CycloScalar specialize_char(const CharElement& u, const Place& phi);

enum class FrobeniusVerdict { frobenius, degenerate, not_computable };

const char* verdict_name(FrobeniusVerdict v);

struct FrobeniusResult {
  FrobeniusVerdict verdict;
  CycloScalar det;  // specialized pairing determinant; zero when not computable
};

// Specializes the trace pairing matrix entrywise and decides whether its
// determinant vanishes.  The punctured torus has no pairing determinant in
// this model and reports not_computable.
FrobeniusResult specialized_frobenius_check(const Place& phi);

// Determinant of left multiplication by T_k on the specialized annulus
// algebra, computed from the entrywise-specialized matrix.
CycloScalar left_det_at_place(int level_n, long k, const CycloScalar& z);

// z = q^N + q^-N, the image of T_N(x) at the multiplicative parameter q.
CycloScalar annulus_z_from_q(int level_n, const CycloScalar& q);

// The N roots zeta q + zeta^-1 q^-1 of T_N(x) = q^N + q^-N, with zeta
// running over the N-th roots of unity inside Q(zeta_2N).
std::vector<CycloScalar> annulus_fiber_roots(int level_n, const CycloScalar& q);

// Trace coordinates (x, y, z) = (-(lambda + 1/lambda), -(mu + 1/mu),
// -(lambda mu + 1/(lambda mu))) of a torus or punctured place; they satisfy
// x^2 + y^2 + z^2 + xyz - 4 = 0.
std::array<CycloScalar, 3> torus_trace_coordinates(const Place& phi);

}  // namespace skein

#endif
