#ifndef SKEIN_CLI_HPP
#define SKEIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "skein/charring.hpp"

namespace skein {

// One invocation of the command-line tool, already split into fields.
//
// Verbs: mul, reduce, trace, invert, leftmat, pairing, pairing-det,
// frobenius, embed, verify-identities, thread, quotient.
//
// The place string holds comma-separated name=value pairs whose names depend
// on the surface: z= or q= (annulus), z1=,z2=,z3= (pants), lambda=,mu=
// (torus), lambda=,mu=,w= (punctured torus).  Values are scalar expressions
// in the same syntax the element parser accepts, so cyclotomic parameters
// like q=A work.
struct Command {
  std::string verb;
  Surface surface = Surface::annulus;
  int level = 3;
  std::vector<std::string> operands;
  std::string place;              // empty when no --place was given
  std::string basis = "Bprime";   // torus reduce target: B, Bprime, or C
  bool json = false;
  bool fail_degenerate = false;
};

// Executes the command, writing results to out and diagnostics to err.
// Returns the process exit code: 0 success, 1 internal failure, 2 parse
// error, 3 domain error, 4 degenerate place when fail_degenerate is set.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Maps "annulus", "pants", "torus", "ptorus" to the surface tag; throws
// domain_error for anything else.
Surface surface_from_name(const std::string& name);

}  // namespace skein

#endif
