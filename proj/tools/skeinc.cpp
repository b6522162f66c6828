#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "skein/cli.hpp"
#include "skein/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact skein algebra calculator for the annulus, three-holed sphere, "
      "torus, and once-punctured torus at an odd root of unity"};
  app.name("skeinc");

  skein::Command cmd;
  std::string surface = "annulus";

  app.add_option("verb", cmd.verb,
                 "One of: mul, reduce, trace, invert, leftmat, pairing, "
                 "pairing-det, frobenius, embed, verify-identities, thread, "
                 "quotient")
      ->required()
      ->check(CLI::IsMember({"mul", "reduce", "trace", "invert", "leftmat",
                             "pairing", "pairing-det", "frobenius", "embed",
                             "verify-identities", "thread", "quotient"}));
  app.add_option("operands", cmd.operands,
                 "Element expressions; use -- before expressions that start "
                 "with a minus sign");
  app.add_option("-N,--level", cmd.level, "Root-of-unity level (odd, at least 3)");
  app.add_option("-s,--surface", surface,
                 "Surface: annulus, pants, torus, or ptorus");
  app.add_option("--place", cmd.place,
                 "Evaluation place: z= or q= (annulus), z1=,z2=,z3= (pants), "
                 "lambda=,mu= (torus), lambda=,mu=,w= (ptorus)");
  app.add_option("--basis", cmd.basis, "Torus reduction target: B, Bprime, or C");
  app.add_flag("--json", cmd.json, "Emit JSON instead of plain text");
  app.add_flag("--fail-degenerate", cmd.fail_degenerate,
               "Exit with status 4 when the frobenius verdict is degenerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cmd.surface = skein::surface_from_name(surface);
  } catch (const skein::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  return skein::run(cmd, std::cout, std::cerr);
}
