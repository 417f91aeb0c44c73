// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include "weyl/cli/verify.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  weyl::cli::VerifyConfig cfg;
  cfg.level = weyl::cli::VerifyLevel::Standard;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--full") cfg.level = weyl::cli::VerifyLevel::Full;
    if (a == "--fast") cfg.level = weyl::cli::VerifyLevel::Fast;
    if (a == "--verbose") cfg.log = &std::cerr;
  }
  // Atlases are rebuilt so the timing limits measure real work.
  cfg.cache.enabled = false;
  bool ok = true;
  for (const auto& r : weyl::cli::run_verify(cfg)) {
    std::cout << weyl::cli::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  std::cout << (ok ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
