#include <cstdlib>
#include <iostream>
#include <string>

#include "causal_beams/grid.hpp"
#include "causal_beams/verify.hpp"

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
int main(int argc, char** argv) {
  cb::VerifyOptions o;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") o.tol_scale = 0.1;
    else if (a == "--seed" && i + 1 < argc) o.seed = std::strtoull(argv[++i], nullptr, 10);
    else {
      std::cerr << "usage: acceptance [--strict] [--seed N]\n";
      return 2;
    }
  }
  cb::configure_threads();
  const auto cs = cb::run_verify_all(o);
  for (const auto& c : cs) {
    std::cout << cb::summary_line(c) << "\n";
    for (const auto& k : c.checks)
      std::cout << "    " << (k.passed ? "ok   " : "FAIL ") << k.name << ": " << k.got << " (" << k.expected << ")\n";
  }
  return cb::all_passed(cs) ? 0 : 1;
}
