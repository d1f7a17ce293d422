#include <iostream>

#include "qdspin/checks.hpp"
#include "qdspin/config.hpp"

int main(int argc, char** argv) {
  using namespace qdspin;
  const auto parsed = parse_config(argc, argv);
  if (parsed.exit_now) {
    (*parsed.exit_now == kExitOk ? std::cout : std::cerr) << parsed.message << '\n';
    return *parsed.exit_now;
  }
  const auto& cfg = parsed.config;

  if (cfg.check) {
    const auto report = run_checks(cfg.oracle_tol);
    std::cout << report.to_text();
    return report.passed() ? kExitOk : kExitVerification;
  }

  try {
    run_sweep(cfg, std::cout);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
