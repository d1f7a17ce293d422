#include "qdspin/config.hpp"

#include <CLI11.hpp>

namespace qdspin {

ParsedArgs parse_config(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_config(args);
}

ParsedArgs parse_config(const std::vector<std::string>& args) {
  ParsedArgs out;
  SweepConfig& cfg = out.config;

  CLI::App app{"Effective spin Hamiltonians for 3 and 4 electrons in a tetrahedral dot array",
               "qdspin"};
  std::string n_text = "both";
  std::string xb_text = cfg.xb.to_string();
  std::string xc_text = cfg.xc.to_string();
  std::string out_text = cfg.output_path.string();
  std::string grid_text;
  double mev = 0.0;

  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.add_option("--n", n_text, "Electron count: 3, 4 or both")
      ->check(CLI::IsMember({"3", "4", "both"}))
      ->capture_default_str();
  app.add_option("--xb", xb_text, "Tunneling-barrier grid min:max:steps")->capture_default_str();
  app.add_option("--xc", xc_text, "Coulomb grid min:max:steps")->capture_default_str();
  auto* mev_opt = app.add_option("--hbar-omega-mev", mev, "Energy scale; adds meV columns");
  app.add_option("--out", out_text, "CSV output path")->capture_default_str();
  auto* grid_opt = app.add_option("--grid-out", grid_text, "Directory for gnuplot grid files");
  app.add_flag("--check", cfg.check, "Run the oracle verification suite");
  app.add_option("--oracle-tol", cfg.oracle_tol, "Relative tolerance for --check")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = default)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.exit_now = kExitOk;
    out.message = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_now = kExitUsage;
    out.message = std::string("usage error: ") + e.what() + "\nRun with --help for usage.";
    return out;
  }

  try {
    cfg.n = n_text == "3" ? ElectronCount::Three
          : n_text == "4" ? ElectronCount::Four
                          : ElectronCount::Both;
    cfg.xb = AxisRange::parse(xb_text);
    cfg.xc = AxisRange::parse(xc_text);
    if (mev_opt->count() > 0) cfg.hbar_omega_mev = mev;
    cfg.output_path = out_text;
    if (grid_opt->count() > 0) cfg.grid_dir = grid_text;
    cfg.validate();
  } catch (const std::exception& e) {
    out.exit_now = kExitUsage;
    out.message = std::string("usage error: ") + e.what();
  }
  return out;
}

}  // namespace qdspin
