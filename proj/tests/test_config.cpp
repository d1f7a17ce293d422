#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qdspin/config.hpp"

using namespace qdspin;

TEST_CASE("defaults bracket the region of interest") {
  const auto r = parse_config(std::vector<std::string>{});
  REQUIRE_FALSE(r.exit_now.has_value());
  const auto& c = r.config;
  CHECK(c.n == ElectronCount::Both);
  CHECK(c.xb.min == 0.5);
  CHECK(c.xb.max == 3.0);
  CHECK(c.xb.steps == 50);
  CHECK(c.xc.min == 0.0);
  CHECK(c.xc.max == 6.0);
  CHECK(c.xc.steps == 50);
  CHECK_FALSE(c.check);
  CHECK_FALSE(c.hbar_omega_mev.has_value());
  CHECK_FALSE(c.grid_dir.has_value());
}

TEST_CASE("flags") {
  const auto r = parse_config({"--n", "4", "--xb", "0.5:3:50", "--xc", "0:6:50", "--out", "fig.csv",
                               "--hbar-omega-mev", "3", "--grid-out", "grids", "--check",
                               "--oracle-tol", "1e-8"});
  REQUIRE_FALSE(r.exit_now.has_value());
  CHECK(r.config.n == ElectronCount::Four);
  CHECK(r.config.output_path == "fig.csv");
  CHECK(*r.config.hbar_omega_mev == 3.0);
  CHECK(*r.config.grid_dir == "grids");
  CHECK(r.config.check);
  CHECK(r.config.oracle_tol == 1e-8);
}

TEST_CASE("usage errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--xb", "0:1:10"},
           {"--xb", "1:2"},
           {"--n", "5"},
           {"--bogus"},
           {"--oracle-tol", "0"},
           {"--hbar-omega-mev", "-3"},
           {"--xc", "-1:2:3"}}) {
    const auto r = parse_config(args);
    REQUIRE(r.exit_now.has_value());
    CHECK(*r.exit_now == kExitUsage);
    CHECK_FALSE(r.message.empty());
  }
  const auto help = parse_config({"--help"});
  REQUIRE(help.exit_now.has_value());
  CHECK(*help.exit_now == kExitOk);
  CHECK(help.message.find("--xb") != std::string::npos);
}

TEST_CASE("config file values are overridden by flags") {
  const auto path = std::filesystem::temp_directory_path() / "qdspin_test_config.toml";
  {
    std::ofstream os(path);
    os << "n = \"3\"\nxb = \"1:2:5\"\nxc = \"0:1:2\"\nout = \"from_file.csv\"\n";
  }
  const auto from_file = parse_config({"--config", path.string()});
  REQUIRE_FALSE(from_file.exit_now.has_value());
  CHECK(from_file.config.n == ElectronCount::Three);
  CHECK(from_file.config.xb.steps == 5);
  CHECK(from_file.config.output_path == "from_file.csv");

  const auto overridden = parse_config({"--config", path.string(), "--xb", "0.5:1:3"});
  REQUIRE_FALSE(overridden.exit_now.has_value());
  CHECK(overridden.config.xb.steps == 3);
  CHECK(overridden.config.xc.steps == 2);
}
