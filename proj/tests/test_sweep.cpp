#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qdspin/checks.hpp"
#include "qdspin/sweep.hpp"

using namespace qdspin;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qdspin_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("AxisRange parsing") {
  const auto r = AxisRange::parse("0.5:3:6");
  CHECK(r.min == 0.5);
  CHECK(r.max == 3.0);
  CHECK(r.steps == 6);
  const auto v = r.values();
  REQUIRE(v.size() == 6);
  CHECK(v.front() == 0.5);
  CHECK(v.back() == 3.0);
  CHECK(v[1] == doctest::Approx(1.0));
  CHECK(AxisRange::parse("1:1:1").values() == std::vector<double>{1.0});

  for (const char* bad : {"1:2", "1:2:3:4", "a:2:3", "1:2:0", "1:2:2.5", "2:1:3", "1:1:3", ""})
    CHECK_THROWS_AS(AxisRange::parse(bad), DomainError);
}

TEST_CASE("format_value") {
  CHECK(format_value(0.1) == "0.10000000000000001");
  CHECK(format_value(std::nan("")) == "NaN");
  CHECK(format_value(-2.0) == "-2");
}

TEST_CASE("serial and OpenMP sweeps agree bit for bit") {
  const AxisRange xb{0.5, 3.0, 7}, xc{0.0, 6.0, 5};
  const auto s3 = sweep_three_serial(xb, xc);
  const auto p3 = sweep_three_parallel(xb, xc, 4);
  REQUIRE(s3.size() == 35);
  REQUIRE(p3.size() == 35);
  CHECK(std::memcmp(s3.data(), p3.data(), s3.size() * sizeof(SweepRow3)) == 0);

  const auto s4 = sweep_four_serial(xb, xc);
  const auto p4 = sweep_four_parallel(xb, xc, 3);
  REQUIRE(s4.size() == p4.size());
  CHECK(std::memcmp(s4.data(), p4.data(), s4.size() * sizeof(SweepRow4)) == 0);

  // x_b-major ordering
  CHECK(s3[0].x_b == 0.5);
  CHECK(s3[1].x_b == 0.5);
  CHECK(s3[1].x_c == 1.5);
  CHECK(s3[5].x_b == doctest::Approx(0.5 + 2.5 / 6));
}

TEST_CASE("degenerate grid points come back as NaN rows") {
  // overlap exp(-x_b) -> 1: denominators collapse below the threshold
  const auto r3 = compute_row3(1e-14, 1.0);
  CHECK(r3.x_b == 1e-14);
  CHECK(std::isnan(r3.J));
  CHECK(std::isnan(r3.deltaJ));
  const auto r4 = compute_row4(1e-14, 1.0);
  CHECK(std::isnan(r4.Jprime));
  CHECK(std::isnan(r4.Jprime_over_J));

  std::ostringstream os;
  write_csv(os, std::vector<SweepRow3>{r3}, std::nullopt);
  CHECK(os.str().find("NaN,NaN") != std::string::npos);
}

TEST_CASE("Jprime_over_J is populated only when J is nonzero") {
  const auto r = compute_row4(1.0, 1.5);
  CHECK(r.Jprime_over_J == doctest::Approx(r.Jprime / r.J));
}

TEST_CASE("CSV headers and meV block") {
  CHECK(csv_header3(false) == "x_b,x_c,E_half,E_threehalf,L0,L1,K,J,deltaJ");
  CHECK(csv_header4(false) == "x_b,x_c,E0,E1,E2,L0,L1,L2,K,J,Jprime,Jprime_over_J");

  const std::vector<SweepRow4> rows{compute_row4(1.0, 1.5)};
  std::ostringstream plain, scaled;
  write_csv(plain, rows, std::nullopt);
  write_csv(scaled, rows, 3.0);

  std::istringstream pi(plain.str()), si(scaled.str());
  std::string ph, pl, sh, sl;
  std::getline(pi, ph);
  std::getline(pi, pl);
  std::getline(si, sh);
  std::getline(si, sl);
  const auto pc = split(pl), sc = split(sl), names = split(sh);
  REQUIRE(pc.size() == 12);
  REQUIRE(sc.size() == 21);
  REQUIRE(names.size() == 21);
  // base block untouched
  for (std::size_t i = 0; i < pc.size(); ++i) CHECK(pc[i] == sc[i]);
  // meV block is exactly the energy columns times the scale
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(names[12 + i] == names[2 + i] + "_meV");
    CHECK(std::stod(sc[12 + i]) == std::stod(pc[2 + i]) * 3.0);
  }
}

TEST_CASE("grid files are gnuplot blocks") {
  std::ostringstream os;
  write_grid(os, {1.0, 2.0}, {0.0, 0.5}, {1, 2, 3, 4});
  CHECK(os.str() == "1 0 1\n1 0.5 2\n\n2 0 3\n2 0.5 4\n");
  CHECK_THROWS_AS(write_grid(os, {1.0}, {1.0}, {1, 2}), DomainError);
}

TEST_CASE("run_sweep writes files and is reproducible") {
  const auto dir = scratch("sweep");
  SweepConfig cfg;
  cfg.xb = {0.5, 3.0, 6};
  cfg.xc = {0.0, 6.0, 4};
  cfg.output_path = dir / "out.csv";
  cfg.grid_dir = dir / "grids";
  std::ostringstream log;
  const auto summary = run_sweep(cfg, log);
  CHECK(summary.rows == 48);
  CHECK(summary.degenerate == 0);
  CHECK(std::filesystem::exists(dir / "out_n3.csv"));
  CHECK(std::filesystem::exists(dir / "out_n4.csv"));
  for (const char* g : {"J_n3.dat", "deltaJ_n3.dat", "J_n4.dat", "Jprime_n4.dat"})
    CHECK(std::filesystem::exists(dir / "grids" / g));

  const auto first = slurp(dir / "out_n4.csv");
  std::size_t lines = 0;
  for (char c : first) lines += c == '\n';
  CHECK(lines == 25);

  cfg.threads = 1;
  run_sweep(cfg, log);
  CHECK(slurp(dir / "out_n4.csv") == first);

  cfg.n = ElectronCount::Three;
  cfg.output_path = dir / "only3.csv";
  run_sweep(cfg, log);
  CHECK(std::filesystem::exists(dir / "only3.csv"));

  cfg.output_path = dir / "missing" / "deeper" / "x.csv";
  CHECK_THROWS_AS(run_sweep(cfg, log), IoError);
}

TEST_CASE("run_checks") {
  const CheckGrid small{{1.0}, {1.5}};
  const auto ok = run_checks(1e-6, small);
  CHECK_MESSAGE(ok.passed(), ok.to_text());
  CHECK(ok.results.size() > 100);

  // perturbed closed form is caught and named
  const auto bad = run_checks(1e-6, small, [](std::string_view kind, double v) {
    return kind == "coulomb" ? v * (1.0 + 1e-4) : v;
  });
  CHECK_FALSE(bad.passed());
  const auto text = bad.to_text();
  CHECK(text.find("FAILED coulomb(") != std::string::npos);
  CHECK(text.find("FAILED kinetic(") == std::string::npos);

  // a loose gate passes the same perturbation
  CHECK(run_checks(1e-2, small, [](std::string_view kind, double v) {
          return kind == "coulomb" ? v * (1.0 + 1e-4) : v;
        }).passed());
  CHECK_THROWS_AS(run_checks(0.0, small), DomainError);
}
