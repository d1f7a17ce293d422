#pragma once

// (x_b, x_c) grid sweeps of the effective couplings, CSV and gnuplot output.
//
// Each grid point is an independent pure computation.  The OpenMP kernel
// writes into a preallocated buffer indexed by grid position, so results
// are identical to the serial reference regardless of thread count.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdspin/model.hpp"

namespace qdspin {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ElectronCount { Three, Four, Both };

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  /// Parses "min:max:steps".  Throws DomainError when malformed.
  static AxisRange parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct SweepConfig {
  ElectronCount n = ElectronCount::Both;
  AxisRange xb{0.5, 3.0, 50};
  AxisRange xc{0.0, 6.0, 50};
  std::optional<double> hbar_omega_mev;
  std::filesystem::path output_path = "sweep.csv";
  std::optional<std::filesystem::path> grid_dir;
  bool check = false;
  double oracle_tol = 1e-6;
  int threads = 0;  // 0: OpenMP default

  /// Throws DomainError when the ranges or tolerances are invalid.
  void validate() const;
};

struct SweepRow3 {
  double x_b, x_c;
  double E_half, E_threehalf, L0, L1, K, J, deltaJ;
};

struct SweepRow4 {
  double x_b, x_c;
  double E0, E1, E2, L0, L1, L2, K, J, Jprime, Jprime_over_J;
};

/// Degenerate points come back with NaN in every derived column.
SweepRow3 compute_row3(double x_b, double x_c);
SweepRow4 compute_row4(double x_b, double x_c);

/// Rows ordered x_b-major, then x_c.
std::vector<SweepRow3> sweep_three_serial(const AxisRange& xb, const AxisRange& xc);
std::vector<SweepRow3> sweep_three_parallel(const AxisRange& xb, const AxisRange& xc,
                                            int threads = 0);
std::vector<SweepRow4> sweep_four_serial(const AxisRange& xb, const AxisRange& xc);
std::vector<SweepRow4> sweep_four_parallel(const AxisRange& xb, const AxisRange& xc,
                                           int threads = 0);

std::string csv_header3(bool with_mev);
std::string csv_header4(bool with_mev);

/// %.17g, or the literal NaN.
std::string format_value(double v);

void write_csv(std::ostream& os, const std::vector<SweepRow3>& rows,
               std::optional<double> hbar_omega_mev);
void write_csv(std::ostream& os, const std::vector<SweepRow4>& rows,
               std::optional<double> hbar_omega_mev);

/// gnuplot splot-compatible "x_b x_c value" blocks, one block per x_b.
void write_grid(std::ostream& os, const std::vector<double>& xb, const std::vector<double>& xc,
                const std::vector<double>& values);

struct SweepSummary {
  std::vector<std::filesystem::path> files;
  std::size_t rows = 0;
  std::size_t degenerate = 0;
};

/// Where the CSV for a given electron count goes: the output path itself,
/// or with an _n3/_n4 suffix when both counts are swept.
std::filesystem::path output_for(const SweepConfig& config, int n);

/// Runs the configured sweeps and writes every requested file.  Throws IoError.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& log);

}  // namespace qdspin
