#include "qdspin/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qdspin/effective.hpp"

namespace qdspin {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRatioFloor = 1e-14;

double parse_number(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("malformed " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw DomainError("malformed " + what + " '" + s + "'");
  return v;
}

template <class Row, class Fn>
std::vector<Row> sweep_serial(const AxisRange& xb, const AxisRange& xc, Fn fn) {
  const auto bs = xb.values();
  const auto cs = xc.values();
  std::vector<Row> rows;
  rows.reserve(bs.size() * cs.size());
  for (double b : bs)
    for (double c : cs) rows.push_back(fn(b, c));
  return rows;
}

template <class Row, class Fn>
std::vector<Row> sweep_parallel(const AxisRange& xb, const AxisRange& xc, int threads, Fn fn) {
  const auto bs = xb.values();
  const auto cs = xc.values();
  const long nb = static_cast<long>(bs.size());
  const long nc = static_cast<long>(cs.size());
  std::vector<Row> rows(static_cast<std::size_t>(nb * nc));
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
  for (long k = 0; k < nb * nc; ++k) rows[k] = fn(bs[k / nc], cs[k % nc]);
  return rows;
}

std::string joined(const std::vector<double>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += format_value(vals[i]);
  }
  return out;
}

std::vector<double> scaled(std::vector<double> v, double f) {
  for (auto& x : v) x *= f;
  return v;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

AxisRange AxisRange::parse(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw DomainError("range must be min:max:steps, got '" + text + "'");
  AxisRange r;
  r.min = parse_number(text.substr(0, c1), "range minimum");
  r.max = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "range maximum");
  const double steps = parse_number(text.substr(c2 + 1), "step count");
  if (steps != std::floor(steps) || steps < 1 || steps > 1e6)
    throw DomainError("step count must be a positive integer, got '" + text.substr(c2 + 1) + "'");
  r.steps = static_cast<int>(steps);
  if (!std::isfinite(r.min) || !std::isfinite(r.max)) throw DomainError("range must be finite");
  if (r.max < r.min || (r.steps > 1 && r.max == r.min))
    throw DomainError("range must have positive length, got '" + text + "'");
  return r;
}

std::vector<double> AxisRange::values() const {
  std::vector<double> v(steps);
  for (int i = 0; i < steps; ++i)
    v[i] = steps == 1 ? min : min + (max - min) * static_cast<double>(i) / (steps - 1);
  return v;
}

std::string AxisRange::to_string() const {
  return format_value(min) + ":" + format_value(max) + ":" + std::to_string(steps);
}

void SweepConfig::validate() const {
  if (xb.steps < 1 || xc.steps < 1) throw DomainError("step counts must be at least 1");
  if (!(xb.min > 0.0)) throw DomainError("x_b minimum must be > 0");
  if (xc.min < 0.0) throw DomainError("x_c minimum must be >= 0");
  if (xb.max < xb.min || xc.max < xc.min) throw DomainError("ranges must be increasing");
  if (hbar_omega_mev && !(*hbar_omega_mev > 0.0 && std::isfinite(*hbar_omega_mev)))
    throw DomainError("hbar-omega must be positive");
  if (!(oracle_tol > 0.0)) throw DomainError("oracle tolerance must be positive");
  if (threads < 0) throw DomainError("thread count must be nonnegative");
}

SweepRow3 compute_row3(double x_b, double x_c) {
  SweepRow3 r{x_b, x_c, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  try {
    const auto c = effective_three(make_params(x_b, x_c));
    r.E_half = c.energies[0].energy;
    r.E_threehalf = c.energies[1].energy;
    r.L0 = c.L[0];
    r.L1 = c.L[1];
    r.K = c.K;
    r.J = c.J;
    r.deltaJ = *c.deltaJ;
  } catch (const DegenerateBasisError&) {
  }
  return r;
}

SweepRow4 compute_row4(double x_b, double x_c) {
  SweepRow4 r{x_b, x_c, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  try {
    const auto c = effective_four(make_params(x_b, x_c));
    r.E0 = c.energies[0].energy;
    r.E1 = c.energies[1].energy;
    r.E2 = c.energies[2].energy;
    r.L0 = c.L[0];
    r.L1 = c.L[1];
    r.L2 = c.L[2];
    r.K = c.K;
    r.J = c.J;
    r.Jprime = *c.Jprime;
    r.Jprime_over_J = std::abs(c.J) > kRatioFloor ? *c.Jprime / c.J : kNaN;
  } catch (const DegenerateBasisError&) {
  }
  return r;
}

std::vector<SweepRow3> sweep_three_serial(const AxisRange& xb, const AxisRange& xc) {
  return sweep_serial<SweepRow3>(xb, xc, compute_row3);
}

std::vector<SweepRow3> sweep_three_parallel(const AxisRange& xb, const AxisRange& xc,
                                            int threads) {
  return sweep_parallel<SweepRow3>(xb, xc, threads, compute_row3);
}

std::vector<SweepRow4> sweep_four_serial(const AxisRange& xb, const AxisRange& xc) {
  return sweep_serial<SweepRow4>(xb, xc, compute_row4);
}

std::vector<SweepRow4> sweep_four_parallel(const AxisRange& xb, const AxisRange& xc,
                                           int threads) {
  return sweep_parallel<SweepRow4>(xb, xc, threads, compute_row4);
}

std::string csv_header3(bool with_mev) {
  std::string h = "x_b,x_c,E_half,E_threehalf,L0,L1,K,J,deltaJ";
  if (with_mev) h += ",E_half_meV,E_threehalf_meV,L0_meV,L1_meV,K_meV,J_meV,deltaJ_meV";
  return h;
}

std::string csv_header4(bool with_mev) {
  std::string h = "x_b,x_c,E0,E1,E2,L0,L1,L2,K,J,Jprime,Jprime_over_J";
  if (with_mev) h += ",E0_meV,E1_meV,E2_meV,L0_meV,L1_meV,L2_meV,K_meV,J_meV,Jprime_meV";
  return h;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<SweepRow3>& rows,
               std::optional<double> mev) {
  os << csv_header3(mev.has_value()) << '\n';
  for (const auto& r : rows) {
    const std::vector<double> energies{r.E_half, r.E_threehalf, r.L0, r.L1, r.K, r.J, r.deltaJ};
    os << format_value(r.x_b) << ',' << format_value(r.x_c) << ',' << joined(energies);
    if (mev) os << ',' << joined(scaled(energies, *mev));
    os << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<SweepRow4>& rows,
               std::optional<double> mev) {
  os << csv_header4(mev.has_value()) << '\n';
  for (const auto& r : rows) {
    const std::vector<double> energies{r.E0, r.E1, r.E2, r.L0, r.L1, r.L2, r.K, r.J, r.Jprime};
    os << format_value(r.x_b) << ',' << format_value(r.x_c) << ',' << joined(energies) << ','
       << format_value(r.Jprime_over_J);
    if (mev) os << ',' << joined(scaled(energies, *mev));
    os << '\n';
  }
}

void write_grid(std::ostream& os, const std::vector<double>& xb, const std::vector<double>& xc,
                const std::vector<double>& values) {
  if (values.size() != xb.size() * xc.size()) throw DomainError("grid size mismatch");
  for (std::size_t i = 0; i < xb.size(); ++i) {
    if (i) os << '\n';
    for (std::size_t j = 0; j < xc.size(); ++j)
      os << format_value(xb[i]) << ' ' << format_value(xc[j]) << ' '
         << format_value(values[i * xc.size() + j]) << '\n';
  }
}

std::filesystem::path output_for(const SweepConfig& config, int n) {
  if (config.n != ElectronCount::Both) return config.output_path;
  auto p = config.output_path;
  const auto ext = p.extension();
  p.replace_extension();
  p += (n == 3 ? "_n3" : "_n4");
  p += ext;
  return p;
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream& log) {
  config.validate();
  SweepSummary summary;
  const auto bs = config.xb.values();
  const auto cs = config.xc.values();

  auto write_grids = [&](const std::string& name, const std::vector<double>& values) {
    if (!config.grid_dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*config.grid_dir, ec);
    if (ec) throw IoError("cannot create '" + config.grid_dir->string() + "': " + ec.message());
    const auto path = *config.grid_dir / (name + ".dat");
    auto os = open_output(path);
    write_grid(os, bs, cs, values);
    finish(os, path);
    summary.files.push_back(path);
  };

  auto report = [&](int n, const std::vector<double>& js, std::size_t degenerate) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double j : js)
      if (!std::isnan(j)) lo = std::min(lo, j), hi = std::max(hi, j);
    log << "n=" << n << ": " << js.size() << " points, " << degenerate << " degenerate, J in ["
        << format_value(lo) << ", " << format_value(hi) << "] hbar*omega\n";
  };

  if (config.n != ElectronCount::Four) {
    const auto rows = sweep_three_parallel(config.xb, config.xc, config.threads);
    const auto path = output_for(config, 3);
    auto os = open_output(path);
    write_csv(os, rows, config.hbar_omega_mev);
    finish(os, path);
    summary.files.push_back(path);

    std::vector<double> j, dj;
    std::size_t degenerate = 0;
    for (const auto& r : rows) {
      j.push_back(r.J);
      dj.push_back(r.deltaJ);
      if (std::isnan(r.J)) ++degenerate;
    }
    write_grids("J_n3", j);
    write_grids("deltaJ_n3", dj);
    summary.rows += rows.size();
    summary.degenerate += degenerate;
    report(3, j, degenerate);
  }
  if (config.n != ElectronCount::Three) {
    const auto rows = sweep_four_parallel(config.xb, config.xc, config.threads);
    const auto path = output_for(config, 4);
    auto os = open_output(path);
    write_csv(os, rows, config.hbar_omega_mev);
    finish(os, path);
    summary.files.push_back(path);

    std::vector<double> j, jp;
    std::size_t degenerate = 0;
    for (const auto& r : rows) {
      j.push_back(r.J);
      jp.push_back(r.Jprime);
      if (std::isnan(r.J)) ++degenerate;
    }
    write_grids("J_n4", j);
    write_grids("Jprime_n4", jp);
    summary.rows += rows.size();
    summary.degenerate += degenerate;
    report(4, j, degenerate);
  }
  for (const auto& f : summary.files) log << "wrote " << f.string() << '\n';
  return summary;
}

}  // namespace qdspin
