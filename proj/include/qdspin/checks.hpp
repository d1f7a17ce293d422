#pragma once

// Aggregated closed-form-vs-oracle verification used by `qdspin --check`.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qdspin {

struct CheckResult {
  std::string name;      // e.g. "coulomb(ABAB) x_b=1 x_c=1.5"
  double closed_form;
  double oracle;
  double rel_error;
  double tolerance;
  bool passed;
};

struct CheckReport {
  std::vector<CheckResult> results;
  std::vector<std::string> spectrum_failures;

  bool passed() const;
  std::size_t failures() const;
  std::string to_text(bool verbose = false) const;
};

/// Test hook: receives the quantity kind ("overlap", "kinetic", "potential",
/// "coulomb", "p", "eps", "energy") and the closed-form value, returns the
/// value to compare.
using ClosedFormHook = std::function<double(std::string_view kind, double value)>;

struct CheckGrid {
  std::vector<double> xb{0.75, 1.0, 2.0};
  std::vector<double> xc{0.0, 1.5, 4.0};
};

/// |a - b| / max(|a|, |b|), zero when both vanish.
double relative_error(double a, double b);

CheckReport run_checks(double oracle_tol, const CheckGrid& grid = {},
                       const ClosedFormHook& hook = {});

}  // namespace qdspin
