#pragma once

// Dense 2^n x 2^n spin-operator matrices and the check that a set of
// effective coefficients reproduces the matched spectrum.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdspin/effective.hpp"

namespace qdspin {

using SpinMatrix = Eigen::MatrixXcd;

/// sigma_{i}(1) x sigma_{j}(2) x ..., index 0 is the identity.  n in [2, 6].
SpinMatrix pauli_tensor(std::span<const int> indices);

/// S_i^a with S = sigma / 2 on site i of n, a in {1, 2, 3}.
SpinMatrix site_spin(int site_index, int component, int n);

/// S_i . S_j on n sites.
SpinMatrix spin_dot(int i, int j, int n);

SpinMatrix total_spin_squared(int n);

/// K + J sum_{i<j} S_i.S_j (+ J' [(AB)(CD) + (AC)(BD) + (AD)(BC)] for n = 4).
SpinMatrix build_hspin(const SpinCoefficients& coeffs);

/// L0 + L1 S_T^2 (+ L2 (S_T^2)^2)
SpinMatrix build_hspin_polynomial(const SpinCoefficients& coeffs);

struct SpectrumLevel {
  double energy;
  int multiplicity;
};

/// Sorted eigenvalues clustered with gap threshold rel_gap * spectral range.
std::vector<SpectrumLevel> cluster_levels(std::span<const double> sorted_eigenvalues,
                                          double rel_gap = 1e-8);

struct SpectrumReport {
  bool passed = true;
  std::vector<SpectrumLevel> observed;
  std::vector<SpectrumLevel> expected;
  double identity_residual = 0.0;  // max |H_coupling - H_polynomial| entrywise
  std::vector<std::string> failures;

  std::string to_text() const;
};

/// Diagonalizes build_hspin(coeffs) and compares against coeffs.energies
/// (values and multiplicities) and against the L-polynomial form entrywise.
SpectrumReport verify_spectrum(const SpinCoefficients& coeffs, double tol);

}  // namespace qdspin
