#pragma once

// Effective spin Hamiltonian H_spin = L0 + L1 S_T^2 (+ L2 (S_T^2)^2) fixed by
// matching one Rayleigh quotient per total-spin sector.  n electrons have
// floor(n/2)+1 distinct S_T^2 eigenvalues, so that many L's are retained.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qdspin/permelems.hpp"

namespace qdspin {

/// Raised when a matching denominator vanishes: the localized orbitals are
/// close to linearly dependent and the single-orbital-per-dot picture fails.
class DegenerateBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDegenerateDenominator = 1e-12;

struct SpinLevel {
  double total_spin;  // S_T
  double energy;
  int multiplicity;   // number of states in this level for the n-site spin space
};

struct SpinCoefficients {
  int n = 0;
  std::vector<double> L;  // L0, L1 (, L2)
  double K = 0.0;
  double J = 0.0;
  std::optional<double> Jprime;  // n = 4
  std::optional<double> deltaJ;  // n = 3
  std::vector<SpinLevel> energies;
};

/// floor(n/2) + 1
int coefficient_count(int n);

struct Energies3 {
  double threehalf;
  double half;
};

struct Energies4 {
  double singlet;
  double triplet;
  double quintet;
};

Energies3 energies_three(const PermElements3& e);
SpinCoefficients coefficients_three(double e_threehalf, double e_half);
/// J(full) - J(p0 = eps0 = 0)
double delta_j_three(const PermElements3& e);

Energies4 energies_four(const PermElements4& e);
SpinCoefficients coefficients_four(double e0, double e1, double e2);

/// Full n = 3 pipeline with deltaJ populated.
SpinCoefficients effective_three(const ModelParams& params);
SpinCoefficients effective_four(const ModelParams& params);

}  // namespace qdspin
