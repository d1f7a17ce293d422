#include "qdspin/effective.hpp"

#include <cmath>
#include <sstream>

namespace qdspin {

namespace {

double checked_ratio(double num, double den, const char* what) {
  if (!(std::abs(den) >= kDegenerateDenominator)) {
    std::ostringstream os;
    os << "degenerate orbital basis: denominator of " << what << " is " << den;
    throw DegenerateBasisError(os.str());
  }
  return num / den;
}

}  // namespace

int coefficient_count(int n) {
  if (n < 1) throw DomainError("electron count must be positive");
  return n / 2 + 1;
}

Energies3 energies_three(const PermElements3& e) {
  return {checked_ratio(e.eps3 + 2.0 * e.eps0 - 3.0 * e.eps1, e.p3 + 2.0 * e.p0 - 3.0 * e.p1,
                        "E_3/2"),
          checked_ratio(e.eps3 - e.eps0, e.p3 - e.p0, "E_1/2")};
}

SpinCoefficients coefficients_three(double e_threehalf, double e_half) {
  // L0 + 15/4 L1 = E_3/2, L0 + 3/4 L1 = E_1/2
  SpinCoefficients c;
  c.n = 3;
  const double l1 = (e_threehalf - e_half) / 3.0;
  const double l0 = e_half - 0.75 * l1;
  c.L = {l0, l1};
  c.J = 2.0 * l1;
  c.K = l0 + 2.25 * l1;
  c.energies = {{0.5, e_half, 4}, {1.5, e_threehalf, 4}};
  return c;
}

double delta_j_three(const PermElements3& e) {
  PermElements3 zeroed = e;
  zeroed.p0 = 0.0;
  zeroed.eps0 = 0.0;
  const auto full = energies_three(e);
  const auto bare = energies_three(zeroed);
  return coefficients_three(full.threehalf, full.half).J -
         coefficients_three(bare.threehalf, bare.half).J;
}

Energies4 energies_four(const PermElements4& e) {
  Energies4 out{};
  out.singlet = checked_ratio(e.eps4 - 4.0 * e.eps1 + 3.0 * e.eps0,
                              e.p4 - 4.0 * e.p1 + 3.0 * e.p0, "E_0");
  out.triplet = checked_ratio(e.eps4 - 2.0 * e.eps2 - e.eps0 + 2.0 * e.eps0prime,
                              e.p4 - 2.0 * e.p2 - e.p0 + 2.0 * e.p0prime, "E_1");
  out.quintet = checked_ratio(
      e.eps4 - 6.0 * e.eps2 + 8.0 * e.eps1 + 3.0 * e.eps0 - 6.0 * e.eps0prime,
      e.p4 - 6.0 * e.p2 + 8.0 * e.p1 + 3.0 * e.p0 - 6.0 * e.p0prime, "E_2");
  return out;
}

SpinCoefficients coefficients_four(double e0, double e1, double e2) {
  // E0 = L0, E1 = L0 + 2 L1 + 4 L2, E2 = L0 + 6 L1 + 36 L2
  const double a = e1 - e0;
  const double b = e2 - e0;
  const double l2 = (b - 3.0 * a) / 24.0;
  const double l1 = 0.5 * (a - 4.0 * l2);
  const double l0 = e0;
  SpinCoefficients c;
  c.n = 4;
  c.L = {l0, l1, l2};
  c.K = l0 + 3.0 * l1 + 13.5 * l2;
  c.J = 2.0 * l1 + 14.0 * l2;
  c.Jprime = 8.0 * l2;
  c.energies = {{0.0, e0, 2}, {1.0, e1, 9}, {2.0, e2, 5}};
  return c;
}

SpinCoefficients effective_three(const ModelParams& params) {
  const auto elems = three_electron_elements(params);
  const auto e = energies_three(elems);
  auto c = coefficients_three(e.threehalf, e.half);
  c.deltaJ = delta_j_three(elems);
  return c;
}

SpinCoefficients effective_four(const ModelParams& params) {
  const auto e = energies_four(four_electron_elements(params));
  return coefficients_four(e.singlet, e.triplet, e.quintet);
}

}  // namespace qdspin
