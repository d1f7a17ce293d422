#pragma once

// Independent numerical ground truth for the closed-form integrals, the
// permutation elements and the matched energies.  Nothing here calls the
// closed-form integral routines or the factorized element formulas.

#include <stdexcept>
#include <vector>

#include "qdspin/integrals.hpp"
#include "qdspin/permelems.hpp"

namespace qdspin {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QuadratureMethod { GaussHermite, GaussLegendre };

struct QuadratureSpec {
  int node_count = 20;  // per axis, doubled until converged
  QuadratureMethod method = QuadratureMethod::GaussHermite;
  double target_tol = 1e-12;
  int max_nodes = 160;
};

QuadratureSpec default_one_body_spec();
QuadratureSpec default_coulomb_spec();

enum class OneBodyKind { Overlap, Kinetic, Potential };

/// Tensor-product Gauss-Hermite integration of phi_p * O * phi_q centered on
/// the pair midpoint, with the integrand evaluated pointwise.
double quad_one_body(OneBodyKind kind, Site p, Site q, const DotGeometry& geom,
                     const QuadratureSpec& spec = default_one_body_spec());

/// Loose cross-check: composite 3D midpoint rule on a box around both centers.
double midpoint_overlap(Site p, Site q, const DotGeometry& geom, int cells_per_axis,
                        double half_width);

/// Coulomb element via the 1/r = (2/sqrt(pi)) int_0^inf exp(-s^2 r^2) ds
/// representation, mapped to a smooth integral over [0, pi/2] and integrated
/// with Gauss-Legendre.
double quad_coulomb(Site a, Site b, Site c, Site d, const DotGeometry& geom,
                    const ModelParams& params,
                    const QuadratureSpec& spec = default_coulomb_spec());

struct ElementPair {
  double overlap;
  double energy;
};

/// <bra|H|ket> between arbitrary orbital products (orbital of each electron),
/// by literal expansion of H = sum_i h_i + sum_{i<j} v_ij.
ElementPair product_state_element(const std::vector<Site>& bra, const std::vector<Site>& ket,
                                  const IntegralTable& table);

ElementPair brute_force_element(const Permutation& bra_perm, const IntegralTable& table, int n);

enum class Spin : int { Up = 0, Down = 1 };

/// Spin of the electron occupying each orbital, in orbital order A, B, ...
using SpinConfig = std::vector<Spin>;

struct SpinComponent {
  double coefficient;
  SpinConfig spins;
};

using SpinState = std::vector<SpinComponent>;

/// One term of <Psi(s')|H|Psi(s)>: electron k sits in bra orbital bra[k] and
/// ket orbital ket[k].
struct ContractionTerm {
  Permutation bra;
  Permutation ket;
  int sign;
  ElementPair value;
};

/// All n! x n! terms of the antisymmetrized pair with nonzero spin overlap,
/// lexicographic in (bra, ket).
std::vector<ContractionTerm> contraction_terms(const SpinConfig& bra_spins,
                                               const SpinConfig& ket_spins,
                                               const IntegralTable& table);

/// Rayleigh quotient of a superposition of antisymmetrized basis states.
double rayleigh_quotient(const SpinState& state, const IntegralTable& table);

/// The fixed states used for each (n, S_T) sector.
SpinState reference_state(int n, double total_spin);

/// Throws DomainError on an unsupported sector and DegenerateBasisError on a
/// vanishing norm.
double brute_force_energy(int n, double total_spin, const ModelParams& params);

}  // namespace qdspin
