#pragma once

// Units, parameters and geometry of the four-dot tetrahedral array.
//
// Internally hbar = m = omega_o = 1: energies are in units of hbar*omega_o
// and lengths in oscillator lengths sqrt(hbar / (m omega_o)).  The two
// dimensionless knobs are
//   x_b = m omega_o l^2 / hbar        (barrier over E_g, so l = sqrt(x_b))
//   x_c = e^2 / (kappa l hbar omega_o) (Coulomb over E_g)
// and the Coulomb prefactor e^2/kappa becomes x_c * sqrt(x_b).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace qdspin {

using Vec3 = Eigen::Vector3d;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Site : int { A = 0, B = 1, C = 2, D = 3 };

inline constexpr int kNumSites = 4;

inline constexpr int index(Site s) { return static_cast<int>(s); }
inline constexpr Site site(int i) { return static_cast<Site>(i); }
char site_label(Site s);

struct ModelParams {
  double x_b = 1.0;
  double x_c = 0.0;
  std::optional<double> hbar_omega_mev;

  double dot_half_spacing() const;  // l
  double coulomb_prefactor() const; // e^2/kappa in internal units
};

/// Validates and builds a parameter record.  Throws DomainError for x_b <= 0,
/// x_c < 0, a nonpositive energy scale, or any non-finite value.
ModelParams make_params(double x_b, double x_c,
                        std::optional<double> hbar_omega_mev = std::nullopt);

struct DotGeometry {
  std::array<Vec3, kNumSites> vertices;

  const Vec3& operator[](Site s) const { return vertices[index(s)]; }
  double distance(Site p, Site q) const;
};

/// Equilateral tetrahedron with A at the origin and edge length 2*sqrt(x_b).
DotGeometry tetrahedron(double x_b);

/// Quartic-product confinement V(r) = prod_X |r - X|^2 / (2 (2l)^6), which
/// has a unit-curvature harmonic minimum at every vertex.
double potential(const Vec3& r, const DotGeometry& geom);

}  // namespace qdspin
