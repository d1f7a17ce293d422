#include "qdspin/model.hpp"

#include <cmath>

namespace qdspin {

char site_label(Site s) { return static_cast<char>('A' + index(s)); }

double ModelParams::dot_half_spacing() const { return std::sqrt(x_b); }

double ModelParams::coulomb_prefactor() const { return x_c * std::sqrt(x_b); }

ModelParams make_params(double x_b, double x_c, std::optional<double> hbar_omega_mev) {
  if (!std::isfinite(x_b) || !std::isfinite(x_c))
    throw DomainError("model parameters must be finite");
  if (x_b <= 0.0) throw DomainError("x_b must be positive, got " + std::to_string(x_b));
  if (x_c < 0.0) throw DomainError("x_c must be nonnegative, got " + std::to_string(x_c));
  if (hbar_omega_mev) {
    if (!std::isfinite(*hbar_omega_mev) || *hbar_omega_mev <= 0.0)
      throw DomainError("hbar*omega must be a positive finite energy");
  }
  return ModelParams{x_b, x_c, hbar_omega_mev};
}

double DotGeometry::distance(Site p, Site q) const {
  return ((*this)[p] - (*this)[q]).norm();
}

DotGeometry tetrahedron(double x_b) {
  if (!(x_b > 0.0) || !std::isfinite(x_b))
    throw DomainError("tetrahedron needs a positive finite x_b");
  const double l = std::sqrt(x_b);
  const double r13 = std::sqrt(1.0 / 3.0);
  const double z = -2.0 * l * std::sqrt(2.0 / 3.0);
  DotGeometry g;
  g.vertices[0] = Vec3(0.0, 0.0, 0.0);
  g.vertices[1] = Vec3(2.0 * l * r13, 0.0, z);
  g.vertices[2] = Vec3(-l * r13, l, z);
  g.vertices[3] = Vec3(-l * r13, -l, z);
  return g;
}

double potential(const Vec3& r, const DotGeometry& geom) {
  // Edge length from the geometry itself so a relabeled geometry is treated
  // the same way.
  const double edge = geom.distance(Site::A, Site::B);
  const double e2 = edge * edge;
  double prod = 1.0;
  for (const auto& v : geom.vertices) prod *= (r - v).squaredNorm();
  return prod / (2.0 * e2 * e2 * e2);
}

}  // namespace qdspin
