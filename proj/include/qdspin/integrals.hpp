#pragma once

// Closed-form integrals over the localized s-type Gaussians
//   phi_X(r) = pi^{-3/4} exp(-|r - X|^2 / 2)
// centered on the dot vertices.  Every pair phi_p phi_q collapses, by the
// Gaussian product rule, to exp(-d^2/4) pi^{-3/2} exp(-|r - M|^2) with M the
// midpoint and d = |p - q|; the integrals below all start from that form.

#include <array>

#include "qdspin/model.hpp"

namespace qdspin {

/// F0(t) = integral_0^1 exp(-t u^2) du.  Throws DomainError for t < 0.
double boys_f0(double t);

double overlap(Site p, Site q, const DotGeometry& geom);

/// <p| -laplacian/2 |q>
double kinetic(Site p, Site q, const DotGeometry& geom);

/// <p| V |q> for the quartic-product confinement, evaluated exactly by
/// expanding V about the pair midpoint and integrating monomial moments.
double potential_element(Site p, Site q, const DotGeometry& geom);

/// (ab|cd) with electron 1 in bra a / ket c and electron 2 in bra b / ket d,
/// kernel x_c sqrt(x_b) / |r1 - r2|.
double coulomb(Site a, Site b, Site c, Site d, const DotGeometry& geom,
               const ModelParams& params);

using SiteMatrix = std::array<std::array<double, kNumSites>, kNumSites>;

/// All one- and two-body integrals for a parameter point, computed once.
class IntegralTable {
 public:
  explicit IntegralTable(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  const DotGeometry& geometry() const { return geom_; }

  double overlap(Site p, Site q) const { return overlap_[index(p)][index(q)]; }
  double kinetic(Site p, Site q) const { return kinetic_[index(p)][index(q)]; }
  double potential(Site p, Site q) const { return potential_[index(p)][index(q)]; }
  double one_body(Site p, Site q) const { return one_body_[index(p)][index(q)]; }
  double coulomb(Site a, Site b, Site c, Site d) const {
    return coulomb_[((index(a) * kNumSites + index(b)) * kNumSites + index(c)) * kNumSites +
                    index(d)];
  }

 private:
  ModelParams params_;
  DotGeometry geom_;
  SiteMatrix overlap_{};
  SiteMatrix kinetic_{};
  SiteMatrix potential_{};
  SiteMatrix one_body_{};
  std::array<double, kNumSites * kNumSites * kNumSites * kNumSites> coulomb_{};
};

IntegralTable build_table(const ModelParams& params);

}  // namespace qdspin
