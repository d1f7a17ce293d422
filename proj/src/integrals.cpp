#include "qdspin/integrals.hpp"

#include <cmath>
#include <numbers>

#include "qdspin/polynomial.hpp"

namespace qdspin {

namespace {

constexpr double kBoysSeriesThreshold = 1e-6;

struct GaussianPair {
  double prefactor;  // exp(-d^2/4), the pair overlap
  Vec3 midpoint;
  double d2;
};

GaussianPair merge(const Vec3& p, const Vec3& q) {
  const double d2 = (p - q).squaredNorm();
  return {std::exp(-0.25 * d2), 0.5 * (p + q), d2};
}

}  // namespace

double boys_f0(double t) {
  if (!(t >= 0.0)) throw DomainError("Boys function argument must be nonnegative");
  if (t < kBoysSeriesThreshold) {
    // 1 - t/3 + t^2/10 - t^3/42 + t^4/216
    return 1.0 + t * (-1.0 / 3.0 + t * (1.0 / 10.0 + t * (-1.0 / 42.0 + t / 216.0)));
  }
  const double s = std::sqrt(t);
  return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(s);
}

double overlap(Site p, Site q, const DotGeometry& geom) {
  return merge(geom[p], geom[q]).prefactor;
}

double kinetic(Site p, Site q, const DotGeometry& geom) {
  // Both exponents are 1/2, reduced exponent 1/4:
  //   T = S * mu * (3 - 2 mu d^2) = S * (3/4 - d^2/8)
  const auto g = merge(geom[p], geom[q]);
  return g.prefactor * (0.75 - 0.125 * g.d2);
}

double potential_element(Site p, Site q, const DotGeometry& geom) {
  const auto g = merge(geom[p], geom[q]);
  const double edge2 = (geom[Site::A] - geom[Site::B]).squaredNorm();
  Poly3 poly = Poly3::constant(1.0 / (2.0 * edge2 * edge2 * edge2));
  for (const auto& v : geom.vertices) poly = poly * Poly3::shifted_square_norm(g.midpoint - v);
  return g.prefactor * poly.gaussian_expectation();
}

double coulomb(Site a, Site b, Site c, Site d, const DotGeometry& geom,
               const ModelParams& params) {
  const double strength = params.coulomb_prefactor();
  if (strength == 0.0) return 0.0;
  const auto e1 = merge(geom[a], geom[c]);
  const auto e2 = merge(geom[b], geom[d]);
  // Two unit-exponent normalized charge clouds: reduced exponent 1/2, and
  // 2 pi^{5/2} / (p q sqrt(p+q)) * pi^{-3} = sqrt(2/pi).
  const double r2 = (e1.midpoint - e2.midpoint).squaredNorm();
  return strength * e1.prefactor * e2.prefactor * std::sqrt(2.0 / std::numbers::pi) *
         boys_f0(0.5 * r2);
}

IntegralTable::IntegralTable(const ModelParams& params)
    : params_(params), geom_(tetrahedron(params.x_b)) {
  for (int i = 0; i < kNumSites; ++i) {
    for (int j = i; j < kNumSites; ++j) {
      const Site p = site(i), q = site(j);
      const double s = qdspin::overlap(p, q, geom_);
      const double t = qdspin::kinetic(p, q, geom_);
      const double v = qdspin::potential_element(p, q, geom_);
      overlap_[i][j] = overlap_[j][i] = s;
      kinetic_[i][j] = kinetic_[j][i] = t;
      potential_[i][j] = potential_[j][i] = v;
      one_body_[i][j] = one_body_[j][i] = t + v;
    }
  }
  for (int a = 0; a < kNumSites; ++a)
    for (int b = 0; b < kNumSites; ++b)
      for (int c = 0; c < kNumSites; ++c)
        for (int d = 0; d < kNumSites; ++d)
          coulomb_[((a * kNumSites + b) * kNumSites + c) * kNumSites + d] =
              qdspin::coulomb(site(a), site(b), site(c), site(d), geom_, params_);
}

IntegralTable build_table(const ModelParams& params) { return IntegralTable(params); }

}  // namespace qdspin
