#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qdspin/model.hpp"

using namespace qdspin;

namespace {

// Straight transcription of the product form, sharing nothing with the library.
double potential_reference(double x, double y, double z, double x_b) {
  const double l = std::sqrt(x_b);
  const double pts[4][3] = {{0, 0, 0},
                            {2 * l / std::sqrt(3.0), 0, -2 * l * std::sqrt(2.0 / 3.0)},
                            {-l / std::sqrt(3.0), l, -2 * l * std::sqrt(2.0 / 3.0)},
                            {-l / std::sqrt(3.0), -l, -2 * l * std::sqrt(2.0 / 3.0)}};
  double prod = 1.0;
  for (const auto& p : pts)
    prod *= (x - p[0]) * (x - p[0]) + (y - p[1]) * (y - p[1]) + (z - p[2]) * (z - p[2]);
  return prod / (2.0 * std::pow(2.0 * l, 6));
}

}  // namespace

TEST_CASE("make_params validates its inputs") {
  const auto gaas = make_params(1.0, 1.5, 3.0);
  CHECK(gaas.x_b == 1.0);
  CHECK(gaas.x_c == 1.5);
  REQUIRE(gaas.hbar_omega_mev.has_value());
  CHECK(*gaas.hbar_omega_mev == 3.0);

  const auto free = make_params(1.0, 0.0);
  CHECK(free.coulomb_prefactor() == 0.0);
  CHECK_FALSE(free.hbar_omega_mev.has_value());

  CHECK_THROWS_AS(make_params(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_params(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(make_params(std::numeric_limits<double>::infinity(), 1.0), DomainError);
  CHECK_THROWS_AS(make_params(1.0, std::nan("")), DomainError);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("internal units: l = sqrt(x_b), e^2/kappa = x_c sqrt(x_b)") {
  const auto p = make_params(4.0, 1.5);
  CHECK(p.dot_half_spacing() == doctest::Approx(2.0));
  CHECK(p.coulomb_prefactor() == doctest::Approx(3.0));
}

TEST_CASE("tetrahedron is equilateral with edge 2 sqrt(x_b)") {
  for (double xb : {1.0, 4.0, 0.37}) {
    const auto g = tetrahedron(xb);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(g.distance(site(i), site(j)) == doctest::Approx(2.0 * std::sqrt(xb)).epsilon(1e-14));
  }
  const auto g1 = tetrahedron(1.0);
  CHECK(g1[Site::A].norm() == 0.0);
  CHECK(tetrahedron(4.0).distance(Site::C, Site::D) == doctest::Approx(4.0));
  CHECK_THROWS_AS(tetrahedron(0.0), DomainError);
  CHECK_THROWS_AS(tetrahedron(-2.0), DomainError);
}

TEST_CASE("potential vanishes at vertices and matches a direct evaluation") {
  const auto g = tetrahedron(1.0);
  for (const auto& v : g.vertices) CHECK(potential(v, g) == 0.0);

  const Vec3 centroid = 0.25 * (g.vertices[0] + g.vertices[1] + g.vertices[2] + g.vertices[3]);
  const double vc = potential(centroid, g);
  CHECK(vc > 0.0);
  CHECK(vc == doctest::Approx(potential_reference(centroid.x(), centroid.y(), centroid.z(), 1.0))
                  .epsilon(1e-14));
  // centroid sits sqrt(3/2) l from every vertex: V = (3/2)^4 / 2^7
  CHECK(vc == doctest::Approx(std::pow(1.5, 4) / 128.0).epsilon(1e-13));

  const Vec3 r(0.3, -0.7, 1.1);
  CHECK(potential(r, tetrahedron(2.5)) ==
        doctest::Approx(potential_reference(0.3, -0.7, 1.1, 2.5)).epsilon(1e-14));
}

TEST_CASE("potential is harmonic with unit curvature near each vertex") {
  const double xb = 1.3;
  const auto g = tetrahedron(xb);
  const double h = 1e-4;
  for (const auto& v : g.vertices) {
    const Vec3 delta(1e-5, -2e-5, 0.5e-5);
    CHECK(potential(v + delta, g) == doctest::Approx(0.5 * delta.squaredNorm()).epsilon(1e-3));

    // finite-difference Hessian
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Vec3 ea = Vec3::Zero(), eb = Vec3::Zero();
        ea[a] = h;
        eb[b] = h;
        const double hess = (potential(v + ea + eb, g) - potential(v + ea - eb, g) -
                             potential(v - ea + eb, g) + potential(v - ea - eb, g)) /
                            (4.0 * h * h);
        const double want = a == b ? 1.0 : 0.0;
        CHECK(std::abs(hess - want) <= 1e-6);
      }
  }
}

TEST_CASE("potential is invariant under vertex relabeling") {
  const auto g = tetrahedron(1.7);
  const Vec3 r(0.4, 0.2, -0.9);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    DotGeometry relabeled;
    for (int i = 0; i < 4; ++i) relabeled.vertices[i] = g.vertices[perm[i]];
    CHECK(potential(r, relabeled) == doctest::Approx(potential(r, g)).epsilon(1e-14));
  } while (std::next_permutation(perm.begin(), perm.end()));
}
