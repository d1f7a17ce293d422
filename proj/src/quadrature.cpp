#include "qdspin/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdspin/model.hpp"

namespace qdspin {

namespace {
constexpr int kNewtonIterations = 100;
constexpr double kNewtonEps = 1e-15;
}  // namespace

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw DomainError("quadrature needs at least one node");
  // Newton on orthonormal Hermite recurrences, roots seeded from asymptotics.
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * rule.nodes[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * rule.nodes[1];
    else
      z = 2.0 * z - rule.nodes[i - 2];

    double pp = 0.0;
    int it = 0;
    for (; it < kNewtonIterations; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kNewtonEps * std::max(1.0, std::abs(z))) break;
    }
    if (it == kNewtonIterations) throw std::runtime_error("Gauss-Hermite root search failed");
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw DomainError("quadrature needs at least one node");
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    int it = 0;
    for (; it < kNewtonIterations; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kNewtonEps) break;
    }
    if (it == kNewtonIterations) throw std::runtime_error("Gauss-Legendre root search failed");
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = 2.0 * half / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace qdspin
