#include "qdspin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qdspin/effective.hpp"
#include "qdspin/quadrature.hpp"

namespace qdspin {

QuadratureSpec default_one_body_spec() { return {}; }

QuadratureSpec default_coulomb_spec() {
  return {16, QuadratureMethod::GaussLegendre, 1e-13, 1024};
}

namespace {

double orbital(const Vec3& r, const Vec3& center) {
  return std::pow(std::numbers::pi, -0.75) * std::exp(-0.5 * (r - center).squaredNorm());
}

double gh_integral(OneBodyKind kind, const Vec3& pc, const Vec3& qc, const DotGeometry& geom,
                   int n) {
  const auto rule = gauss_hermite(n);
  const Vec3 mid = 0.5 * (pc + qc);
  const double norm2 = std::pow(std::numbers::pi, -1.5);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double sx = 0.0;
    for (int j = 0; j < n; ++j) {
      double sy = 0.0;
      for (int k = 0; k < n; ++k) {
        const Vec3 u(rule.nodes[i], rule.nodes[j], rule.nodes[k]);
        const Vec3 r = mid + u;
        // phi_p phi_q / exp(-|u|^2), combined in one exponent
        const double pair =
            norm2 * std::exp(-0.5 * (r - pc).squaredNorm() - 0.5 * (r - qc).squaredNorm() +
                             u.squaredNorm());
        double op = 1.0;
        switch (kind) {
          case OneBodyKind::Overlap: op = 1.0; break;
          case OneBodyKind::Kinetic:
            // -1/2 laplacian phi_q = -1/2 (|r - q|^2 - 3) phi_q
            op = -0.5 * ((r - qc).squaredNorm() - 3.0);
            break;
          case OneBodyKind::Potential: op = potential(r, geom); break;
        }
        sy += rule.weights[k] * pair * op;
      }
      sx += rule.weights[j] * sy;
    }
    total += rule.weights[i] * sx;
  }
  return total;
}

bool converged(double now, double before, double tol) {
  return std::abs(now - before) <= tol * std::max(std::abs(now), 1e-300) ||
         (now == 0.0 && before == 0.0);
}

}  // namespace

double quad_one_body(OneBodyKind kind, Site p, Site q, const DotGeometry& geom,
                     const QuadratureSpec& spec) {
  if (spec.method != QuadratureMethod::GaussHermite)
    throw DomainError("one-body oracle uses Gauss-Hermite");
  int n = std::max(spec.node_count, 1);
  double prev = gh_integral(kind, geom[p], geom[q], geom, n);
  while (2 * n <= spec.max_nodes) {
    n *= 2;
    const double cur = gh_integral(kind, geom[p], geom[q], geom, n);
    if (converged(cur, prev, spec.target_tol)) return cur;
    prev = cur;
  }
  std::ostringstream os;
  os << "one-body quadrature did not reach " << spec.target_tol << " by " << n << " nodes";
  throw ConvergenceError(os.str());
}

double midpoint_overlap(Site p, Site q, const DotGeometry& geom, int cells, double half_width) {
  const Vec3 mid = 0.5 * (geom[p] + geom[q]);
  const double h = 2.0 * half_width / cells;
  double sum = 0.0;
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j)
      for (int k = 0; k < cells; ++k) {
        const Vec3 r = mid + Vec3(-half_width + (i + 0.5) * h, -half_width + (j + 0.5) * h,
                                  -half_width + (k + 0.5) * h);
        sum += orbital(r, geom[p]) * orbital(r, geom[q]);
      }
  return sum * h * h * h;
}

double quad_coulomb(Site a, Site b, Site c, Site d, const DotGeometry& geom,
                    const ModelParams& params, const QuadratureSpec& spec) {
  if (spec.method != QuadratureMethod::GaussLegendre)
    throw DomainError("Coulomb oracle uses Gauss-Legendre");
  const double strength = params.x_c * std::sqrt(params.x_b);
  if (strength == 0.0) return 0.0;

  // Each electron's orbital pair is a normalized unit-exponent cloud of
  // weight exp(-|x - y|^2/4).  The separation r1 - r2 is then Gaussian with
  // mean R and unit variance per axis, and with s = tan(theta)/sqrt(2)
  //   <1/|r1-r2|> = sqrt(2/pi) int_0^{pi/2} cos(theta) exp(-R^2 sin^2(theta)/2) dtheta.
  const Vec3 m1 = 0.5 * (geom[a] + geom[c]);
  const Vec3 m2 = 0.5 * (geom[b] + geom[d]);
  const double w1 = std::exp(-0.25 * (geom[a] - geom[c]).squaredNorm());
  const double w2 = std::exp(-0.25 * (geom[b] - geom[d]).squaredNorm());
  const double r2 = (m1 - m2).squaredNorm();

  auto integrate = [&](int n) {
    const auto rule = gauss_legendre(n, 0.0, 0.5 * std::numbers::pi);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sn = std::sin(rule.nodes[i]);
      s += rule.weights[i] * std::cos(rule.nodes[i]) * std::exp(-0.5 * r2 * sn * sn);
    }
    return s;
  };

  int n = std::max(spec.node_count, 1);
  double prev = integrate(n);
  while (2 * n <= spec.max_nodes) {
    n *= 2;
    const double cur = integrate(n);
    if (converged(cur, prev, spec.target_tol))
      return strength * w1 * w2 * std::sqrt(2.0 / std::numbers::pi) * cur;
    prev = cur;
  }
  throw ConvergenceError("Coulomb quadrature did not converge");
}

ElementPair product_state_element(const std::vector<Site>& bra, const std::vector<Site>& ket,
                                  const IntegralTable& table) {
  const int n = static_cast<int>(bra.size());
  if (n != static_cast<int>(ket.size())) throw DomainError("bra/ket electron count mismatch");

  ElementPair out{1.0, 0.0};
  for (int k = 0; k < n; ++k) out.overlap *= table.overlap(bra[k], ket[k]);

  // one-body terms: h acts on electron i, identity on the rest
  for (int i = 0; i < n; ++i) {
    double term = 1.0;
    for (int k = 0; k < n; ++k)
      term *= (k == i) ? table.one_body(bra[k], ket[k]) : table.overlap(bra[k], ket[k]);
    out.energy += term;
  }
  // pair terms: v acts on electrons i and j together
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double term = table.coulomb(bra[i], bra[j], ket[i], ket[j]);
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) term *= table.overlap(bra[k], ket[k]);
      out.energy += term;
    }
  return out;
}

ElementPair brute_force_element(const Permutation& bra_perm, const IntegralTable& table, int n) {
  if (n != 3 && n != 4) throw DomainError("brute-force elements support n = 3 or 4");
  if (bra_perm.size() != n) throw DomainError("permutation length differs from n");
  return product_state_element(bra_perm.bra(), Permutation::identity(n).bra(), table);
}

std::vector<ContractionTerm> contraction_terms(const SpinConfig& bra_spins,
                                               const SpinConfig& ket_spins,
                                               const IntegralTable& table) {
  const int n = static_cast<int>(bra_spins.size());
  if (n != static_cast<int>(ket_spins.size())) throw DomainError("spin config size mismatch");
  const auto perms = all_permutations(n);
  std::vector<ContractionTerm> terms;
  for (const auto& sigma : perms) {
    for (const auto& tau : perms) {
      // electron k carries the spin of whichever orbital it occupies
      bool spin_match = true;
      for (int k = 0; k < n && spin_match; ++k)
        spin_match = bra_spins[index(sigma[k])] == ket_spins[index(tau[k])];
      if (!spin_match) continue;
      terms.push_back({sigma, tau, sigma.parity() * tau.parity(),
                       product_state_element(sigma.bra(), tau.bra(), table)});
    }
  }
  return terms;
}

double rayleigh_quotient(const SpinState& state, const IntegralTable& table) {
  double num = 0.0, norm = 0.0;
  for (const auto& bra : state)
    for (const auto& ket : state) {
      const double c = bra.coefficient * ket.coefficient;
      for (const auto& t : contraction_terms(bra.spins, ket.spins, table)) {
        num += c * t.sign * t.value.energy;
        norm += c * t.sign * t.value.overlap;
      }
    }
  if (!(std::abs(norm) >= kDegenerateDenominator))
    throw DegenerateBasisError("antisymmetrized state has vanishing norm");
  return num / norm;
}

SpinState reference_state(int n, double total_spin) {
  constexpr Spin u = Spin::Up, d = Spin::Down;
  if (n == 3 && total_spin == 1.5) return {{1.0, {u, u, u}}};
  if (n == 3 && total_spin == 0.5) return {{1.0, {u, d, u}}, {-1.0, {d, u, u}}};
  if (n == 4 && total_spin == 0.0)
    return {{1.0, {u, d, u, d}}, {-1.0, {u, d, d, u}}, {-1.0, {d, u, u, d}}, {1.0, {d, u, d, u}}};
  if (n == 4 && total_spin == 1.0)
    return {{1.0, {u, d, u, d}}, {1.0, {u, d, d, u}}, {-1.0, {d, u, u, d}}, {-1.0, {d, u, d, u}}};
  if (n == 4 && total_spin == 2.0) return {{1.0, {u, u, u, u}}};
  throw DomainError("unsupported (n, S_T) sector");
}

double brute_force_energy(int n, double total_spin, const ModelParams& params) {
  const auto state = reference_state(n, total_spin);
  return rayleigh_quotient(state, build_table(params));
}

}  // namespace qdspin
