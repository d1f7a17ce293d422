#include "qdspin/spinverify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace qdspin {

namespace {

using cd = std::complex<double>;

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw DomainError("Pauli index must be 0..3");
  }
  return m;
}

SpinMatrix kron(const SpinMatrix& a, const SpinMatrix& b) {
  SpinMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_sites(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw DomainError("unsupported spin count " + std::to_string(n));
}

}  // namespace

SpinMatrix pauli_tensor(std::span<const int> indices) {
  require_sites(static_cast<int>(indices.size()), 2, 6);
  SpinMatrix out = SpinMatrix::Identity(1, 1);
  for (int k : indices) out = kron(out, pauli(k));
  return out;
}

SpinMatrix site_spin(int site_index, int component, int n) {
  std::vector<int> idx(n, 0);
  idx.at(site_index) = component;
  return 0.5 * pauli_tensor(idx);
}

SpinMatrix spin_dot(int i, int j, int n) {
  SpinMatrix out = SpinMatrix::Zero(1 << n, 1 << n);
  for (int a = 1; a <= 3; ++a) out += site_spin(i, a, n) * site_spin(j, a, n);
  return out;
}

SpinMatrix total_spin_squared(int n) {
  require_sites(n, 3, 4);
  SpinMatrix out = SpinMatrix::Zero(1 << n, 1 << n);
  for (int a = 1; a <= 3; ++a) {
    SpinMatrix total = SpinMatrix::Zero(1 << n, 1 << n);
    for (int i = 0; i < n; ++i) total += site_spin(i, a, n);
    out += total * total;
  }
  return out;
}

SpinMatrix build_hspin(const SpinCoefficients& coeffs) {
  const int n = coeffs.n;
  require_sites(n, 3, 4);
  const int dim = 1 << n;
  SpinMatrix h = coeffs.K * SpinMatrix::Identity(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h += coeffs.J * spin_dot(i, j, n);
  if (n == 4) {
    const double jp = coeffs.Jprime.value_or(0.0);
    h += jp * (spin_dot(0, 1, 4) * spin_dot(2, 3, 4) + spin_dot(0, 2, 4) * spin_dot(1, 3, 4) +
               spin_dot(0, 3, 4) * spin_dot(1, 2, 4));
  }
  return h;
}

SpinMatrix build_hspin_polynomial(const SpinCoefficients& coeffs) {
  const int n = coeffs.n;
  require_sites(n, 3, 4);
  const int dim = 1 << n;
  const SpinMatrix st2 = total_spin_squared(n);
  SpinMatrix h = coeffs.L.at(0) * SpinMatrix::Identity(dim, dim) + coeffs.L.at(1) * st2;
  if (coeffs.L.size() > 2) h += coeffs.L[2] * st2 * st2;
  return h;
}

std::vector<SpectrumLevel> cluster_levels(std::span<const double> sorted, double rel_gap) {
  std::vector<SpectrumLevel> levels;
  if (sorted.empty()) return levels;
  const double range = sorted.back() - sorted.front();
  const double gap = rel_gap * range;
  double sum = sorted.front();
  int count = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > gap) {
      levels.push_back({sum / count, count});
      sum = 0.0;
      count = 0;
    }
    sum += sorted[i];
    ++count;
  }
  levels.push_back({sum / count, count});
  return levels;
}

SpectrumReport verify_spectrum(const SpinCoefficients& coeffs, double tol) {
  if (!(tol > 0.0)) throw DomainError("verification tolerance must be positive");
  SpectrumReport rep;
  const SpinMatrix h = build_hspin(coeffs);

  Eigen::SelfAdjointEigenSolver<SpinMatrix> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  std::vector<double> sorted(ev.data(), ev.data() + ev.size());
  std::sort(sorted.begin(), sorted.end());
  rep.observed = cluster_levels(sorted);

  // Expected levels, merged where the matched energies themselves coincide.
  std::vector<SpinLevel> want = coeffs.energies;
  std::sort(want.begin(), want.end(),
            [](const SpinLevel& a, const SpinLevel& b) { return a.energy < b.energy; });
  for (const auto& lvl : want) {
    if (!rep.expected.empty() && std::abs(lvl.energy - rep.expected.back().energy) <= tol) {
      rep.expected.back().multiplicity += lvl.multiplicity;
    } else {
      rep.expected.push_back({lvl.energy, lvl.multiplicity});
    }
  }

  std::ostringstream os;
  os.precision(17);
  if (rep.observed.size() != rep.expected.size()) {
    os << "level count " << rep.observed.size() << " != expected " << rep.expected.size();
    rep.failures.push_back(os.str());
  } else {
    for (std::size_t k = 0; k < rep.expected.size(); ++k) {
      const auto& o = rep.observed[k];
      const auto& e = rep.expected[k];
      const double scale = std::max(1.0, std::abs(e.energy));
      if (std::abs(o.energy - e.energy) > tol * scale) {
        os.str("");
        os << "eigenvalue " << o.energy << " != matched energy " << e.energy;
        rep.failures.push_back(os.str());
      }
      if (o.multiplicity != e.multiplicity) {
        os.str("");
        os << "level " << e.energy << " multiplicity " << o.multiplicity << " != "
           << e.multiplicity;
        rep.failures.push_back(os.str());
      }
    }
  }

  const SpinMatrix poly = build_hspin_polynomial(coeffs);
  rep.identity_residual = (h - poly).cwiseAbs().maxCoeff();
  const double entry_scale = std::max(1.0, poly.cwiseAbs().maxCoeff());
  if (rep.identity_residual > tol * entry_scale) {
    os.str("");
    os << "coupling form differs from L-polynomial form by " << rep.identity_residual;
    rep.failures.push_back(os.str());
  }
  rep.passed = rep.failures.empty();
  return rep;
}

std::string SpectrumReport::to_text() const {
  std::ostringstream os;
  os.precision(12);
  os << "spectrum check: " << (passed ? "PASS" : "FAIL") << "\n";
  for (const auto& l : observed) os << "  level " << l.energy << " x" << l.multiplicity << "\n";
  os << "  identity residual " << identity_residual << "\n";
  for (const auto& f : failures) os << "  FAILED: " << f << "\n";
  return os.str();
}

}  // namespace qdspin
