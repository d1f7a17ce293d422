#include "qdspin/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdspin/effective.hpp"
#include "qdspin/oracle.hpp"
#include "qdspin/spinverify.hpp"
#include "qdspin/sweep.hpp"

namespace qdspin {

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return spectrum_failures.size() +
         static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                [](const CheckResult& r) { return !r.passed; }));
}

std::string CheckReport::to_text(bool verbose) const {
  std::ostringstream os;
  for (const auto& r : results) {
    if (!verbose && r.passed) continue;
    os << (r.passed ? "ok     " : "FAILED ") << r.name << ": closed form "
       << format_value(r.closed_form) << ", oracle " << format_value(r.oracle)
       << ", rel error " << format_value(r.rel_error) << " (tol " << format_value(r.tolerance)
       << ")\n";
  }
  for (const auto& f : spectrum_failures) os << "FAILED " << f << '\n';
  os << results.size() << " comparisons, " << failures() << " failed\n";
  return os.str();
}

CheckReport run_checks(double tol, const CheckGrid& grid, const ClosedFormHook& hook) {
  if (!(tol > 0.0)) throw DomainError("oracle tolerance must be positive");
  CheckReport rep;
  auto apply = [&](std::string_view kind, double v) { return hook ? hook(kind, v) : v; };
  auto record = [&](std::string name, double closed, double oracle) {
    const double err = relative_error(closed, oracle);
    rep.results.push_back({std::move(name), closed, oracle, err, tol, err <= tol});
  };

  for (double xb : grid.xb) {
    for (double xc : grid.xc) {
      const auto params = make_params(xb, xc);
      const auto table = build_table(params);
      const auto& geom = table.geometry();
      const std::string at = " x_b=" + format_value(xb) + " x_c=" + format_value(xc);

      for (int i = 0; i < kNumSites; ++i)
        for (int j = i; j < kNumSites; ++j) {
          const Site p = site(i), q = site(j);
          const std::string pq{site_label(p), site_label(q)};
          record("overlap(" + pq + ")" + at, apply("overlap", overlap(p, q, geom)),
                 quad_one_body(OneBodyKind::Overlap, p, q, geom));
          record("kinetic(" + pq + ")" + at, apply("kinetic", kinetic(p, q, geom)),
                 quad_one_body(OneBodyKind::Kinetic, p, q, geom));
          record("potential(" + pq + ")" + at, apply("potential", potential_element(p, q, geom)),
                 quad_one_body(OneBodyKind::Potential, p, q, geom));
        }

      for (int a = 0; a < kNumSites; ++a)
        for (int b = 0; b < kNumSites; ++b)
          for (int c = 0; c < kNumSites; ++c)
            for (int d = 0; d < kNumSites; ++d) {
              const std::string abcd{site_label(site(a)), site_label(site(b)),
                                     site_label(site(c)), site_label(site(d))};
              record("coulomb(" + abcd + ")" + at,
                     apply("coulomb", coulomb(site(a), site(b), site(c), site(d), geom, params)),
                     quad_coulomb(site(a), site(b), site(c), site(d), geom, params));
            }

      for (int n : {3, 4}) {
        for (const auto& perm : all_permutations(n)) {
          const auto bf = brute_force_element(perm, table, n);
          const std::string tag = "(" + perm.to_string() + ")" + at;
          record("p" + tag, apply("p", product_overlap(perm, table)), bf.overlap);
          record("eps" + tag, apply("eps", hamiltonian_element(perm, table)), bf.energy);
        }
      }

      const auto e3 = energies_three(three_electron_elements(table));
      record("E_3/2" + at, apply("energy", e3.threehalf), brute_force_energy(3, 1.5, params));
      record("E_1/2" + at, apply("energy", e3.half), brute_force_energy(3, 0.5, params));
      const auto e4 = energies_four(four_electron_elements(table));
      record("E_0" + at, apply("energy", e4.singlet), brute_force_energy(4, 0.0, params));
      record("E_1" + at, apply("energy", e4.triplet), brute_force_energy(4, 1.0, params));
      record("E_2" + at, apply("energy", e4.quintet), brute_force_energy(4, 2.0, params));

      for (const auto& coeffs : {coefficients_three(e3.threehalf, e3.half),
                                 coefficients_four(e4.singlet, e4.triplet, e4.quintet)}) {
        const auto spec = verify_spectrum(coeffs, tol);
        for (const auto& f : spec.failures)
          rep.spectrum_failures.push_back("spectrum n=" + std::to_string(coeffs.n) + at + ": " + f);
      }
    }
  }
  return rep;
}

}  // namespace qdspin
