#include "qdspin/permelems.hpp"

#include <algorithm>

namespace qdspin {

Permutation::Permutation(std::vector<Site> bra) : bra_(std::move(bra)) {
  const int n = size();
  if (n < 1 || n > kNumSites) throw DomainError("permutation length must be 1..4");
  std::vector<bool> seen(n, false);
  for (Site s : bra_) {
    const int i = index(s);
    if (i < 0 || i >= n || seen[i]) throw DomainError("not a permutation of the first n sites");
    seen[i] = true;
  }
}

Permutation Permutation::from_string(std::string_view labels) {
  std::vector<Site> bra;
  for (char c : labels) {
    if (c < 'A' || c > 'D') throw DomainError(std::string("bad site label '") + c + "'");
    bra.push_back(site(c - 'A'));
  }
  return Permutation(std::move(bra));
}

Permutation Permutation::identity(int n) {
  std::vector<Site> bra;
  for (int i = 0; i < n; ++i) bra.push_back(site(i));
  return Permutation(std::move(bra));
}

int Permutation::parity() const {
  std::vector<int> p;
  for (Site s : bra_) p.push_back(index(s));
  int sign = 1;
  for (int i = 0; i < size(); ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    if (index(bra_[i]) == i) ++count;
  return count;
}

std::string Permutation::to_string() const {
  std::string s;
  for (Site x : bra_) s += site_label(x);
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<Permutation> out;
  do {
    std::vector<Site> bra;
    for (int i : p) bra.push_back(site(i));
    out.emplace_back(std::move(bra));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

double product_overlap(const Permutation& perm, const IntegralTable& table) {
  double prod = 1.0;
  for (int i = 0; i < perm.size(); ++i) prod *= table.overlap(perm[i], site(i));
  return prod;
}

double hamiltonian_element(const Permutation& perm, const IntegralTable& table) {
  const int n = perm.size();
  std::array<double, kNumSites> s{};
  for (int i = 0; i < n; ++i) s[i] = table.overlap(perm[i], site(i));

  // prefix[i] = prod_{k<i} s_k, suffix[i] = prod_{k>=i} s_k
  std::array<double, kNumSites + 1> prefix{}, suffix{};
  prefix[0] = 1.0;
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * s[i];
  suffix[n] = 1.0;
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * s[i];

  double one_body = 0.0;
  for (int i = 0; i < n; ++i)
    one_body += table.one_body(perm[i], site(i)) * prefix[i] * suffix[i + 1];

  double two_body = 0.0;
  for (int i = 0; i < n; ++i) {
    double between = 1.0;
    for (int j = i + 1; j < n; ++j) {
      two_body += table.coulomb(perm[i], perm[j], site(i), site(j)) * prefix[i] * between *
                  suffix[j + 1];
      between *= s[j];
    }
  }
  return one_body + two_body;
}

namespace {

std::pair<double, double> element(std::string_view bra, const IntegralTable& table) {
  const auto perm = Permutation::from_string(bra);
  return {product_overlap(perm, table), hamiltonian_element(perm, table)};
}

}  // namespace

PermElements3 three_electron_elements(const IntegralTable& table) {
  PermElements3 e{};
  std::tie(e.p3, e.eps3) = element("ABC", table);
  std::tie(e.p1, e.eps1) = element("BAC", table);
  std::tie(e.p0, e.eps0) = element("CAB", table);
  return e;
}

PermElements3 three_electron_elements(const ModelParams& params) {
  return three_electron_elements(build_table(params));
}

PermElements4 four_electron_elements(const IntegralTable& table) {
  PermElements4 e{};
  std::tie(e.p4, e.eps4) = element("ABCD", table);
  std::tie(e.p2, e.eps2) = element("BACD", table);
  std::tie(e.p1, e.eps1) = element("ADBC", table);
  std::tie(e.p0, e.eps0) = element("BADC", table);
  std::tie(e.p0prime, e.eps0prime) = element("DABC", table);
  return e;
}

PermElements4 four_electron_elements(const ModelParams& params) {
  return four_electron_elements(build_table(params));
}

}  // namespace qdspin
