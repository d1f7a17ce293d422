#pragma once

// Overlaps p and Hamiltonian elements eps between a permuted orbital product
// <P(AB..)| and the reference product |AB..>, for three and four electrons.
// Subscripts count electrons whose orbital is the same in bra and ket.

#include <string>
#include <string_view>
#include <vector>

#include "qdspin/integrals.hpp"

namespace qdspin {

/// Bra orbital string: electron i sits in orbital bra[i] in the bra and in
/// orbital i in the ket.  "CAB" is the cyclic bra <CAB|ABC>.
class Permutation {
 public:
  explicit Permutation(std::vector<Site> bra);
  static Permutation from_string(std::string_view labels);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(bra_.size()); }
  Site operator[](int electron) const { return bra_[electron]; }
  const std::vector<Site>& bra() const { return bra_; }

  int parity() const;              // +1 even, -1 odd
  int fixed_points() const;
  std::string to_string() const;

 private:
  std::vector<Site> bra_;
};

/// All n! permutations of the first n sites, lexicographic order.
std::vector<Permutation> all_permutations(int n);

double product_overlap(const Permutation& perm, const IntegralTable& table);

/// Exact element over non-orthogonal product states:
///   sum_i h(P_i, i) prod_{j!=i} S(P_j, j)
/// + sum_{i<j} (P_i P_j | i j) prod_{k!=i,j} S(P_k, k)
double hamiltonian_element(const Permutation& perm, const IntegralTable& table);

struct PermElements3 {
  double p3, p1, p0;
  double eps3, eps1, eps0;
};

struct PermElements4 {
  double p4, p2, p1, p0, p0prime;
  double eps4, eps2, eps1, eps0, eps0prime;
};

PermElements3 three_electron_elements(const IntegralTable& table);
PermElements3 three_electron_elements(const ModelParams& params);
PermElements4 four_electron_elements(const IntegralTable& table);
PermElements4 four_electron_elements(const ModelParams& params);

}  // namespace qdspin
