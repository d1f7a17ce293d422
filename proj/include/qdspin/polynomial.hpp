#pragma once

// Dense trivariate polynomials of low total degree and their expectations
// against the unit isotropic Gaussian weight exp(-|u|^2) / pi^{3/2}.

#include <array>
#include <cstdint>

#include "qdspin/model.hpp"

namespace qdspin {

/// Exact rational number with small nonnegative integer parts.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// E[u^k] for a 1D weight exp(-u^2)/sqrt(pi): 0 for odd k, (k-1)!!/2^{k/2} otherwise.
Rational gaussian_moment(int k);

class Poly3 {
 public:
  static constexpr int kMaxDegree = 8;
  static constexpr int kSide = kMaxDegree + 1;

  Poly3() { coeffs_.fill(0.0); }

  static Poly3 constant(double c);
  /// |u + shift|^2 = |u|^2 + 2 shift.u + |shift|^2
  static Poly3 shifted_square_norm(const Vec3& shift);

  double& at(int a, int b, int c) { return coeffs_[offset(a, b, c)]; }
  double at(int a, int b, int c) const { return coeffs_[offset(a, b, c)]; }

  int degree() const;

  /// Throws DomainError if the product would exceed kMaxDegree.
  Poly3 operator*(const Poly3& rhs) const;

  double evaluate(const Vec3& u) const;

  /// Integral against exp(-|u|^2)/pi^{3/2}, monomial by monomial.
  double gaussian_expectation() const;

 private:
  static constexpr int offset(int a, int b, int c) { return (a * kSide + b) * kSide + c; }
  std::array<double, kSide * kSide * kSide> coeffs_;
};

}  // namespace qdspin
