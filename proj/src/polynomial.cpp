#include "qdspin/polynomial.hpp"

#include <cmath>

namespace qdspin {

Rational gaussian_moment(int k) {
  if (k < 0) throw DomainError("negative moment order");
  if (k % 2 != 0) return {0, 1};
  std::uint64_t dfact = 1;
  for (int j = k - 1; j > 1; j -= 2) dfact *= static_cast<std::uint64_t>(j);
  return {dfact, std::uint64_t{1} << (k / 2)};
}

Poly3 Poly3::constant(double c) {
  Poly3 p;
  p.at(0, 0, 0) = c;
  return p;
}

Poly3 Poly3::shifted_square_norm(const Vec3& shift) {
  Poly3 p;
  p.at(2, 0, 0) = 1.0;
  p.at(0, 2, 0) = 1.0;
  p.at(0, 0, 2) = 1.0;
  p.at(1, 0, 0) = 2.0 * shift.x();
  p.at(0, 1, 0) = 2.0 * shift.y();
  p.at(0, 0, 1) = 2.0 * shift.z();
  p.at(0, 0, 0) = shift.squaredNorm();
  return p;
}

int Poly3::degree() const {
  int deg = -1;
  for (int a = 0; a < kSide; ++a)
    for (int b = 0; a + b < kSide; ++b)
      for (int c = 0; a + b + c < kSide; ++c)
        if (at(a, b, c) != 0.0 && a + b + c > deg) deg = a + b + c;
  return deg;
}

Poly3 Poly3::operator*(const Poly3& rhs) const {
  if (degree() + rhs.degree() > kMaxDegree)
    throw DomainError("polynomial product exceeds supported degree");
  Poly3 out;
  for (int a1 = 0; a1 < kSide; ++a1)
    for (int b1 = 0; a1 + b1 < kSide; ++b1)
      for (int c1 = 0; a1 + b1 + c1 < kSide; ++c1) {
        const double x = at(a1, b1, c1);
        if (x == 0.0) continue;
        const int d1 = a1 + b1 + c1;
        for (int a2 = 0; d1 + a2 < kSide; ++a2)
          for (int b2 = 0; d1 + a2 + b2 < kSide; ++b2)
            for (int c2 = 0; d1 + a2 + b2 + c2 < kSide; ++c2) {
              const double y = rhs.at(a2, b2, c2);
              if (y != 0.0) out.at(a1 + a2, b1 + b2, c1 + c2) += x * y;
            }
      }
  return out;
}

double Poly3::evaluate(const Vec3& u) const {
  double sum = 0.0;
  for (int a = 0; a < kSide; ++a)
    for (int b = 0; a + b < kSide; ++b)
      for (int c = 0; a + b + c < kSide; ++c) {
        const double x = at(a, b, c);
        if (x != 0.0) sum += x * std::pow(u.x(), a) * std::pow(u.y(), b) * std::pow(u.z(), c);
      }
  return sum;
}

double Poly3::gaussian_expectation() const {
  double sum = 0.0;
  for (int a = 0; a < kSide; a += 2)
    for (int b = 0; a + b < kSide; b += 2)
      for (int c = 0; a + b + c < kSide; c += 2) {
        const double x = at(a, b, c);
        if (x == 0.0) continue;
        const Rational ma = gaussian_moment(a), mb = gaussian_moment(b), mc = gaussian_moment(c);
        // numerators are at most 105^3, denominators at most 2^12: exact in a double
        const Rational m{ma.num * mb.num * mc.num, ma.den * mb.den * mc.den};
        sum += x * m.value();
      }
  return sum;
}

}  // namespace qdspin
