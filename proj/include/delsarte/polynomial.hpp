#pragma once

#include <vector>

#include "delsarte/rational.hpp"

namespace delsarte {

// Polynomial in the monomial basis with exact rational coefficients,
// coefficient index = power. Trailing zeros are trimmed; the zero
// polynomial keeps a single zero coefficient and reports degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_(1, Rational(0)) {}
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  // c1 * t + c0
  static Polynomial linear(const Rational& c1, const Rational& c0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int power) const;

  Rational eval(const Rational& t) const;
  double eval(double t) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);

  // p(a + b*t), exact
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  return p * scalar;
}

struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational l, Rational h);
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

}  // namespace delsarte
