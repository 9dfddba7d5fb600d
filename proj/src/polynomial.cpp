#include "delsarte/polynomial.hpp"

#include <stdexcept>

namespace delsarte {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::linear(const Rational& c1, const Rational& c0) {
  return Polynomial(std::vector<Rational>{c0, c1});
}

const Rational& Polynomial::coeff(int power) const {
  static const Rational zero(0);
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[power];
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc = coeffs_.back();
  for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i) {
    acc *= t;
    acc += coeffs_[i];
  }
  return acc;
}

double Polynomial::eval(double t) const {
  double acc = to_double(coeffs_.back());
  for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i)
    acc = acc * t + to_double(coeffs_[i]);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = *this + other;
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: result = (...(c_d * (a+bt) + c_{d-1}) ...)
  Polynomial affine = Polynomial::linear(b, a);
  Polynomial acc = Polynomial::constant(coeffs_.back());
  for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i) {
    acc = acc * affine;
    acc += Polynomial::constant(coeffs_[i]);
  }
  return acc;
}

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
}

}  // namespace delsarte
