#include "delsarte/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace delsarte {

Integer pow10(unsigned digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

std::optional<Rational> parse_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  std::string int_part, frac_part;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    int_part += text[pos++];
  if (int_part.empty()) return std::nullopt;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      frac_part += text[pos++];
    if (frac_part.empty()) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  Integer num(int_part + frac_part, 10);
  Rational q(num, pow10(static_cast<unsigned>(frac_part.size())));
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::optional<std::string> format_decimal(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  Integer den = r.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_even_p(den.get_mpz_t())) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  unsigned digits = twos > fives ? twos : fives;
  Integer scaled = r.get_num() * pow10(digits) / r.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (negative) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - digits);
  }
  return out;
}

Rational round_decimal(const Rational& q, unsigned digits) {
  Integer scale = pow10(digits);
  Rational scaled = q * scale;
  Integer n;
  // round half away from zero
  if (scaled >= 0) {
    Rational shifted = scaled + Rational(1, 2);
    mpz_fdiv_q(n.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  } else {
    Rational shifted = -scaled + Rational(1, 2);
    mpz_fdiv_q(n.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    n = -n;
  }
  Rational out(n, scale);
  out.canonicalize();
  return out;
}

Rational cos_deg_fixed(const Rational& deg_value, unsigned digits) {
  mpfr_t deg, pi, theta, c;
  mpfr_inits2(256, deg, pi, theta, c, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(deg, deg_value.get_mpq_t(), MPFR_RNDN);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul(theta, deg, pi, MPFR_RNDN);
  mpfr_div_ui(theta, theta, 180, MPFR_RNDN);
  mpfr_cos(c, theta, MPFR_RNDN);

  Integer scale = pow10(digits);
  mpfr_mul_z(c, c, scale.get_mpz_t(), MPFR_RNDN);
  Integer scaled;
  mpfr_get_z(scaled.get_mpz_t(), c, MPFR_RNDN);
  mpfr_clears(deg, pi, theta, c, static_cast<mpfr_ptr>(nullptr));

  Rational out(scaled, scale);
  out.canonicalize();
  return out;
}

static Integer isqrt_floor(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rational sqrt_below(const Rational& q, unsigned scale_digits) {
  if (q < 0) throw std::invalid_argument("sqrt_below: negative argument");
  Integer scale = pow10(scale_digits);
  // floor(sqrt(q) * 10^d) = isqrt(floor(q * 10^(2d)))
  Rational scaled = q * scale * scale;
  Integer floor_scaled;
  mpz_fdiv_q(floor_scaled.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  Rational out(isqrt_floor(floor_scaled), scale);
  out.canonicalize();
  return out;
}

Rational sqrt_above(const Rational& q, unsigned scale_digits) {
  Rational below = sqrt_below(q, scale_digits);
  if (below * below == q) return below;
  Rational out = below + Rational(1, pow10(scale_digits));
  out.canonicalize();
  return out;
}

}  // namespace delsarte
