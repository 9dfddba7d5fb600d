#pragma once

#include <string>
#include <variant>
#include <vector>

#include "delsarte/polynomial.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

// The function family the LP draws from: Gegenbauer polynomials plus the
// extension functions f_alpha, g_beta and Musin's hat functions.

struct Gegenbauer {
  int n = 0;
  int k = 0;
};

struct FAlpha {
  Rational z;  // cos(alpha), 0 <= z < 1
};

struct GBeta {
  Rational cos_beta;  // beta < pi/2, so cos_beta > 0
};

struct MusinHat {
  int dim = 0;  // 3 or 4
};

using BasisFunction = std::variant<Gegenbauer, FAlpha, GBeta, MusinHat>;

// f_alpha(t) = (z - t^2)/(1 - z) for t < -sqrt(z), 0 on [-sqrt(z), z],
// (t - z)/(1 - z) for t > z.  Branch tests compare t^2 with z so no square
// root is ever taken in exact mode.
double f_alpha(const Rational& z, double t);
Rational f_alpha_exact(const Rational& z, const Rational& t);

// g_beta(t) = -1 for t < -cos(beta/2), 0 up to cos(beta), 1 beyond.
// cos(beta/2) = sqrt((1+cos beta)/2) by the half-angle formula; again the
// exact branch test squares t instead.
int g_beta(const Rational& cos_beta, double t);
int g_beta_exact(const Rational& cos_beta, const Rational& t);

// Musin's hat functions: min{-g_dim(t)/s_dim, 0} for t <= 1/2, else 2t-1,
// with (g_3, s_3=2.89) and (g_4, s_4=6.226) fixed polynomial data.
double musin_hat(int dim, double t);
Rational musin_hat_exact(int dim, const Rational& t);
const Polynomial& musin_inner(int dim);  // g_3 or g_4 in monomial form
Rational musin_scale(int dim);           // 2.89 or 6.226

double basis_fn_eval(const BasisFunction& fn, double t);
Rational basis_fn_eval_exact(const BasisFunction& fn, const Rational& t);
std::string basis_fn_name(const BasisFunction& fn);

struct BasisSpec {
  int n = 0;
  Rational alpha_deg;
  std::vector<BasisFunction> functions;
};

// cos(alpha_deg) rounded to 40 decimal digits, shared by every consumer so
// the grid, the LP and the certificates all agree on z.
Rational spec_cos_alpha(const BasisSpec& spec);

// Throws std::invalid_argument when the spec breaks one of its invariants:
// Gegenbauer entries with a foreign n, FAlpha entries whose z is not
// cos(alpha_deg), MusinHat in the wrong dimension or away from alpha = 60.
void validate_spec(const BasisSpec& spec);

std::vector<double> basis_eval(const BasisSpec& spec, double t);

// Piecewise view of a single basis function on [-1, 1].  Interior
// breakpoints are exact rationals or marked algebraic (-sqrt(radicand));
// each piece is one polynomial, or several meaning "min of these".
struct Breakpoint {
  bool neg_sqrt = false;
  Rational value;     // used when !neg_sqrt
  Rational radicand;  // breakpoint is -sqrt(radicand) when neg_sqrt
  double approx() const;
};

struct PiecewiseDescription {
  std::vector<Breakpoint> breakpoints;          // interior, increasing
  std::vector<std::vector<Polynomial>> pieces;  // breakpoints.size()+1 cells
};

PiecewiseDescription piecewise_description(const BasisFunction& fn);

}  // namespace delsarte
