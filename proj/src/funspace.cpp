#include "delsarte/funspace.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "delsarte/gegenbauer.hpp"

namespace delsarte {

namespace {

void check_z(const Rational& z) {
  if (z < 0 || z >= 1)
    throw std::invalid_argument("f_alpha: requires 0 <= z = cos(alpha) < 1");
}

void check_cos_beta(const Rational& cb) {
  if (cb <= 0 || cb >= 1)
    throw std::invalid_argument("g_beta: requires 0 < cos(beta) < 1");
}

void check_musin_dim(int dim) {
  if (dim != 3 && dim != 4)
    throw std::invalid_argument("musin_hat: dim must be 3 or 4");
}

}  // namespace

Rational f_alpha_exact(const Rational& z, const Rational& t) {
  check_z(z);
  if (t < 0 && t * t > z) return (z - t * t) / (1 - z);  // t < -sqrt(z)
  if (t > z) return (t - z) / (1 - z);
  return Rational(0);
}

double f_alpha(const Rational& z, double t) {
  check_z(z);
  double zd = to_double(z);
  if (t < 0 && t * t > zd) return (zd - t * t) / (1 - zd);
  if (t > zd) return (t - zd) / (1 - zd);
  return 0.0;
}

int g_beta_exact(const Rational& cos_beta, const Rational& t) {
  check_cos_beta(cos_beta);
  Rational w = (1 + cos_beta) / 2;  // cos(beta/2)^2
  if (t < 0 && t * t > w) return -1; // t < -cos(beta/2)
  if (t > cos_beta) return 1;
  return 0;
}

int g_beta(const Rational& cos_beta, double t) {
  check_cos_beta(cos_beta);
  double w = to_double((1 + cos_beta) / 2);
  if (t < 0 && t * t > w) return -1;
  if (t > to_double(cos_beta)) return 1;
  return 0;
}

const Polynomial& musin_inner(int dim) {
  check_musin_dim(dim);
  auto build = [](int n, const std::vector<std::pair<int, const char*>>& terms) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (const auto& [k, coeff] : terms)
      p += *parse_decimal(coeff) * gegenbauer(n, k);
    return p;
  };
  static const Polynomial g3 = build(3, {{1, "1.6"},
                                         {2, "3.48"},
                                         {3, "1.65"},
                                         {4, "1.96"},
                                         {5, "0.1"},
                                         {9, "0.32"}});
  static const Polynomial g4 = build(4, {{1, "2"},
                                         {2, "6.12"},
                                         {3, "3.484"},
                                         {4, "5.12"},
                                         {9, "1.05"}});
  return dim == 3 ? g3 : g4;
}

Rational musin_scale(int dim) {
  check_musin_dim(dim);
  return dim == 3 ? *parse_decimal("2.89") : *parse_decimal("6.226");
}

Rational musin_hat_exact(int dim, const Rational& t) {
  check_musin_dim(dim);
  if (t * 2 > 1) return 2 * t - 1;
  Rational v = -musin_inner(dim).eval(t) / musin_scale(dim);
  return v < 0 ? v : Rational(0);
}

double musin_hat(int dim, double t) {
  check_musin_dim(dim);
  if (t > 0.5) return 2 * t - 1;
  double v = -musin_inner(dim).eval(t) / to_double(musin_scale(dim));
  return std::min(v, 0.0);
}

double basis_fn_eval(const BasisFunction& fn, double t) {
  return std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Gegenbauer>)
          return gegenbauer_eval(f.n, f.k, t);
        else if constexpr (std::is_same_v<T, FAlpha>)
          return f_alpha(f.z, t);
        else if constexpr (std::is_same_v<T, GBeta>)
          return g_beta(f.cos_beta, t);
        else
          return musin_hat(f.dim, t);
      },
      fn);
}

Rational basis_fn_eval_exact(const BasisFunction& fn, const Rational& t) {
  return std::visit(
      [&](const auto& f) -> Rational {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Gegenbauer>)
          return gegenbauer(f.n, f.k).eval(t);
        else if constexpr (std::is_same_v<T, FAlpha>)
          return f_alpha_exact(f.z, t);
        else if constexpr (std::is_same_v<T, GBeta>)
          return Rational(g_beta_exact(f.cos_beta, t));
        else
          return musin_hat_exact(f.dim, t);
      },
      fn);
}

std::string basis_fn_name(const BasisFunction& fn) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Gegenbauer>)
          return "G" + std::to_string(f.k);
        else if constexpr (std::is_same_v<T, FAlpha>)
          return "f_alpha";
        else if constexpr (std::is_same_v<T, GBeta>) {
          auto s = format_decimal(f.cos_beta);
          return "g_beta(" + (s ? *s : std::string("?")) + ")";
        } else
          return "musin" + std::to_string(f.dim);
      },
      fn);
}

Rational spec_cos_alpha(const BasisSpec& spec) {
  return cos_deg_fixed(spec.alpha_deg);
}

void validate_spec(const BasisSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("spec: dimension must be >= 2");
  if (spec.alpha_deg <= 0 || spec.alpha_deg > 120)
    throw std::invalid_argument("spec: alpha_deg must lie in (0, 120]");
  Rational z = spec_cos_alpha(spec);
  for (const auto& fn : spec.functions) {
    if (const auto* g = std::get_if<Gegenbauer>(&fn)) {
      if (g->n != spec.n)
        throw std::invalid_argument("spec: Gegenbauer entry with foreign dimension");
      if (g->k < 0) throw std::invalid_argument("spec: negative Gegenbauer degree");
    } else if (const auto* fa = std::get_if<FAlpha>(&fn)) {
      check_z(fa->z);
      if (fa->z != z)
        throw std::invalid_argument("spec: FAlpha entry must use z = cos(alpha_deg)");
    } else if (const auto* gb = std::get_if<GBeta>(&fn)) {
      check_cos_beta(gb->cos_beta);
    } else if (const auto* m = std::get_if<MusinHat>(&fn)) {
      check_musin_dim(m->dim);
      if (m->dim != spec.n)
        throw std::invalid_argument("spec: MusinHat dimension must match spec");
      if (spec.alpha_deg != 60)
        throw std::invalid_argument("spec: MusinHat requires alpha = 60 degrees");
    }
  }
}

std::vector<double> basis_eval(const BasisSpec& spec, double t) {
  validate_spec(spec);
  std::vector<double> out;
  out.reserve(spec.functions.size());
  for (const auto& fn : spec.functions) out.push_back(basis_fn_eval(fn, t));
  return out;
}

double Breakpoint::approx() const {
  return neg_sqrt ? -std::sqrt(to_double(radicand)) : to_double(value);
}

PiecewiseDescription piecewise_description(const BasisFunction& fn) {
  PiecewiseDescription out;
  if (const auto* g = std::get_if<Gegenbauer>(&fn)) {
    out.pieces.push_back({gegenbauer(g->n, g->k)});
    return out;
  }
  if (const auto* fa = std::get_if<FAlpha>(&fn)) {
    const Rational& z = fa->z;
    check_z(z);
    Rational s = 1 - z;
    // (z - t^2)/(1-z), 0, (t - z)/(1-z)
    Polynomial quad({z / s, Rational(0), Rational(-1) / s});
    Polynomial lin({-z / s, 1 / s});
    if (z == 0) {  // breakpoints -sqrt(z) and z coincide at 0
      out.breakpoints.push_back({false, Rational(0), Rational(0)});
      out.pieces.push_back({quad});
      out.pieces.push_back({lin});
      return out;
    }
    out.breakpoints.push_back({true, Rational(0), z});  // -sqrt(z)
    out.breakpoints.push_back({false, z, Rational(0)});
    out.pieces.push_back({quad});
    out.pieces.push_back({Polynomial::constant(Rational(0))});
    out.pieces.push_back({lin});
    return out;
  }
  if (const auto* gb = std::get_if<GBeta>(&fn)) {
    check_cos_beta(gb->cos_beta);
    Rational w = (1 + gb->cos_beta) / 2;
    out.breakpoints.push_back({true, Rational(0), w});  // -cos(beta/2)
    out.breakpoints.push_back({false, gb->cos_beta, Rational(0)});
    out.pieces.push_back({Polynomial::constant(Rational(-1))});
    out.pieces.push_back({Polynomial::constant(Rational(0))});
    out.pieces.push_back({Polynomial::constant(Rational(1))});
    return out;
  }
  const auto& m = std::get<MusinHat>(fn);
  check_musin_dim(m.dim);
  out.breakpoints.push_back({false, Rational(1, 2), Rational(0)});
  Polynomial neg_scaled = Rational(-1) / musin_scale(m.dim) * musin_inner(m.dim);
  out.pieces.push_back({neg_scaled, Polynomial::constant(Rational(0))});
  out.pieces.push_back({Polynomial({Rational(-1), Rational(2)})});
  return out;
}

}  // namespace delsarte
