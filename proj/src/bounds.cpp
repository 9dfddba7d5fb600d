#include "delsarte/bounds.hpp"

#include <Eigen/Dense>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace delsarte {

Grid make_grid(const Rational& alpha_deg, int s, const BasisSpec& spec) {
  if (s < 16) throw std::invalid_argument("make_grid: need at least 16 nodes");
  if (alpha_deg <= 0 || alpha_deg > 120)
    throw std::invalid_argument("make_grid: alpha_deg outside (0, 120]");
  Grid g;
  g.z = cos_deg_fixed(alpha_deg);
  double hi = to_double(g.z);

  g.nodes.reserve(s + 8);
  for (int j = 0; j < s; ++j) {
    // -cos maps j=0..s-1 to an increasing Lobatto ladder on [-1, 1]
    double u = -std::cos(j * M_PI / (s - 1));
    g.nodes.push_back(-1.0 + (u + 1.0) * (hi + 1.0) / 2.0);
  }
  g.nodes.front() = -1.0;
  g.nodes.back() = hi;

  for (const auto& fn : spec.functions)
    for (const auto& bp : piecewise_description(fn).breakpoints) {
      double x = bp.approx();
      if (x > -1.0 && x < hi) g.nodes.push_back(x);
    }
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  return g;
}

LinearProgram build_lp(const BasisSpec& spec, const Grid& grid) {
  validate_spec(spec);
  const int k = static_cast<int>(spec.functions.size());
  LinearProgram lp;
  lp.objective.assign(k + 1, 0.0);
  lp.objective[k] = 1.0;  // maximize c
  lp.nonnegative.assign(k + 1, true);
  lp.nonnegative[k] = false;  // c is free

  auto row_at = [&](double t, double rhs) {
    std::vector<double> row = basis_eval(spec, t);
    row.push_back(1.0);  // + c
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(rhs);
  };
  row_at(1.0, 1.0);
  for (double t : grid.nodes) row_at(t, 0.0);
  return lp;
}

namespace {

// Combined value sum_i x_i f_i(t) + c for the violation scans below; the
// Gegenbauer entries share one recurrence pass.
struct ComboEval {
  int n = 0;
  std::vector<double> geg;  // coefficient per degree
  std::vector<std::pair<const BasisFunction*, double>> ext;
  double c = 0;

  ComboEval(const BasisSpec& spec, const std::vector<double>& primal) : n(spec.n) {
    for (std::size_t i = 0; i < spec.functions.size(); ++i) {
      if (const auto* g = std::get_if<Gegenbauer>(&spec.functions[i])) {
        if (geg.size() <= static_cast<std::size_t>(g->k))
          geg.resize(static_cast<std::size_t>(g->k) + 1, 0.0);
        geg[static_cast<std::size_t>(g->k)] += primal[i];
      } else {
        ext.emplace_back(&spec.functions[i], primal[i]);
      }
    }
    c = primal[spec.functions.size()];
  }

  double operator()(double t) const {
    double s = c;
    if (!geg.empty()) s += geg[0];
    if (geg.size() > 1) s += geg[1] * t;
    double gkm1 = 1.0, gk = t;
    for (std::size_t k = 2; k < geg.size(); ++k) {
      double kk = static_cast<double>(k);
      double g = ((2.0 * kk + n - 4.0) * t * gk - (kk - 1.0) * gkm1) / (kk + n - 3.0);
      gkm1 = gk;
      gk = g;
      s += geg[k] * g;
    }
    for (const auto& [fn, x] : ext) s += x * basis_fn_eval(*fn, t);
    return s;
  }
};

// Large grids go through the LP dual. The primal packs one row per node, and
// once the Gegenbauer columns span nine orders of magnitude (n around 25)
// its simplex path crawls through tens of thousands of degenerate pivots or
// returns a basis too ill-conditioned to extract. The dual swaps the shape:
// one variable per node, one row per basis function. Eliminating the weight
// at t = 1 via the normalization row leaves
//
//   max sum_j y_j   s.t.  sum_j (f_i(1) - f_i(t_j)) y_j <= f_i(1)  for all i,
//                         sum_j y_j <= 1,   y >= 0,
//
// with optimum 1 - c*. Every basis is (K+1)x(K+1), the start is strictly
// feasible, and a few hundred pivots settle what the primal could not. The
// primal coefficients come back from the support by complementary slackness:
// f(t_j) + c = 0 on support nodes, f(1) + c = 1 while mass remains at t = 1,
// solved as a small least-squares system with negative coefficients pruned.
LpSolution solve_via_dual(const BasisSpec& spec, const Grid& grid, Exec exec) {
  const std::vector<double>& nodes = grid.nodes;
  const std::size_t s = nodes.size();
  const std::size_t K = spec.functions.size();
  if (K == 0) return solve_max(build_lp(spec, grid), exec);

  // per-function values at every node; Gegenbauer entries share one
  // recurrence pass per node
  std::vector<int> gdeg(K, -1);
  int max_deg = 0;
  for (std::size_t i = 0; i < K; ++i)
    if (const auto* g = std::get_if<Gegenbauer>(&spec.functions[i])) {
      gdeg[i] = g->k;
      max_deg = std::max(max_deg, g->k);
    }
  std::vector<std::vector<double>> vals(K, std::vector<double>(s));
  std::vector<double> G(static_cast<std::size_t>(max_deg) + 1, 1.0);
  for (std::size_t j = 0; j < s; ++j) {
    double t = nodes[j];
    if (max_deg >= 1) G[1] = t;
    for (int d = 2; d <= max_deg; ++d)
      G[d] = ((2.0 * d + spec.n - 4.0) * t * G[d - 1] - (d - 1.0) * G[d - 2]) /
             (d + spec.n - 3.0);
    for (std::size_t i = 0; i < K; ++i)
      vals[i][j] =
          gdeg[i] >= 0 ? G[gdeg[i]] : basis_fn_eval(spec.functions[i], t);
  }
  std::vector<double> at_one(K);
  for (std::size_t i = 0; i < K; ++i)
    at_one[i] = gdeg[i] >= 0 ? 1.0 : basis_fn_eval(spec.functions[i], 1.0);

  LinearProgram dual;
  dual.objective.assign(s, 1.0);
  dual.nonnegative.assign(s, true);
  dual.rows.reserve(K + 1);
  for (std::size_t i = 0; i < K; ++i) {
    std::vector<double> row(s);
    for (std::size_t j = 0; j < s; ++j) row[j] = at_one[i] - vals[i][j];
    dual.rows.push_back(std::move(row));
    dual.rhs.push_back(at_one[i]);
  }
  dual.rows.emplace_back(s, 1.0);
  dual.rhs.push_back(1.0);
  // the dual data is uniformly O(1) and its bases stay square in the basis
  // count, so pricing can afford to chase reduced costs down to roundoff;
  // the default tolerance would leave ~1e-11 of the optimum unclaimed,
  // which the reciprocal 1/c* magnifies into whole counts once c* ~ 1e-6
  dual.pricing_tol = 1e-13;

  LpSolution dsol = solve_max(dual, exec);
  if (dsol.status != LpStatus::Optimal) return dsol;

  std::vector<std::size_t> sup;
  double mass = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    mass += dsol.primal[j];
    if (dsol.primal[j] > 1e-11) sup.push_back(j);
  }
  const bool mass_at_one = mass < 1.0 - 1e-11;

  LpSolution out;
  out.iterations = dsol.iterations;
  const int rows_n = static_cast<int>(sup.size()) + (mass_at_one ? 1 : 0);

  // the row multipliers of the dual ARE the primal coefficients (and the cap
  // row's multiplier is the slack of the f(1) + c <= 1 constraint)
  const std::vector<double>& mult = dsol.row_duals;
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < K; ++i)
    if (mult[i] > 1e-10) act.push_back(i);

  auto validate = [&](std::vector<double> cand, const char* tag) -> bool {
    ComboEval f(spec, cand);
    double viol = f(1.0) - 1.0;
    for (std::size_t j = 0; j < s; ++j) viol = std::max(viol, f(nodes[j]));
    double gap = std::abs((1.0 - dsol.objective_value) - cand[K]);
    if (std::getenv("DELSARTE_TRACE_DUAL"))
      std::fprintf(stderr,
                   "[dual %s] iters=%d dobj=%.15e sup=%zu at1=%d act=%zu "
                   "c=%.15e viol=%.3e gap=%.3e\n",
                   tag, dsol.iterations, dsol.objective_value, sup.size(),
                   static_cast<int>(mass_at_one), act.size(), cand[K], viol,
                   gap);
    if (viol > 1e-9 || gap > 1e-7) return false;
    out.primal = std::move(cand);
    out.objective_value = out.primal[K];
    out.status = LpStatus::Optimal;
    return true;
  };

  // preferred: re-solve the support system f(t_j) + c = 0 (plus f(1) + c = 1
  // while mass remains at t = 1) from pristine data; the raw multipliers
  // carry the accumulated roundoff of every pivot, this system does not.
  // Degenerate optima can leave it underdetermined — skipped then.
  std::vector<std::size_t> ls = act;
  while (!ls.empty() && rows_n >= static_cast<int>(ls.size()) + 1) {
    Eigen::MatrixXd A(rows_n, ls.size() + 1);
    Eigen::VectorXd b(rows_n);
    int r = 0;
    for (std::size_t j : sup) {
      for (std::size_t a = 0; a < ls.size(); ++a) A(r, a) = vals[ls[a]][j];
      A(r, ls.size()) = 1.0;
      b(r++) = 0.0;
    }
    if (mass_at_one) {
      for (std::size_t a = 0; a < ls.size(); ++a) A(r, a) = at_one[ls[a]];
      A(r, ls.size()) = 1.0;
      b(r++) = 1.0;
    }
    Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
    int worst = -1;
    double w = -1e-12;
    for (std::size_t a = 0; a < ls.size(); ++a)
      if (coef(a) < w) {
        w = coef(a);
        worst = static_cast<int>(a);
      }
    if (worst >= 0) {
      ls.erase(ls.begin() + worst);
      continue;
    }
    std::vector<double> cand(K + 1, 0.0);
    for (std::size_t a = 0; a < ls.size(); ++a)
      cand[ls[a]] = std::max(0.0, coef(static_cast<int>(a)));
    cand[K] = coef(static_cast<int>(ls.size()));
    if (validate(std::move(cand), "refined")) return out;
    break;
  }

  // fallback: the multipliers as the tableau left them
  std::vector<double> cand(K + 1, 0.0);
  cand[K] = 1.0 - mult[K];
  for (std::size_t i = 0; i < K; ++i) {
    cand[i] = mult[i];
    cand[K] -= at_one[i] * mult[i];
  }
  if (validate(std::move(cand), "multipliers")) return out;

  out.status = LpStatus::NumericalTrouble;
  out.diagnostic = "dual recovery fails feasibility";
  return out;
}

}  // namespace

BoundResult cardinality_bound(const BasisSpec& spec, const BoundOptions& opts) {
  validate_spec(spec);
  BoundResult out;

  Grid grid = make_grid(spec.alpha_deg, opts.grid_size, spec);
  LpSolution sol = grid.nodes.size() <= 1024
                       ? solve_max(build_lp(spec, grid), opts.exec)
                       : solve_via_dual(spec, grid, opts.exec);
  if (sol.status != LpStatus::Optimal) {
    out.diagnostics = "LP search failed: " +
                      (sol.diagnostic.empty() ? std::string("not optimal")
                                              : sol.diagnostic);
    return out;
  }
  out.lp_objective = sol.objective_value;
  if (sol.objective_value <= 0) {
    out.diagnostics = "LP optimum is nonpositive: basis proves no bound";
    return out;
  }

  Certificate cert;
  cert.n = spec.n;
  cert.alpha_deg = spec.alpha_deg;
  for (std::size_t i = 0; i < spec.functions.size(); ++i) {
    Rational c = round_decimal(Rational(sol.primal[i]), opts.round_digits);
    if (c <= 0) continue;  // LP zeros and clipped 1e-10-scale noise
    cert.entries.push_back({spec.functions[i], c});
  }

  VerifyOptions vopts;
  vopts.max_depth = opts.max_depth;
  vopts.max_cells = opts.max_cells;
  vopts.exec = opts.exec;
  VerifyReport report = verify(cert, vopts);
  if (!report.valid()) {
    out.diagnostics = "certification failed: " + report.as_invalid().reason;
    out.certificate = std::move(cert);
    return out;
  }
  const VerifyValid& v = report.as_valid();
  out.certified = true;
  out.bound = v.proved_bound;
  out.c_star = v.c_star;
  cert.claimed_bound = static_cast<long>(v.proved_bound.get_si());
  out.certificate = std::move(cert);
  return out;
}

namespace {

BasisSpec angle_spec(int n, const Rational& alpha_deg, const AngleOptions& opts) {
  BasisSpec spec;
  spec.n = n;
  spec.alpha_deg = alpha_deg;
  for (int k = 1; k <= opts.max_degree; ++k)
    spec.functions.push_back(Gegenbauer{n, k});
  if (opts.use_f_alpha) {
    Rational z = cos_deg_fixed(alpha_deg);
    if (z >= 0) spec.functions.push_back(FAlpha{z});
  }
  return spec;
}

}  // namespace

AngleResult max_angle_bound(int n, long N, const AngleOptions& opts) {
  AngleResult out;
  if (N < 2) {
    out.diagnostics = "need at least 2 points";
    return out;
  }
  if (opts.precision_deg < Rational(1, 1000)) {
    out.diagnostics = "precision below 0.001 degrees is not supported";
    return out;
  }

  // alpha lattice: i * precision_deg, searched by bisection. The predicate
  // "certified bound <= N-1" is monotone in alpha up to LP noise; since
  // every accepted angle is individually certified, a non-monotone blip can
  // only make the answer conservative, never wrong.
  Rational step = opts.precision_deg;
  long i_hi;
  {
    Rational q = 120 / step;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    i_hi = fl.get_si();
  }

  auto probe = [&](long i) -> BoundResult {
    return cardinality_bound(angle_spec(n, i * step, opts), opts.bound);
  };

  BoundResult at_hi = probe(i_hi);
  if (!at_hi.certified || at_hi.bound > N - 1) {
    out.diagnostics = "no angle up to 120 degrees excludes " + std::to_string(N) +
                      " points with this basis";
    return out;
  }

  long lo = 0;  // conceptual "not excluded"; never probed
  long hi = i_hi;
  BoundResult best = std::move(at_hi);
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    BoundResult r = probe(mid);
    if (r.certified && r.bound <= N - 1) {
      hi = mid;
      best = std::move(r);
    } else {
      lo = mid;
    }
  }

  out.found = true;
  out.angle_deg = hi * step;
  out.bound = best.bound;
  out.certificate = std::move(best.certificate);
  return out;
}

}  // namespace delsarte
