#include "delsarte/lpsolve.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace delsarte {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;
constexpr double kStallEps = 1e-13;
constexpr int kStallLimit = 60;
constexpr int kMaxIterations = 100000;

struct Tableau {
  int m = 0;       // constraint rows
  int ncols = 0;   // structural + slack + artificial
  int W = 0;       // ncols + 1, last column is rhs
  int art_begin = 0;
  std::vector<double> T;     // m rows of width W
  std::vector<double> red;   // reduced-cost row, width W (last unused)
  std::vector<double> cost;  // current objective per column
  std::vector<int> basis;    // basic column per row
  Exec exec = Exec::Serial;
  double ptol = kPivotTol;   // entering-column reduced-cost threshold

  double* row(int i) { return T.data() + static_cast<std::size_t>(i) * W; }
  const double* row(int i) const {
    return T.data() + static_cast<std::size_t>(i) * W;
  }

  double objective_value() const {
    double z = 0;
    for (int i = 0; i < m; ++i) z += cost[basis[i]] * row(i)[ncols];
    return z;
  }

  void recompute_reduced_costs() {
    for (int j = 0; j <= ncols; ++j) red[j] = j < ncols ? cost[j] : 0.0;
    for (int i = 0; i < m; ++i) {
      double cb = cost[basis[i]];
      if (cb == 0.0) continue;
      const double* r = row(i);
      for (int j = 0; j < ncols; ++j) red[j] -= cb * r[j];
    }
  }

  void pivot(int lr, int ec) {
    double* pr = row(lr);
    double inv = 1.0 / pr[ec];
    for (int j = 0; j <= ncols; ++j) pr[j] *= inv;
    pr[ec] = 1.0;

    auto update_row = [&](int i) {
      if (i == lr) return;
      double* r = row(i);
      double f = r[ec];
      if (f == 0.0) return;
      for (int j = 0; j <= ncols; ++j) r[j] -= f * pr[j];
      r[ec] = 0.0;
    };
    if (exec == Exec::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (int i = 0; i < m; ++i) update_row(i);
    } else {
      for (int i = 0; i < m; ++i) update_row(i);
    }
    double f = red[ec];
    if (f != 0.0) {
      for (int j = 0; j <= ncols; ++j) red[j] -= f * pr[j];
      red[ec] = 0.0;
    }
    basis[lr] = ec;
  }

  // One simplex phase over columns [0, col_limit). Returns Optimal,
  // Unbounded or NumericalTrouble (iteration cap).
  LpStatus run(int col_limit, int& iterations) {
    recompute_reduced_costs();
    bool bland = false;
    int stall = 0;
    double best = objective_value();
    while (true) {
      int ec = -1;
      if (bland) {
        for (int j = 0; j < col_limit; ++j)
          if (red[j] > ptol) {
            ec = j;
            break;
          }
      } else {
        double most = ptol;
        for (int j = 0; j < col_limit; ++j)
          if (red[j] > most) {
            most = red[j];
            ec = j;
          }
      }
      if (ec < 0) return LpStatus::Optimal;

      // two-pass ratio test: find the min ratio, then break near-ties by
      // largest pivot magnitude (numerical stability) or, in Bland mode,
      // by smallest basis index (anti-cycling)
      double theta = 0;
      bool found = false;
      for (int i = 0; i < m; ++i) {
        double a = row(i)[ec];
        if (a <= kPivotTol) continue;
        double t = row(i)[ncols] / a;
        if (!found || t < theta) {
          theta = t;
          found = true;
        }
      }
      if (!found) return LpStatus::Unbounded;

      const double tie = theta + kStallEps + 1e-9 * std::abs(theta);
      int lr = -1;
      for (int i = 0; i < m; ++i) {
        double a = row(i)[ec];
        if (a <= kPivotTol) continue;
        if (row(i)[ncols] / a > tie) continue;
        if (lr < 0) {
          lr = i;
          continue;
        }
        if (bland ? basis[i] < basis[lr] : a > row(lr)[ec]) lr = i;
      }

      pivot(lr, ec);
      if (++iterations >= kMaxIterations) return LpStatus::NumericalTrouble;

      double z = objective_value();
      if (z > best + kStallEps) {
        best = z;
        stall = 0;
        bland = false;  // plateau escaped; Dantzig pricing again
      } else if (++stall >= kStallLimit) {
        // anti-cycling fallback while the degenerate plateau lasts; Bland
        // alone crawls on these LPs, so it is dropped on the next strict
        // improvement
        bland = true;
      }
    }
  }
};

}  // namespace

LpSolution solve_max(const LinearProgram& lp, Exec exec) {
  const int n = static_cast<int>(lp.objective.size());
  const int m = static_cast<int>(lp.rows.size());
  if (static_cast<int>(lp.rhs.size()) != m ||
      static_cast<int>(lp.nonnegative.size()) != n)
    throw std::invalid_argument("solve_max: inconsistent problem dimensions");
  for (const auto& r : lp.rows)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("solve_max: constraint row width mismatch");

  // split free variables into differences of nonnegative ones
  std::vector<int> pos_col(n), neg_col(n, -1);
  int nv = 0;
  for (int j = 0; j < n; ++j) pos_col[j] = nv++;
  for (int j = 0; j < n; ++j)
    if (!lp.nonnegative[j]) neg_col[j] = nv++;

  std::vector<bool> negate_row(m, false);
  int na = 0;
  for (int i = 0; i < m; ++i)
    if (lp.rhs[i] < 0) {
      negate_row[i] = true;
      ++na;
    }

  Tableau tb;
  tb.m = m;
  tb.ncols = nv + m + na;
  tb.W = tb.ncols + 1;
  tb.art_begin = nv + m;
  tb.T.assign(static_cast<std::size_t>(m) * tb.W, 0.0);
  tb.red.assign(tb.W, 0.0);
  tb.cost.assign(tb.ncols, 0.0);
  tb.basis.assign(m, 0);
  tb.exec = exec;
  tb.ptol = lp.pricing_tol;

  // split column -> original variable and sign, singleton column -> its row
  std::vector<int> var_of(nv), col_row(tb.ncols, -1);
  std::vector<double> sign_of(nv);
  for (int j = 0; j < n; ++j) {
    var_of[pos_col[j]] = j;
    sign_of[pos_col[j]] = 1.0;
    if (neg_col[j] >= 0) {
      var_of[neg_col[j]] = j;
      sign_of[neg_col[j]] = -1.0;
    }
  }

  int art = tb.art_begin;
  for (int i = 0; i < m; ++i) {
    double* r = tb.row(i);
    double sgn = negate_row[i] ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      double a = sgn * lp.rows[i][j];
      r[pos_col[j]] = a;
      if (neg_col[j] >= 0) r[neg_col[j]] = -a;
    }
    r[nv + i] = sgn;  // slack
    col_row[nv + i] = i;
    r[tb.ncols] = sgn * lp.rhs[i];
    if (negate_row[i]) {
      r[art] = 1.0;
      col_row[art] = i;
      tb.basis[i] = art++;
    } else {
      tb.basis[i] = nv + i;
    }
  }

  LpSolution sol;
  if (na > 0) {
    for (int j = tb.art_begin; j < tb.ncols; ++j) tb.cost[j] = -1.0;
    LpStatus st = tb.run(tb.ncols, sol.iterations);
    if (st == LpStatus::NumericalTrouble) {
      sol.status = st;
      sol.diagnostic = "iteration limit in phase 1";
      return sol;
    }
    if (st == LpStatus::Unbounded || tb.objective_value() < -kFeasTol) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    std::fill(tb.cost.begin(), tb.cost.end(), 0.0);
  }

  for (int j = 0; j < n; ++j) {
    tb.cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j] >= 0) tb.cost[neg_col[j]] = -lp.objective[j];
  }
  // artificial columns keep cost 0 and are barred from entering
  LpStatus st = tb.run(tb.art_begin, sol.iterations);
  if (st == LpStatus::NumericalTrouble) {
    sol.status = st;
    sol.diagnostic = "iteration limit in phase 2";
    return sol;
  }
  if (st == LpStatus::Unbounded) {
    sol.status = st;
    return sol;
  }

  // The tableau has been overwritten by every pivot, so the basic values it
  // holds carry the accumulated roundoff of the whole run.  The basis itself
  // is reliable; recover the solution by solving the tight square system
  // from the original data.  Slack/artificial basic columns are singletons,
  // so the system reduces to (structural basic cols) x (uncovered rows).
  std::vector<int> scols;
  std::vector<char> covered(m, 0);
  for (int i = 0; i < m; ++i) {
    int b = tb.basis[i];
    if (b < nv)
      scols.push_back(b);
    else
      covered[col_row[b]] = 1;
  }
  std::vector<int> trows;
  for (int i = 0; i < m; ++i)
    if (!covered[i]) trows.push_back(i);

  auto feasible = [&](const std::vector<double>& x, const char** why) {
    for (int i = 0; i < m; ++i) {
      double lhs = 0;
      for (int j = 0; j < n; ++j) lhs += lp.rows[i][j] * x[j];
      if (lhs > lp.rhs[i] + kFeasTol) {
        *why = "optimal basis fails residual check";
        return false;
      }
    }
    for (int j = 0; j < n; ++j)
      if (lp.nonnegative[j] && x[j] < -kFeasTol) {
        *why = "optimal basis fails nonnegativity check";
        return false;
      }
    return true;
  };

  // candidate 1: re-solve the tight square system from pristine data (the
  // tableau's own values carry the accumulated roundoff of every pivot)
  std::vector<double> repaired(n, 0.0);
  bool have_repaired = false;
  if (trows.size() == scols.size() && !scols.empty()) {
    const int k = static_cast<int>(scols.size());
    Eigen::MatrixXd B(k, k);
    Eigen::VectorXd rb(k);
    for (int a = 0; a < k; ++a) {
      int i = trows[a];
      rb(a) = lp.rhs[i];
      for (int b = 0; b < k; ++b)
        B(a, b) = sign_of[scols[b]] * lp.rows[i][var_of[scols[b]]];
    }
    auto lu = B.partialPivLu();
    Eigen::VectorXd x = lu.solve(rb);
    x += lu.solve(rb - B * x);  // one step of iterative refinement
    if (x.allFinite()) {
      for (int b = 0; b < k; ++b)
        repaired[var_of[scols[b]]] += sign_of[scols[b]] * x(b);
      have_repaired = true;
    }
  }

  // candidate 2: the values the tableau itself ended with
  std::vector<double> extracted(n, 0.0);
  {
    std::vector<double> vals(tb.ncols, 0.0);
    for (int i = 0; i < m; ++i) vals[tb.basis[i]] = tb.row(i)[tb.ncols];
    for (int j = 0; j < n; ++j) {
      extracted[j] = vals[pos_col[j]];
      if (neg_col[j] >= 0) extracted[j] -= vals[neg_col[j]];
    }
  }

  // Prefer the repaired vertex; when the tight system is too ill-conditioned
  // to pass the feasibility check, the tableau values may still be fine.
  const char* why = "";
  if (have_repaired && feasible(repaired, &why)) {
    sol.primal = std::move(repaired);
  } else if (feasible(extracted, &why)) {
    sol.primal = std::move(extracted);
  } else {
    sol.primal = std::move(extracted);
    sol.status = LpStatus::NumericalTrouble;
    sol.diagnostic = why;
    return sol;
  }
  sol.objective_value = 0;
  for (int j = 0; j < n; ++j) sol.objective_value += lp.objective[j] * sol.primal[j];

  // multiplier of row i = minus the reduced cost of its slack column (the
  // sign flips applied to negative-rhs rows cancel out of this identity)
  sol.row_duals.resize(m);
  for (int i = 0; i < m; ++i)
    sol.row_duals[i] = std::max(0.0, -tb.red[nv + i]);

  sol.status = LpStatus::Optimal;
  return sol;
}

}  // namespace delsarte
