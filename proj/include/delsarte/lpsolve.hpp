#pragma once

#include <string>
#include <vector>

#include "delsarte/parallel.hpp"

namespace delsarte {

// max objective . x  subject to  rows[i] . x <= rhs[i], and x_j >= 0 for
// every j with nonnegative[j] (free otherwise).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<bool> nonnegative;  // one flag per variable
  // reduced-cost threshold below which a column no longer enters; callers
  // with well-scaled data can tighten this to squeeze the last digits out
  // of the optimum
  double pricing_tol = 1e-11;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalTrouble };

struct LpSolution {
  LpStatus status = LpStatus::NumericalTrouble;
  double objective_value = 0.0;
  std::vector<double> primal;
  std::string diagnostic;  // filled for NumericalTrouble
  int iterations = 0;
  // one multiplier per constraint row at optimality (empty otherwise);
  // these are the dual values, read off the terminal reduced costs
  std::vector<double> row_duals;
};

// Two-phase dense simplex. Dantzig pricing with a switch to Bland's rule
// after a stall, so cycling cannot occur. Free variables are split into
// differences of nonnegative ones. The returned primal is checked against
// every constraint (1e-9); violations are reported as NumericalTrouble,
// never as a silently wrong Optimal.
LpSolution solve_max(const LinearProgram& lp, Exec exec = default_exec());

}  // namespace delsarte
