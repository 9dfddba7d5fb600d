#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "delsarte/parallel.hpp"
#include "delsarte/polynomial.hpp"

namespace delsarte {

inline constexpr int kMaxBernsteinDegree = 64;

// Exact Bernstein coefficients of p on iv. b[0] = p(iv.lo), b[d] = p(iv.hi),
// and max(b) bounds p from above on iv.
std::vector<Rational> to_bernstein(const Polynomial& p, const Interval& iv,
                                   int max_degree = kMaxBernsteinDegree);

// de Casteljau split at the parameter midpoint. left/right receive the
// Bernstein coefficients of the two halves; left.back() == right.front() is
// the exact value at the midpoint.
void subdivide_bernstein(const std::vector<Rational>& b,
                         std::vector<Rational>& left,
                         std::vector<Rational>& right);

struct Certified {
  Rational margin;  // p <= -margin on the interval, margin >= 0
};
struct Violated {
  Rational point;
  Rational value;  // p(point) == value > 0, exact
};
struct Inconclusive {
  int depth_reached;
};
using CertifyOutcome = std::variant<Certified, Violated, Inconclusive>;

// Rigorously decides p <= 0 on iv by Bernstein-coefficient sign tests with
// midpoint bisection. Certified is sound (never returned unless p <= 0 holds
// everywhere on iv); Violated carries an exactly-evaluated witness;
// Inconclusive means the depth budget ran out.
CertifyOutcome certify_nonpositive(const Polynomial& p, const Interval& iv,
                                   int max_depth = 40,
                                   Exec exec = default_exec());

// One domain piece of a piecewise-polynomial upper envelope. The function
// being bounded satisfies f(t) <= min over branches of branch(t) on iv;
// with a single branch the bound is exact.
struct SupPiece {
  Interval iv;
  std::vector<Polynomial> branches;
};

struct SupOptions {
  int max_depth = 40;
  long max_cells = 500000;
  Exec exec = default_exec();
  // Called with the current certified upper bound U and the best exact
  // point value L (L <= sup <= U); refinement stops once it returns true.
  std::function<bool(const Rational& upper, const Rational& lower)> gap_ok;
  // Exact evaluator of the true function. When set, a positive point value
  // of the envelope is re-checked through it before being reported as a
  // witness (the envelope may exceed the function on breakpoint slivers).
  std::function<Rational(const Rational&)> true_eval;
};

struct SupResult {
  enum class Status { Bounded, PositiveWitness, Inconclusive };
  Status status = Status::Inconclusive;
  Rational upper;          // certified: f <= upper everywhere (when Bounded)
  Rational lower;          // largest exact envelope value seen
  Rational witness_point;  // when PositiveWitness
  Rational witness_value;  // true function value at witness_point, > 0
  int max_depth_reached = 0;
  long cells_processed = 0;
};

// Branch-and-bound upper bound for a piecewise envelope: maintains a
// priority queue of Bernstein cells, always refining the cell with the
// largest coefficient bound. Serial and OpenMP drivers share the per-cell
// arithmetic and agree on all certified quantities.
SupResult certified_sup(const std::vector<SupPiece>& pieces, const SupOptions& opts);
SupResult certified_sup_serial(const std::vector<SupPiece>& pieces, const SupOptions& opts);
SupResult certified_sup_parallel(const std::vector<SupPiece>& pieces, const SupOptions& opts);

}  // namespace delsarte
