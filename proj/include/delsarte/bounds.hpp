#pragma once

#include <string>
#include <vector>

#include "delsarte/certify.hpp"
#include "delsarte/funspace.hpp"
#include "delsarte/lpsolve.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

struct Grid {
  Rational z;                 // cos(alpha), the right endpoint
  std::vector<double> nodes;  // strictly increasing on [-1, cos(alpha)]
};

// Chebyshev-Lobatto nodes on [-1, cos(alpha)] plus every interior
// breakpoint of the spec's functions. s >= 16.
Grid make_grid(const Rational& alpha_deg, int s, const BasisSpec& spec);

// max c subject to  sum_i c_i f_i(1) + c <= 1,  sum_i c_i f_i(t_j) + c <= 0
// for every node, c_i >= 0, c free.
LinearProgram build_lp(const BasisSpec& spec, const Grid& grid);

struct BoundOptions {
  int grid_size = 2000;
  unsigned round_digits = 10;  // searched coefficients -> exact decimals
  int max_depth = 40;
  long max_cells = 500000;
  Exec exec = default_exec();
};

struct BoundResult {
  bool certified = false;
  Integer bound;           // floor(1/c_star) when certified
  Rational c_star;         // largest certified admissible c
  Certificate certificate; // claimed_bound set to the proved bound
  double lp_objective = 0; // the searched (floating, uncertified) c
  std::string diagnostics; // why certification failed, when it did
};

// LP search on the grid, round the coefficients to exact decimals, then
// certify the largest admissible c exactly. The discretization slack the
// grid leaves behind is absorbed by this post-hoc shrink.
BoundResult cardinality_bound(const BasisSpec& spec, const BoundOptions& opts = {});

struct AngleOptions {
  Rational precision_deg = Rational(1, 100);
  int max_degree = 15;      // Gegenbauer degrees 1..max_degree
  bool use_f_alpha = true;  // re-specialized to each tested angle (<= 90)
  BoundOptions bound;
};

struct AngleResult {
  bool found = false;
  Rational angle_deg;  // smallest tested angle that excludes N points
  Integer bound;       // certified bound at that angle (<= N-1)
  Certificate certificate;
  std::string diagnostics;
};

// Bisect on a lattice of precision_deg multiples for the smallest tested
// angle whose certified cardinality bound is <= N-1. Every reported angle
// comes from a full certified run, so the result is sound even if the
// bound is not monotone at LP precision.
AngleResult max_angle_bound(int n, long N, const AngleOptions& opts = {});

}  // namespace delsarte
