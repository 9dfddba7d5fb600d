#pragma once

#include "delsarte/polynomial.hpp"

namespace delsarte {

// Degree-k Gegenbauer polynomial for dimension n, normalized to 1 at t=1.
// G_0 = 1, G_1 = t, and
//   G_k = ((2k+n-4) t G_{k-1} - (k-1) G_{k-2}) / (k+n-3)
// Coefficients are exact rationals; results are memoized. Thread-safe.
const Polynomial& gegenbauer(int n, int k);

// Floating evaluation by running the same recurrence on values.
double gegenbauer_eval(int n, int k, double t);

}  // namespace delsarte
