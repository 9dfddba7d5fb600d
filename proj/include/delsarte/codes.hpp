#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace delsarte {

// N unit vectors on S^{n-1}; min_cos is the largest off-diagonal inner
// product (cos of the minimum angle), -1 when there are fewer than 2 points.
struct SphericalCode {
  int n = 0;
  std::vector<std::vector<double>> vectors;
  double min_cos = -1.0;
};

// symmetric with unit diagonal; PSD when built from an actual code
using GramMatrix = Eigen::MatrixXd;

GramMatrix gram(const SphericalCode& code);

// fixtures
SphericalCode simplex_code(int n);     // n+1 points, pairwise -1/n
SphericalCode cross_polytope(int n);   // 2n points, +/- e_i
SphericalCode icosahedron();           // 12 points in R^3

// Deterministic per seed: random unit vectors followed by pairwise
// repulsion until min_cos <= cos(alpha_deg). Empty on failure (the target
// separation may simply not be achievable for this N).
std::optional<SphericalCode> random_code(int n, int N, double alpha_deg,
                                         unsigned long seed);

// sum of fn over all Gram entries, diagonal included
double condition_i_sum(const std::function<double(double)>& fn,
                       const SphericalCode& code);

GramMatrix entrywise(const GramMatrix& M,
                     const std::function<double(double)>& fn);

double min_eigenvalue(const GramMatrix& M);
double gershgorin_lower(const GramMatrix& M);  // certified-style lower bound

// text format: first line "n N", then one whitespace-separated vector per line
void write_code(const std::string& path, const SphericalCode& code);
SphericalCode read_code(const std::string& path);

}  // namespace delsarte
