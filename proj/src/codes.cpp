#include "delsarte/codes.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace delsarte {

namespace {

double max_offdiag_cos(const std::vector<std::vector<double>>& vs) {
  double worst = -1.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      double d = 0;
      for (std::size_t k = 0; k < vs[i].size(); ++k) d += vs[i][k] * vs[j][k];
      if (d > worst) worst = d;
    }
  return worst;
}

void normalize(std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s == 0) throw std::runtime_error("cannot normalize zero vector");
  for (double& x : v) x /= s;
}

SphericalCode finish(int n, std::vector<std::vector<double>> vs) {
  SphericalCode code;
  code.n = n;
  code.min_cos = vs.size() >= 2 ? max_offdiag_cos(vs) : -1.0;
  code.vectors = std::move(vs);
  return code;
}

// 53-bit uniform in [0,1) from a fixed engine, so results do not depend on
// library distribution internals
struct Rng {
  std::uint64_t state;
  explicit Rng(unsigned long seed) : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double gaussian() {
    double u1 = uniform(), u2 = uniform();
    while (u1 == 0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
};

}  // namespace

GramMatrix gram(const SphericalCode& code) {
  int N = static_cast<int>(code.vectors.size());
  GramMatrix M(N, N);
  for (int i = 0; i < N; ++i) {
    M(i, i) = 1.0;
    for (int j = i + 1; j < N; ++j) {
      double d = 0;
      for (int k = 0; k < code.n; ++k) d += code.vectors[i][k] * code.vectors[j][k];
      M(i, j) = M(j, i) = d;
    }
  }
  return M;
}

SphericalCode simplex_code(int n) {
  if (n < 2) throw std::invalid_argument("simplex_code: n >= 2");
  // e_i - centroid in R^{n+1}, normalized, then rotated so the all-ones
  // direction becomes the last axis, which is dropped
  Eigen::MatrixXd V(n + 1, n + 1);
  double c = 1.0 / (n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) V(i, j) = (i == j ? 1.0 : 0.0) - c;
  for (int i = 0; i <= n; ++i) V.row(i).normalize();

  Eigen::VectorXd u = Eigen::VectorXd::Constant(n + 1, 1.0 / std::sqrt(n + 1.0));
  Eigen::VectorXd w = u;
  w(n) -= 1.0;  // u - e_{n+1}
  double wn = w.norm();
  std::vector<std::vector<double>> vs(n + 1, std::vector<double>(n));
  for (int i = 0; i <= n; ++i) {
    Eigen::VectorXd x = V.row(i).transpose();
    if (wn > 1e-14) x -= 2.0 * (w.dot(x) / (wn * wn)) * w;
    for (int j = 0; j < n; ++j) vs[i][j] = x(j);
    normalize(vs[i]);
  }
  return finish(n, std::move(vs));
}

SphericalCode cross_polytope(int n) {
  if (n < 2) throw std::invalid_argument("cross_polytope: n >= 2");
  std::vector<std::vector<double>> vs;
  for (int i = 0; i < n; ++i)
    for (double s : {1.0, -1.0}) {
      std::vector<double> v(n, 0.0);
      v[i] = s;
      vs.push_back(v);
    }
  return finish(n, std::move(vs));
}

SphericalCode icosahedron() {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::vector<double>> vs;
  for (double a : {1.0, -1.0})
    for (double b : {phi, -phi}) {
      vs.push_back({0.0, a, b});
      vs.push_back({a, b, 0.0});
      vs.push_back({b, 0.0, a});
    }
  for (auto& v : vs) normalize(v);
  return finish(3, std::move(vs));
}

std::optional<SphericalCode> random_code(int n, int N, double alpha_deg,
                                         unsigned long seed) {
  if (n < 2 || N < 1) throw std::invalid_argument("random_code: n >= 2, N >= 1");
  Rng rng(seed);
  std::vector<std::vector<double>> vs(N, std::vector<double>(n));
  for (auto& v : vs) {
    for (double& x : v) x = rng.gaussian();
    normalize(v);
  }
  if (N == 1) return finish(n, std::move(vs));

  double target = std::cos(alpha_deg * M_PI / 180.0);
  const int cap = 4000;
  for (int it = 0; it < cap; ++it) {
    if (max_offdiag_cos(vs) <= target) return finish(n, std::move(vs));
    // push every offending pair apart along their difference
    std::vector<std::vector<double>> force(N, std::vector<double>(n, 0.0));
    double step = 0.25;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        double d = 0;
        for (int k = 0; k < n; ++k) d += vs[i][k] * vs[j][k];
        if (d <= target) continue;
        double w = step * (d - target) + 0.01;
        for (int k = 0; k < n; ++k) {
          force[i][k] += w * (vs[i][k] - vs[j][k]);
          force[j][k] += w * (vs[j][k] - vs[i][k]);
        }
      }
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < n; ++k) vs[i][k] += force[i][k];
      normalize(vs[i]);
    }
  }
  return std::nullopt;
}

double condition_i_sum(const std::function<double(double)>& fn,
                       const SphericalCode& code) {
  GramMatrix M = gram(code);
  double s = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) s += fn(M(i, j));
  return s;
}

GramMatrix entrywise(const GramMatrix& M,
                     const std::function<double(double)>& fn) {
  GramMatrix out(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out(i, j) = fn(M(i, j));
  return out;
}

double min_eigenvalue(const GramMatrix& M) {
  Eigen::SelfAdjointEigenSolver<GramMatrix> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double gershgorin_lower(const GramMatrix& M) {
  double lo = 0;
  for (int i = 0; i < M.rows(); ++i) {
    double radius = 0;
    for (int j = 0; j < M.cols(); ++j)
      if (j != i) radius += std::abs(M(i, j));
    double b = M(i, i) - radius;
    if (i == 0 || b < lo) lo = b;
  }
  return lo;
}

void write_code(const std::string& path, const SphericalCode& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_code: cannot open " + path);
  out.precision(17);
  out << code.n << ' ' << code.vectors.size() << '\n';
  for (const auto& v : code.vectors) {
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
    out << '\n';
  }
}

SphericalCode read_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_code: cannot open " + path);
  int n = 0, N = 0;
  if (!(in >> n >> N) || n < 1 || N < 0)
    throw std::runtime_error("read_code: bad header in " + path);
  std::vector<std::vector<double>> vs(N, std::vector<double>(n));
  for (auto& v : vs)
    for (double& x : v)
      if (!(in >> x)) throw std::runtime_error("read_code: truncated " + path);
  for (auto& v : vs) {
    double s = 0;
    for (double x : v) s += x * x;
    if (std::abs(std::sqrt(s) - 1.0) > 1e-6)
      throw std::runtime_error("read_code: vector is not unit length");
    normalize(v);
  }
  return finish(n, std::move(vs));
}

}  // namespace delsarte
