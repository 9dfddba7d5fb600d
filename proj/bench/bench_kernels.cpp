// Timing comparison of the OpenMP kernels against their serial reference
// implementations, on the workloads that dominate real runs:
//
//   - certified_sup (Bernstein branch-and-bound), driven through verify()
//     on the two largest embedded certificates
//   - the simplex tableau update, driven through cardinality_bound()
//
// The serial variants are the reference: the LP kernel must match them
// bitwise (row updates are independent, so the pivot sequence is
// identical), the subdivision kernel must certify the same integer bound.
// Any disagreement makes the run exit nonzero.

#include <chrono>
#include <cstdio>
#include <string>

#include "delsarte/bounds.hpp"
#include "delsarte/certify.hpp"
#include "delsarte/lpsolve.hpp"
#include "delsarte/parallel.hpp"

using namespace delsarte;

namespace {

constexpr int kReps = 5;
int failures = 0;

template <class F>
double best_of(F&& body) {
  double best = 1e300;
  for (int r = 0; r < kReps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (dt < best) best = dt;
  }
  return best;
}

void report(const std::string& name, double serial, double openmp, bool agree,
            const std::string& result) {
  std::printf("%-34s %9.4fs %9.4fs %6.2fx  %s  %s\n", name.c_str(), serial,
              openmp, serial / openmp, agree ? "agree   " : "DISAGREE",
              result.c_str());
  if (!agree) ++failures;
}

const Certificate* kissing_certificate(int n) {
  for (const Certificate& c : builtin_certificates())
    if (c.n == n && c.alpha_deg == 60) return &c;
  return nullptr;
}

void bench_verify(int n) {
  const Certificate* cert = kissing_certificate(n);
  if (!cert) {
    std::printf("no embedded kissing certificate for n=%d\n", n);
    ++failures;
    return;
  }
  VerifyOptions opts;
  VerifyReport rs, rp;
  opts.exec = Exec::Serial;
  double ts = best_of([&] { rs = verify(*cert, opts); });
  opts.exec = Exec::OpenMP;
  double tp = best_of([&] { rp = verify(*cert, opts); });
  // the two drivers explore cells in different order, so the exact sup
  // brackets may differ in low bits; the certified integer must not
  bool agree = rs.valid() && rp.valid() &&
               rs.as_valid().proved_bound == rp.as_valid().proved_bound;
  std::string result =
      rs.valid() ? "bound " + rs.as_valid().proved_bound.get_str() : "invalid";
  report("verify kissing n=" + std::to_string(n), ts, tp, agree, result);
}

BasisSpec kissing_spec(int n, int degree) {
  BasisSpec spec;
  spec.n = n;
  spec.alpha_deg = Rational(60);
  for (int k = 1; k <= degree; ++k) spec.functions.push_back(Gegenbauer{n, k});
  return spec;
}

// the simplex tableau update on its own: same LP, both drivers. Row
// eliminations are independent of each other, so the OpenMP kernel follows
// the exact pivot sequence of the serial one — bitwise agreement required.
void bench_simplex(int n, int degree, int grid) {
  BasisSpec spec = kissing_spec(n, degree);
  LinearProgram lp = build_lp(spec, make_grid(spec.alpha_deg, grid, spec));
  LpSolution ss, sp;
  double ts = best_of([&] { ss = solve_max(lp, Exec::Serial); });
  double tp = best_of([&] { sp = solve_max(lp, Exec::OpenMP); });
  bool agree = ss.status == LpStatus::Optimal && sp.status == ss.status &&
               sp.iterations == ss.iterations &&
               sp.objective_value == ss.objective_value &&
               sp.primal == ss.primal;
  report("simplex n=" + std::to_string(n) + " deg " + std::to_string(degree) +
             " grid " + std::to_string(grid),
         ts, tp, agree,
         ss.status == LpStatus::Optimal
             ? std::to_string(ss.iterations) + " pivots"
             : "not optimal");
}

// full bound pipeline (dual LP + rounding + certification); the certified
// integer must agree, the sup brackets underneath may differ in low bits
void bench_bound(int n, int degree, int grid) {
  BasisSpec spec = kissing_spec(n, degree);
  BoundOptions opts;
  opts.grid_size = grid;
  opts.round_digits = 14;
  BoundResult bs, bp;
  opts.exec = Exec::Serial;
  double ts = best_of([&] { bs = cardinality_bound(spec, opts); });
  opts.exec = Exec::OpenMP;
  double tp = best_of([&] { bp = cardinality_bound(spec, opts); });
  bool agree = bs.certified && bp.certified && bs.bound == bp.bound;
  std::string result =
      bs.certified ? "bound " + bs.bound.get_str() : "uncertified";
  report("bound n=" + std::to_string(n) + " deg " + std::to_string(degree) +
             " grid " + std::to_string(grid),
         ts, tp, agree, result);
}

}  // namespace

int main() {
  std::printf("threads available: %d (best of %d runs each)\n", max_threads(),
              kReps);
  std::printf("%-34s %10s %10s %7s\n", "workload", "serial", "openmp",
              "speedup");

  bench_verify(25);
  bench_verify(26);
  bench_simplex(17, 30, 1024);
  bench_bound(17, 30, 50000);
  bench_bound(25, 30, 150000);

  if (failures) {
    std::printf("%d workload(s) disagreed with the serial reference\n",
                failures);
    return 1;
  }
  return 0;
}
