#include "delsarte/bernstein.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace delsarte {

namespace {

std::vector<std::vector<Integer>> binomial_rows(int max_n) {
  std::vector<std::vector<Integer>> rows(max_n + 1);
  for (int i = 0; i <= max_n; ++i) {
    rows[i].resize(i + 1);
    rows[i][0] = 1;
    rows[i][i] = 1;
    for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows;
}

}  // namespace

std::vector<Rational> to_bernstein(const Polynomial& p, const Interval& iv,
                                   int max_degree) {
  int d = p.degree();
  if (d > max_degree)
    throw std::invalid_argument("to_bernstein: degree exceeds configured maximum");

  // q(u) = p(lo + (hi-lo) u) on [0,1]
  Polynomial q = p.compose_affine(iv.lo, iv.hi - iv.lo);
  auto binom = binomial_rows(d);
  std::vector<Rational> b(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) {
    Rational acc(0);
    for (int j = 0; j <= i && j <= q.degree(); ++j) {
      Rational w(binom[i][j], binom[d][j]);
      w.canonicalize();
      acc += q.coeff(j) * w;
    }
    b[i] = acc;
  }
  return b;
}

void subdivide_bernstein(const std::vector<Rational>& b,
                         std::vector<Rational>& left,
                         std::vector<Rational>& right) {
  int d = static_cast<int>(b.size()) - 1;
  left.assign(d + 1, Rational(0));
  right.assign(d + 1, Rational(0));
  std::vector<Rational> work = b;
  left[0] = work[0];
  right[d] = work[d];
  for (int r = 1; r <= d; ++r) {
    for (int i = 0; i <= d - r; ++i) {
      work[i] += work[i + 1];
      work[i] /= 2;
    }
    left[r] = work[0];
    right[d - r] = work[d - r];
  }
}

namespace {

struct Cell {
  Rational lo, hi;
  int depth = 0;
  std::vector<std::vector<Rational>> branches;
  Rational ub;
};

Rational cell_upper_bound(const std::vector<std::vector<Rational>>& branches) {
  Rational ub;
  bool first = true;
  for (const auto& b : branches) {
    Rational mx = *std::max_element(b.begin(), b.end());
    if (first || mx < ub) {
      ub = mx;
      first = false;
    }
  }
  return ub;
}

// heap priority: largest ub first, then leftmost cell
struct CellWorse {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.ub != b.ub) return a.ub < b.ub;
    return a.lo > b.lo;
  }
};

struct SplitResult {
  Cell left, right;
  Rational mid;
  Rational mid_value;  // exact envelope value at mid
};

SplitResult split_cell(const Cell& c) {
  SplitResult out;
  Rational mid = (c.lo + c.hi) / 2;
  out.mid = mid;
  out.left.lo = c.lo;
  out.left.hi = mid;
  out.right.lo = mid;
  out.right.hi = c.hi;
  out.left.depth = out.right.depth = c.depth + 1;
  out.left.branches.resize(c.branches.size());
  out.right.branches.resize(c.branches.size());
  bool first = true;
  for (std::size_t i = 0; i < c.branches.size(); ++i) {
    subdivide_bernstein(c.branches[i], out.left.branches[i], out.right.branches[i]);
    const Rational& v = out.left.branches[i].back();
    if (first || v < out.mid_value) {
      out.mid_value = v;
      first = false;
    }
  }
  out.left.ub = cell_upper_bound(out.left.branches);
  out.right.ub = cell_upper_bound(out.right.branches);
  return out;
}

struct Engine {
  const SupOptions& opts;
  std::vector<Cell> heap;
  CellWorse worse;
  bool has_retired = false;
  Rational retired_max;
  bool has_lower = false;
  Rational lower;
  SupResult res;
  bool done = false;

  explicit Engine(const SupOptions& o) : opts(o) {}

  void retire(const Rational& ub) {
    if (!has_retired || ub > retired_max) {
      retired_max = ub;
      has_retired = true;
    }
  }

  // exact envelope value v at point x; returns true when a decisive
  // positive witness ends the search
  bool note_value(const Rational& x, const Rational& v) {
    if (!has_lower || v > lower) {
      lower = v;
      has_lower = true;
    }
    if (v > 0) {
      Rational tv = opts.true_eval ? opts.true_eval(x) : v;
      if (tv > 0) {
        res.status = SupResult::Status::PositiveWitness;
        res.witness_point = x;
        res.witness_value = tv;
        done = true;
        return true;
      }
    }
    return false;
  }

  Rational current_upper() const {
    Rational u;
    bool first = true;
    if (!heap.empty()) {
      u = heap.front().ub;
      first = false;
    }
    if (has_retired && (first || retired_max > u)) {
      u = retired_max;
      first = false;
    }
    return u;
  }

  void init(const std::vector<SupPiece>& pieces) {
    if (pieces.empty())
      throw std::invalid_argument("certified_sup: requires at least one piece");
    for (const auto& piece : pieces) {
      if (piece.branches.empty())
        throw std::invalid_argument("certified_sup: piece without branches");
      Cell c;
      c.lo = piece.iv.lo;
      c.hi = piece.iv.hi;
      c.depth = 0;
      for (const auto& poly : piece.branches)
        c.branches.push_back(to_bernstein(poly, piece.iv));
      c.ub = cell_upper_bound(c.branches);

      Rational at_lo, at_hi;
      bool first = true;
      for (const auto& b : c.branches) {
        if (first || b.front() < at_lo) at_lo = b.front();
        if (first || b.back() < at_hi) at_hi = b.back();
        first = false;
      }
      if (note_value(c.lo, at_lo)) return;
      if (note_value(c.hi, at_hi)) return;

      heap.push_back(std::move(c));
      std::push_heap(heap.begin(), heap.end(), worse);
    }
  }

  // true when the main loop should stop before refining further
  bool should_stop() {
    if (done) return true;
    Rational u = current_upper();
    if (opts.gap_ok && has_lower && opts.gap_ok(u, lower)) {
      res.status = SupResult::Status::Bounded;
      res.upper = u;
      done = true;
      return true;
    }
    if (heap.empty() || res.cells_processed >= opts.max_cells) {
      res.status = u <= 0 ? SupResult::Status::Bounded
                          : SupResult::Status::Inconclusive;
      res.upper = u;
      done = true;
      return true;
    }
    return false;
  }

  Cell pop() {
    std::pop_heap(heap.begin(), heap.end(), worse);
    Cell c = std::move(heap.back());
    heap.pop_back();
    return c;
  }

  void push(Cell c) {
    heap.push_back(std::move(c));
    std::push_heap(heap.begin(), heap.end(), worse);
  }

  void finalize() {
    if (res.status == SupResult::Status::PositiveWitness) return;
    res.lower = has_lower ? lower : Rational(0);
  }
};

}  // namespace

SupResult certified_sup_serial(const std::vector<SupPiece>& pieces,
                               const SupOptions& opts) {
  Engine eng(opts);
  eng.init(pieces);
  while (!eng.should_stop()) {
    Cell c = eng.pop();
    if ((eng.has_lower && c.ub <= eng.lower) || c.depth >= opts.max_depth) {
      eng.retire(c.ub);
      continue;
    }
    SplitResult sr = split_cell(c);
    ++eng.res.cells_processed;
    if (sr.left.depth > eng.res.max_depth_reached)
      eng.res.max_depth_reached = sr.left.depth;
    if (eng.note_value(sr.mid, sr.mid_value)) break;
    eng.push(std::move(sr.left));
    eng.push(std::move(sr.right));
  }
  eng.finalize();
  return eng.res;
}

SupResult certified_sup_parallel(const std::vector<SupPiece>& pieces,
                                 const SupOptions& opts) {
  Engine eng(opts);
  eng.init(pieces);
  const int batch_target = std::max(2 * max_threads(), 8);
  std::vector<Cell> batch;
  std::vector<SplitResult> splits;
  while (!eng.should_stop()) {
    batch.clear();
    while (!eng.heap.empty() &&
           static_cast<int>(batch.size()) < batch_target &&
           eng.res.cells_processed + static_cast<long>(batch.size()) < opts.max_cells) {
      Cell c = eng.pop();
      if ((eng.has_lower && c.ub <= eng.lower) || c.depth >= opts.max_depth) {
        eng.retire(c.ub);
        continue;
      }
      batch.push_back(std::move(c));
    }
    if (batch.empty()) continue;  // should_stop resolves the empty-heap state

    splits.assign(batch.size(), SplitResult{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(batch.size()); ++i)
      splits[i] = split_cell(batch[i]);

    eng.res.cells_processed += static_cast<long>(batch.size());
    for (auto& sr : splits) {
      if (sr.left.depth > eng.res.max_depth_reached)
        eng.res.max_depth_reached = sr.left.depth;
      if (eng.note_value(sr.mid, sr.mid_value)) break;
      eng.push(std::move(sr.left));
      eng.push(std::move(sr.right));
    }
  }
  eng.finalize();
  return eng.res;
}

SupResult certified_sup(const std::vector<SupPiece>& pieces, const SupOptions& opts) {
  return opts.exec == Exec::Serial ? certified_sup_serial(pieces, opts)
                                   : certified_sup_parallel(pieces, opts);
}

CertifyOutcome certify_nonpositive(const Polynomial& p, const Interval& iv,
                                   int max_depth, Exec exec) {
  if (max_depth < 0)
    throw std::invalid_argument("certify_nonpositive: requires max_depth >= 0");
  SupOptions opts;
  opts.max_depth = max_depth;
  opts.exec = exec;
  opts.gap_ok = [](const Rational& upper, const Rational&) { return upper <= 0; };

  SupPiece piece{iv, {p}};
  SupResult res = certified_sup({piece}, opts);
  switch (res.status) {
    case SupResult::Status::Bounded:
      return Certified{-res.upper};
    case SupResult::Status::PositiveWitness:
      return Violated{res.witness_point, res.witness_value};
    case SupResult::Status::Inconclusive:
    default:
      return Inconclusive{res.max_depth_reached};
  }
}

}  // namespace delsarte
