#pragma once

// Anti-diagonal driver shared by the counting, polynomial and jet engines.
//
// Every recurrence here has the shape
//   V(m, b) = V(m, b-1) + sum_{k=1..m} C(m,k) * w(k, b) * V(m-k, b+k-1)
// and both referenced states sit on anti-diagonal m + b - 1. Diagonal s is
// therefore a pure function of diagonal s-1: its cells are computed in
// parallel and only two diagonals are ever alive.

#include <algorithm>
#include <cstddef>
#include <vector>

#include <omp.h>

#include "parking/exactalg.hpp"

namespace parking {

struct SweepOptions {
  int threads = 1;
  // Cap on big integers resident at once (two diagonals); 0 disables it.
  std::uint64_t budget = 0;
};

/// Read-only view of the previous anti-diagonal, indexed by the length m.
template <class Value>
class PrevDiagonal {
 public:
  PrevDiagonal(const std::vector<Value>& cells, unsigned diag) : cells_(cells), diag_(diag) {}

  // State (m, diag - m).
  const Value& at(unsigned m) const { return cells_[m]; }
  unsigned diag() const { return diag_; }
  std::size_t size() const { return cells_.size(); }

 private:
  const std::vector<Value>& cells_;
  unsigned diag_;
};

/// Pascal rows 0..n_max, shared read-only by all kernels.
class BinomialRows {
 public:
  explicit BinomialRows(unsigned n_max) : rows_(n_max + 1) {
    for (unsigned n = 0; n <= n_max; ++n) {
      rows_[n].resize(n + 1);
      for (unsigned k = 0; k <= n; ++k) rows_[n][k] = binomial(n, k);
    }
  }
  const Int& operator()(unsigned n, unsigned k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<Int>> rows_;
};

/// Visits states (m, b), 0 <= m <= n_max, b >= 0, m + b <= diag_max, one
/// anti-diagonal at a time. `kernel(m, b, prev)` returns the value of (m, b)
/// from the previous diagonal; `sink(m, b, value)` sees every state serially,
/// in increasing (m + b, m) order, so sinks observe a thread-count
/// independent sequence.
template <class Value, class Kernel, class Sink>
void antidiagonal_sweep(unsigned n_max, unsigned diag_max, Kernel&& kernel, Sink&& sink, int threads) {
  std::vector<Value> prev, cur;
  const int nt = std::max(1, threads);
  for (unsigned s = 0; s <= diag_max; ++s) {
    const unsigned width = std::min(s, n_max) + 1;
    cur.assign(width, Value{});
    const PrevDiagonal<Value> view(prev, s == 0 ? 0 : s - 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt) if (nt > 1 && width > 1)
    for (int m = 0; m < static_cast<int>(width); ++m) {
      const auto um = static_cast<unsigned>(m);
      cur[um] = kernel(um, s - um, view);
    }
    for (unsigned m = 0; m < width; ++m) sink(m, s - m, static_cast<const Value&>(cur[m]));
    std::swap(prev, cur);
  }
}

// Recurrence exponent k(k+2b-3)/2 of the area generating function; an
// integer for every k >= 1, b >= 1.
inline std::size_t area_shift(unsigned k, unsigned b) {
  return static_cast<std::size_t>(k) * (k + 2 * static_cast<std::size_t>(b) - 3) / 2;
}

}  // namespace parking
