#pragma once

// Area/sum generating polynomials and derivative jets at x = 1.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "parking/exactalg.hpp"
#include "parking/sweep.hpp"

namespace parking {

/// Q(n,a)(x): coefficient of x^m counts a-parking functions of length n
/// with area m.
struct AreaGenFun {
  unsigned n = 0;
  unsigned a = 0;
  PolyX poly;
};

/// (Q(1), Q'(1), ..., Q^(K)(1)) for one state.
struct JetAtOne {
  unsigned n = 0;
  unsigned a = 0;
  unsigned order = 0;
  std::vector<Int> values;
};

// Two-diagonal coefficient footprint of the polynomial sweep up to (n, a).
std::uint64_t genfun_footprint(unsigned n, unsigned a);

// Q(n,a)(x) = Q(n,a-1)(x) + sum_{k=1..n} C(n,k) x^{k(k+2a-3)/2} Q(n-k,a+k-1)(x)
// with Q(0,a) = 1 and Q(n,0) = 0. Throws BudgetExceeded when
// opts.budget != 0 and the footprint exceeds it.
AreaGenFun area_genfun(unsigned n, unsigned a, const SweepOptions& opts = {});

// Q(n, a) for every a in 1..a_max, from a single sweep.
// Visits Q(n,1), ..., Q(n,a_max) in order of a from a single sweep; only two
// diagonals stay resident.
void area_genfun_stream(unsigned n, unsigned a_max, const std::function<void(const AreaGenFun&)>& visit,
                        const SweepOptions& opts = {});
std::vector<AreaGenFun> area_genfun_family(unsigned n, unsigned a_max, const SweepOptions& opts = {});

// P(n,a)(x) = x^{(2a+n-1)n/2} Q(n,a)(1/x).
PolyX sum_genfun(unsigned n, unsigned a, const SweepOptions& opts = {});
PolyX sum_from_area(const AreaGenFun& q);

// Falling-factorial sums sum_m c_m m(m-1)...(m-i+1) of a polynomial, i = 0..K.
std::vector<Int> falling_factorial_sums(const PolyX& p, unsigned order);

/// Jets of Q(n', a') at x = 1 for every 0 <= n' <= n_max, 0 <= a' <= a_max,
/// computed from the differentiated recurrence without building any
/// polynomial.
class JetTable {
 public:
  JetTable(unsigned n_max, unsigned a_max, unsigned order, const SweepOptions& opts = {});

  const JetAtOne& get(unsigned n, unsigned a) const;
  unsigned order() const { return order_; }

 private:
  unsigned n_max_, a_max_, order_;
  std::vector<JetAtOne> cells_;  // row-major over (n, a)
};

JetAtOne jet_at_one(unsigned n, unsigned a, unsigned order, const SweepOptions& opts = {});

}  // namespace parking
