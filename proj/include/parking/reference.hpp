#pragma once

// Serial reference implementations: straight top-down memoized recursion on
// the unrearranged recurrences, no sweeps, no threads. Kept as the baseline
// the parallel engines are tested and benchmarked against.

#include <vector>

#include "parking/exactalg.hpp"

namespace parking::reference {

// p(n,a) = sum_{k=0..n} C(n,k) p(n-k, a+k-1)
Int count(unsigned n, unsigned a);

// Q(n,a)(x) = sum_{k=0..n} C(n,k) x^{k(k+2a-3)/2} Q(n-k, a+k-1)(x)
PolyX area_genfun(unsigned n, unsigned a);

// Q^(i)(n,a)(1), i = 0..order, by the Leibniz rule with falling factorials
//   J_i(n,a) = J_i(n,a-1) + sum_k C(n,k) sum_t C(i,t) e_k^(t) J_{i-t}(n-k,a+k-1).
std::vector<Int> jet_leibniz(unsigned n, unsigned a, unsigned order);

}  // namespace parking::reference
