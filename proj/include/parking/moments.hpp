#pragma once

// Expectations, factorial moments and their conversions, scaled histograms.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "parking/exactalg.hpp"
#include "parking/genfun.hpp"

namespace parking {

// W_n = (n!/n^(n-1)) sum_{k=0..n-2} n^k/k!; W_1 = 0 (empty sum).
Rat w_value(unsigned n);

Rat expectation_area(unsigned n, unsigned a);
Rat expectation_sum(unsigned n, unsigned a);

// P'(n,a)(1) = a n (a+n-1)(a+n)^(n-1)/2 - (1/2) sum_j C(n,j) j! a (a+n)^(n-j)
Int p_prime_closed(unsigned n, unsigned a);

// E_k = Q^(k)(1) / Q(1), k = 1..order.
std::vector<Rat> factorial_moments(const JetAtOne& jet);
std::vector<Rat> factorial_moments(unsigned n, unsigned a, unsigned order, const SweepOptions& opts = {});

// Stirling numbers of the second kind from a cached triangle.
Int stirling2(unsigned j, unsigned k);

/// central_j / Var^(j/2), held exactly as the pair (central_j, j).
struct ScaledSplit {
  unsigned j = 0;
  Rat central;
  unsigned var_power_twice = 0;  // the exponent of Var, doubled
};

struct MomentTable {
  unsigned n = 0, a = 0, order = 0;
  // Entry i holds moment i+1.
  std::vector<Rat> factorial, raw, central;
  bool variance_zero = false;
  std::vector<ScaledSplit> scaled;  // empty when variance is zero or order < 2

  const Rat& mean() const { return raw.at(0); }
  const Rat& variance() const { return central.at(1); }
};

MomentTable convert_moments(std::span<const Rat> factorial);

// Decimal rendering of the j-th scaled moment (1-based).
std::string scaled_decimal(const MomentTable& t, unsigned j, unsigned precision);

struct ScaledRow {
  std::uint64_t area = 0;
  Int count;
  std::string x;        // (m - E) / sigma
  std::string density;  // count * sigma / total
};

struct ScaledHistogram {
  unsigned n = 0, a = 0;
  Int total;
  Rat mean, variance;
  std::vector<ScaledRow> rows;
};

// Requires positive variance (n >= 2).
ScaledHistogram scaled_histogram(const AreaGenFun& q, unsigned precision);
ScaledHistogram scaled_histogram(unsigned n, unsigned a, unsigned precision, const SweepOptions& opts = {});

}  // namespace parking
