#pragma once

// Moments of the Airy (Brownian excursion area) law and the comparison of
// E_k(n)/n^(3k/2) against them.

#include <string>
#include <vector>

#include "parking/bigfloat.hpp"
#include "parking/exactalg.hpp"

namespace parking {

/// e_k = r * (2 pi)^(h/2), with h = k mod 2.
struct AiryMoment {
  unsigned k = 0;
  Rat r;
  unsigned h = 0;

  BigFloat value(mpfr_prec_t bits = BigFloat::kDefaultBits) const;
  std::string to_string() const;  // "5/12" or "15/128*sqrt(2*pi)"
  friend bool operator==(const AiryMoment&, const AiryMoment&) = default;
};

// e_1..e_K via e_k = 4 sqrt(pi) 2^(-k/2) k! K_k / Gamma((3k-1)/2), where
// K_0 = -1/2 and K_k = (3k-4)/4 K_{k-1} + sum_{j=1..k-1} K_j K_{k-j}.
std::vector<AiryMoment> airy_moments(unsigned K);

struct AsymptoticRow {
  unsigned k = 0;
  unsigned n = 0;
  Rat moment;             // E_k(n, 1), exact
  std::string ratio;      // E_k(n) / (e_k n^(3k/2))
  std::string deviation;  // |ratio - 1|
  double deviation_value = 0;
};

struct AsymptoticSummary {
  unsigned k = 0;
  bool decreasing = false;       // strictly along the grid
  bool below_threshold = false;  // at the largest grid point
};

struct AsymptoticReport {
  unsigned K = 0;
  std::vector<unsigned> grid;
  double threshold = 0.25;
  std::vector<AsymptoticRow> rows;  // k outer, n inner
  std::vector<AsymptoticSummary> per_k;

  bool all_pass() const;
};

struct AsymptoticOptions {
  int threads = 1;
  double threshold = 0.25;
  unsigned digits = 20;
};

AsymptoticReport asymptotic_check(unsigned K, const std::vector<unsigned>& grid, const AsymptoticOptions& opts = {});

}  // namespace parking
