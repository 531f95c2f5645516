#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parking/exactalg.hpp"

namespace parking {

/// p(n', a') for every state with n' + a' <= diag_max, stored as a flat
/// triangle of anti-diagonals and filled by the rearranged recurrence
///   p(n,a) = p(n,a-1) + sum_{k=1..n} C(n,k) p(n-k, a+k-1),
/// p(0,a) = 1, p(n,0) = 0 for n >= 1.
class CountMemo {
 public:
  explicit CountMemo(unsigned diag_max, int threads = 1);

  const Int& get(unsigned n, unsigned a) const;
  unsigned diag_max() const { return diag_max_; }

 private:
  unsigned diag_max_;
  std::vector<std::vector<Int>> diags_;  // diags_[s][n'], a' = s - n'
};

Int count(unsigned n, unsigned a, int threads = 1);

// a(a+n)^(n-1), with the n = 0 value 1.
Int closed_form_count(unsigned n, unsigned a);

// p_n(a) as a polynomial in a, by telescoping the recurrence over
// b = 1..a with exact summation of polynomial sequences.
SymPoly count_symbolic(unsigned n);

struct ClosedFormReport {
  bool ok = true;
  std::size_t points = 0;
  std::optional<std::pair<unsigned, unsigned>> failure;  // (n, a)
  std::string failing_check;
  // Both sides are polynomials in a of degree <= n, so n+1 values of a per n
  // settle the identity; "proved" needs a_max >= n_max + 1.
  bool proved = false;
  unsigned n_max = 0, a_max = 0;
};

/// Checks count(n,a) = a(a+n)^(n-1) and
///   a(a+n)^(n-1) = sum_{k=0..n} C(n,k) (a+k-1)(a+n-1)^(n-k-1)
/// on 1 <= n <= n_max, 1 <= a <= a_max.
ClosedFormReport verify_closed_form(unsigned n_max, unsigned a_max, int threads = 1);

}  // namespace parking
