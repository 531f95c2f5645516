#pragma once

// Definitions and brute-force ground truth for a-parking functions.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "parking/exactalg.hpp"

namespace parking {

using PrefVector = std::vector<unsigned>;

/// Raised when an enumeration or table would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Int required)
      : std::runtime_error(what), required_(std::move(required)) {}
  const Int& required() const { return required_; }

 private:
  Int required_;
};

// True iff the weakly increasing sort of v satisfies p_(i) <= a + i - 1.
bool is_a_parking(std::span<const unsigned> v, unsigned a);

std::uint64_t sum_stat(std::span<const unsigned> v);

// n(2a+n-1)/2 - Sum(v). Throws std::domain_error unless v is a-parking.
std::uint64_t area_stat(std::span<const unsigned> v, unsigned a);

// n(2a+n-1)/2, the Sum + Area constant.
std::uint64_t sum_plus_area(unsigned n, unsigned a);

// Largest attainable area, n(2a+n-3)/2 for n >= 1 (0 for n = 0).
std::uint64_t max_area(unsigned n, unsigned a);

struct AreaHistogram {
  unsigned n = 0;
  unsigned a = 1;
  std::map<std::uint64_t, Int> counts;  // only positive counts are stored

  Int total() const;
  friend bool operator==(const AreaHistogram&, const AreaHistogram&) = default;
};

struct BruteOptions {
  std::uint64_t budget = 10'000'000;  // max preference vectors visited
  int threads = 1;
};

// Number of vectors brute_histogram visits: (n+a-1)^n.
Int brute_vector_count(unsigned n, unsigned a);

/// Streams every vector of {1..n+a-1}^n in odometer order, tallying the area
/// of each a-parking one. Throws BudgetExceeded when (n+a-1)^n > budget.
AreaHistogram brute_histogram(unsigned n, unsigned a, const BruteOptions& opts = {});

}  // namespace parking
