#include "parking/parking_core.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace parking {

bool is_a_parking(std::span<const unsigned> v, unsigned a) {
  std::vector<unsigned> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] < 1 || sorted[i] > a + i) return false;
  return true;
}

std::uint64_t sum_stat(std::span<const unsigned> v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

std::uint64_t sum_plus_area(unsigned n, unsigned a) {
  return std::uint64_t{n} * (2ull * a + n - 1) / 2;
}

std::uint64_t max_area(unsigned n, unsigned a) {
  if (n == 0) return 0;
  return std::uint64_t{n} * (2ull * a + n - 3) / 2;
}

std::uint64_t area_stat(std::span<const unsigned> v, unsigned a) {
  if (!is_a_parking(v, a)) throw std::domain_error("area_stat: not an a-parking function");
  return sum_plus_area(static_cast<unsigned>(v.size()), a) - sum_stat(v);
}

Int AreaHistogram::total() const {
  Int t = 0;
  for (const auto& [m, c] : counts) t += c;
  return t;
}

Int brute_vector_count(unsigned n, unsigned a) { return pow_int(Int(n + a - 1), n); }

namespace {

// Tallies every vector whose first entry is `lead` (or the single empty/short
// cases when n <= 1). The last coordinate is swept inline against a sorted
// copy of the prefix, so each vector costs O(1) amortized.
void tally_lead(unsigned n, unsigned a, unsigned lead, std::vector<std::uint64_t>& hist) {
  const unsigned top = n + a - 1;
  const std::uint64_t base = sum_plus_area(n, a);
  const unsigned plen = n - 1;

  std::vector<unsigned> prefix(plen, 1);
  if (plen > 0) prefix[0] = lead;
  std::vector<unsigned> s(plen);
  std::vector<char> low_ok(plen + 1), high_ok(plen + 2);

  while (true) {
    std::copy(prefix.begin(), prefix.end(), s.begin());
    std::sort(s.begin(), s.end());
    const std::uint64_t psum = std::accumulate(s.begin(), s.end(), std::uint64_t{0});
    // low_ok[j]: s_i <= a+i-1 for all 1 <= i <= j (entries keep their slot)
    // high_ok[j]: s_i <= a+i for all i >= j (entries shifted one slot right)
    low_ok[0] = 1;
    for (unsigned i = 1; i <= plen; ++i) low_ok[i] = low_ok[i - 1] && s[i - 1] <= a + i - 1;
    high_ok[plen + 1] = 1;
    for (unsigned i = plen; i >= 1; --i) high_ok[i] = high_ok[i + 1] && s[i - 1] <= a + i;

    unsigned below = 0;  // #{s_i < d}
    for (unsigned d = 1; d <= top; ++d) {
      while (below < plen && s[below] < d) ++below;
      const unsigned r = below + 1;  // slot of d in the sorted vector
      if (low_ok[r - 1] && d <= a + r - 1 && high_ok[r]) ++hist[base - psum - d];
    }

    // odometer over prefix positions 1..plen-1 (position 0 is fixed)
    if (plen <= 1) return;
    std::size_t pos = plen - 1;
    while (true) {
      if (prefix[pos] < top) {
        ++prefix[pos];
        break;
      }
      prefix[pos] = 1;
      if (pos == 1) return;
      --pos;
    }
  }
}

}  // namespace

AreaHistogram brute_histogram(unsigned n, unsigned a, const BruteOptions& opts) {
  if (a < 1) throw std::invalid_argument("brute_histogram: a must be >= 1");
  const Int required = brute_vector_count(n, a);
  if (required > Int(static_cast<unsigned long>(opts.budget))) {
    throw BudgetExceeded("brute_histogram: " + to_string(required) + " vectors exceed budget " +
                             std::to_string(opts.budget),
                         required);
  }
  AreaHistogram out{n, a, {}};
  if (n == 0) {
    out.counts[0] = 1;
    return out;
  }
  const std::size_t width = max_area(n, a) + 1;
  const unsigned top = n + a - 1;

  std::vector<std::uint64_t> merged(width, 0);
  if (n == 1) {
    tally_lead(n, a, 0, merged);
  } else {
    // Integer tallies commute, so per-thread partials merge in any order.
    const int threads = std::max(1, opts.threads);
#pragma omp parallel num_threads(threads)
    {
      std::vector<std::uint64_t> local(width, 0);
#pragma omp for schedule(dynamic, 1) nowait
      for (int lead = 1; lead <= static_cast<int>(top); ++lead)
        tally_lead(n, a, static_cast<unsigned>(lead), local);
#pragma omp critical(brute_merge)
      for (std::size_t m = 0; m < width; ++m) merged[m] += local[m];
    }
  }
  for (std::size_t m = 0; m < width; ++m)
    if (merged[m] != 0) out.counts[m] = Int(static_cast<unsigned long>(merged[m]));
  return out;
}

}  // namespace parking
