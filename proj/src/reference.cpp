#include "parking/reference.hpp"

#include <map>
#include <utility>

namespace parking::reference {

namespace {

using Key = std::pair<unsigned, unsigned>;

Int count_rec(unsigned n, unsigned a, std::map<Key, Int>& memo) {
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (auto it = memo.find({n, a}); it != memo.end()) return it->second;
  Int v = 0;
  for (unsigned k = 0; k <= n; ++k) v += binomial(n, k) * count_rec(n - k, a + k - 1, memo);
  memo.emplace(Key{n, a}, v);
  return v;
}

PolyX genfun_rec(unsigned n, unsigned a, std::map<Key, PolyX>& memo) {
  if (n == 0) return PolyX::constant(1);
  if (a == 0) return {};
  if (auto it = memo.find({n, a}); it != memo.end()) return it->second;
  PolyX v;
  for (unsigned k = 0; k <= n; ++k) {
    const std::size_t e = static_cast<std::size_t>(k) * (k + 2 * static_cast<std::size_t>(a) - 3) / 2;
    v.add_scaled_shifted(genfun_rec(n - k, a + k - 1, memo), binomial(n, k), k == 0 ? 0 : e);
  }
  memo.emplace(Key{n, a}, v);
  return v;
}

Int falling(std::size_t e, unsigned t) {
  Int r = 1;
  for (unsigned j = 0; j < t; ++j) {
    if (e < j) return 0;
    r *= static_cast<unsigned long>(e - j);
  }
  return r;
}

const std::vector<Int>& jet_rec(unsigned n, unsigned a, unsigned K, std::map<Key, std::vector<Int>>& memo) {
  if (auto it = memo.find({n, a}); it != memo.end()) return it->second;
  std::vector<Int> j(K + 1, 0);
  if (n == 0) {
    j[0] = 1;
  } else if (a > 0) {
    j = jet_rec(n, a - 1, K, memo);
    for (unsigned k = 1; k <= n; ++k) {
      const std::size_t e = static_cast<std::size_t>(k) * (k + 2 * static_cast<std::size_t>(a) - 3) / 2;
      const std::vector<Int> sub = jet_rec(n - k, a + k - 1, K, memo);
      const Int ck = binomial(n, k);
      for (unsigned i = 0; i <= K; ++i)
        for (unsigned t = 0; t <= i; ++t) j[i] += ck * binomial(i, t) * falling(e, t) * sub[i - t];
    }
  }
  return memo.emplace(Key{n, a}, std::move(j)).first->second;
}

}  // namespace

Int count(unsigned n, unsigned a) {
  std::map<Key, Int> memo;
  return count_rec(n, a, memo);
}

PolyX area_genfun(unsigned n, unsigned a) {
  std::map<Key, PolyX> memo;
  return genfun_rec(n, a, memo);
}

std::vector<Int> jet_leibniz(unsigned n, unsigned a, unsigned order) {
  std::map<Key, std::vector<Int>> memo;
  return jet_rec(n, a, order, memo);
}

}  // namespace parking::reference
