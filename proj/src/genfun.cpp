#include "parking/genfun.hpp"

#include <stdexcept>

#include "parking/parking_core.hpp"

namespace parking {

std::uint64_t genfun_footprint(unsigned n, unsigned a) {
  std::uint64_t best = 0, last = 0;
  for (unsigned s = 0; s <= n + a; ++s) {
    std::uint64_t diag = 0;
    for (unsigned m = 0; m <= std::min(s, n); ++m)
      if (m == 0 || s > m) diag += max_area(m, s - m) + 1;
    best = std::max(best, diag + last);
    last = diag;
  }
  return best;
}

namespace {

void check_budget(std::uint64_t need, const SweepOptions& opts, const char* what) {
  if (opts.budget != 0 && need > opts.budget)
    throw BudgetExceeded(std::string(what) + ": needs " + std::to_string(need) + " resident integers, budget " +
                             std::to_string(opts.budget),
                         Int(static_cast<unsigned long>(need)));
}

// Sweeps the polynomial recurrence over n' <= n_max, n' + a' <= diag_max.
template <class Sink>
void sweep_area_polys(unsigned n_max, unsigned diag_max, Sink&& sink, int threads) {
  const BinomialRows binom(n_max);
  auto kernel = [&binom](unsigned m, unsigned b, const PrevDiagonal<PolyX>& prev) -> PolyX {
    if (m == 0) return PolyX::constant(1);
    if (b == 0) return {};
    std::vector<Int> acc(max_area(m, b) + 1);
    const auto head = prev.at(m).coeffs();
    for (std::size_t i = 0; i < head.size(); ++i) acc[i] = head[i];
    for (unsigned k = 1; k <= m; ++k) {
      const auto tail = prev.at(m - k).coeffs();
      const std::size_t shift = area_shift(k, b);
      mpz_srcptr c = binom(m, k).get_mpz_t();
      for (std::size_t i = 0; i < tail.size(); ++i)
        mpz_addmul(acc[i + shift].get_mpz_t(), tail[i].get_mpz_t(), c);
    }
    return PolyX(std::move(acc));
  };
  antidiagonal_sweep<PolyX>(n_max, diag_max, kernel, sink, threads);
}

}  // namespace

AreaGenFun area_genfun(unsigned n, unsigned a, const SweepOptions& opts) {
  check_budget(genfun_footprint(n, a), opts, "area_genfun");
  AreaGenFun out{n, a, {}};
  sweep_area_polys(
      n, n + a,
      [&](unsigned m, unsigned b, const PolyX& p) {
        if (m == n && b == a) out.poly = p;
      },
      opts.threads);
  return out;
}

void area_genfun_stream(unsigned n, unsigned a_max, const std::function<void(const AreaGenFun&)>& visit,
                        const SweepOptions& opts) {
  check_budget(genfun_footprint(n, a_max), opts, "area_genfun_stream");
  sweep_area_polys(
      n, n + a_max,
      [&](unsigned m, unsigned b, const PolyX& p) {
        if (m == n && b >= 1 && b <= a_max) visit(AreaGenFun{n, b, p});
      },
      opts.threads);
}

std::vector<AreaGenFun> area_genfun_family(unsigned n, unsigned a_max, const SweepOptions& opts) {
  std::vector<AreaGenFun> out;
  area_genfun_stream(n, a_max, [&](const AreaGenFun& q) { out.push_back(q); }, opts);
  return out;
}

PolyX sum_from_area(const AreaGenFun& q) { return q.poly.reversed(sum_plus_area(q.n, q.a)); }

PolyX sum_genfun(unsigned n, unsigned a, const SweepOptions& opts) {
  if (n < 1) throw std::invalid_argument("sum_genfun: n >= 1");
  return sum_from_area(area_genfun(n, a, opts));
}

std::vector<Int> falling_factorial_sums(const PolyX& p, unsigned order) {
  std::vector<Int> out(order + 1, 0);
  const auto c = p.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0) continue;
    Int ff = 1;
    for (unsigned i = 0; i <= order; ++i) {
      if (i > 0) ff *= static_cast<long>(m) - static_cast<long>(i - 1);
      if (ff == 0) break;
      out[i] += c[m] * ff;
    }
  }
  return out;
}

// The sweep carries Taylor coefficients c_i = Q^(i)(1) / i! so that
// (1+y)^e contributes plain binomials C(e, t); derivatives are recovered as
// i! c_i when a state is published.
JetTable::JetTable(unsigned n_max, unsigned a_max, unsigned order, const SweepOptions& opts)
    : n_max_(n_max), a_max_(a_max), order_(order), cells_((n_max + 1) * (a_max + 1)) {
  check_budget(2ull * (n_max + 1) * (order + 1), opts, "jet_table");
  const BinomialRows binom(n_max);
  const unsigned K = order;
  auto kernel = [&binom, K](unsigned m, unsigned b, const PrevDiagonal<std::vector<Int>>& prev) {
    std::vector<Int> c(K + 1, 0);
    if (m == 0) {
      c[0] = 1;
      return c;
    }
    if (b == 0) return c;
    c = prev.at(m);
    Int w;
    for (unsigned k = 1; k <= m; ++k) {
      const auto& q = prev.at(m - k);
      const std::size_t e = area_shift(k, b);
      Int choose = 1;  // C(e, t)
      for (unsigned t = 0; t <= K && t <= e; ++t) {
        if (t > 0) {
          choose *= static_cast<unsigned long>(e - t + 1);
          mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), t);
        }
        w = binom(m, k) * choose;
        for (unsigned i = t; i <= K; ++i) mpz_addmul(c[i].get_mpz_t(), w.get_mpz_t(), q[i - t].get_mpz_t());
      }
    }
    return c;
  };
  auto sink = [this, n_max, a_max, K](unsigned m, unsigned b, const std::vector<Int>& c) {
    if (m > n_max || b > a_max) return;
    JetAtOne& j = cells_[m * (a_max + 1) + b];
    j.n = m;
    j.a = b;
    j.order = K;
    j.values.resize(K + 1);
    Int f = 1;
    for (unsigned i = 0; i <= K; ++i) {
      if (i > 0) f *= i;
      j.values[i] = c[i] * f;
    }
  };
  antidiagonal_sweep<std::vector<Int>>(n_max, n_max + a_max, kernel, sink, opts.threads);
}

const JetAtOne& JetTable::get(unsigned n, unsigned a) const {
  if (n > n_max_ || a > a_max_) throw std::out_of_range("JetTable: state outside table");
  return cells_[n * (a_max_ + 1) + a];
}

JetAtOne jet_at_one(unsigned n, unsigned a, unsigned order, const SweepOptions& opts) {
  return JetTable(n, a, order, opts).get(n, a);
}

}  // namespace parking
