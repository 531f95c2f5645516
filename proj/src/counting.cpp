#include "parking/counting.hpp"

#include <stdexcept>

#include "parking/sweep.hpp"

namespace parking {

CountMemo::CountMemo(unsigned diag_max, int threads) : diag_max_(diag_max), diags_(diag_max + 1) {
  const BinomialRows binom(diag_max);
  auto kernel = [&binom](unsigned m, unsigned b, const PrevDiagonal<Int>& prev) -> Int {
    if (m == 0) return 1;
    if (b == 0) return 0;
    Int v = prev.at(m);
    for (unsigned k = 1; k <= m; ++k) mpz_addmul(v.get_mpz_t(), binom(m, k).get_mpz_t(), prev.at(m - k).get_mpz_t());
    return v;
  };
  auto sink = [this](unsigned m, unsigned b, const Int& v) {
    auto& row = diags_[m + b];
    if (row.size() <= m) row.resize(m + 1);
    row[m] = v;
  };
  antidiagonal_sweep<Int>(diag_max, diag_max, kernel, sink, threads);
}

const Int& CountMemo::get(unsigned n, unsigned a) const {
  if (n + a > diag_max_) throw std::out_of_range("CountMemo: state outside table");
  return diags_[n + a][n];
}

Int count(unsigned n, unsigned a, int threads) { return CountMemo(n + a, threads).get(n, a); }

Int closed_form_count(unsigned n, unsigned a) {
  if (n == 0) return 1;
  return Int(a) * pow_int(Int(a + n), n - 1);
}

namespace {

// S(a) = sum_{b=1..a} f(b) for polynomial f of degree d: interpolate through
// the d+2 partial sums at a = 0..d+1.
SymPoly indefinite_sum(const SymPoly& f, const std::string& sym) {
  const unsigned d = f.degree_in(sym).value_or(0);
  std::vector<Rat> xs, ys;
  Rat acc = 0;
  xs.push_back(0);
  ys.push_back(0);
  for (unsigned j = 1; j <= d + 1; ++j) {
    acc += f.eval({{sym, Rat(j)}});
    xs.push_back(j);
    ys.push_back(acc);
  }
  return interpolate(sym, xs, ys);
}

}  // namespace

SymPoly count_symbolic(unsigned n) {
  const std::vector<std::string> syms{"a"};
  std::vector<SymPoly> p;
  p.push_back(SymPoly::constant(syms, 1));
  for (unsigned m = 1; m <= n; ++m) {
    SymPoly f(syms);
    for (unsigned k = 1; k <= m; ++k) f += p[m - k].shifted("a", Rat(k - 1)) * Rat(binomial(m, k));
    p.push_back(indefinite_sum(f, "a"));
  }
  return p[n];
}

ClosedFormReport verify_closed_form(unsigned n_max, unsigned a_max, int threads) {
  if (n_max < 1 || a_max < 1) throw std::invalid_argument("verify_closed_form: n_max, a_max >= 1");
  ClosedFormReport rep;
  rep.n_max = n_max;
  rep.a_max = a_max;
  const CountMemo memo(n_max + a_max, threads);
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned a = 1; a <= a_max; ++a) {
      const Int closed = closed_form_count(n, a);
      if (memo.get(n, a) != closed) {
        rep.ok = false;
        rep.failure = {n, a};
        rep.failing_check = "recurrence count differs from a(a+n)^(n-1)";
        return rep;
      }
      // k = n contributes C(n,n) * q(0, .) = 1
      Int rhs = 1;
      for (unsigned k = 0; k < n; ++k)
        rhs += binomial(n, k) * Int(a + k - 1) * pow_int(Int(a + n - 1), n - k - 1);
      if (rhs != closed) {
        rep.ok = false;
        rep.failure = {n, a};
        rep.failing_check = "binomial identity";
        return rep;
      }
      ++rep.points;
    }
  rep.proved = rep.ok && a_max >= n_max + 1;
  return rep;
}

}  // namespace parking
