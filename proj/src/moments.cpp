#include "parking/moments.hpp"

#include <mutex>
#include <stdexcept>

#include "parking/bigfloat.hpp"
#include "parking/counting.hpp"

namespace parking {

Rat w_value(unsigned n) {
  if (n < 1) throw std::invalid_argument("w_value: n >= 1");
  Rat sum = 0;
  for (unsigned k = 0; k + 2 <= n; ++k) sum += make_rat(pow_int(Int(n), k), factorial(k));
  return make_rat(factorial(n), pow_int(Int(n), n - 1)) * sum;
}

namespace {

// sum_{j=1..n} n! / ((n-j)! (a+n)^(j-1))
Rat falling_power_sum(unsigned n, unsigned a) {
  Rat s = 0;
  Int ff = 1;  // n!/(n-j)!
  for (unsigned j = 1; j <= n; ++j) {
    ff *= n - j + 1;
    s += make_rat(ff, pow_int(Int(a + n), j - 1));
  }
  return s;
}

void require_positive(unsigned n, unsigned a, const char* what) {
  if (n < 1 || a < 1) throw std::invalid_argument(std::string(what) + ": n, a >= 1");
}

}  // namespace

Rat expectation_area(unsigned n, unsigned a) {
  require_positive(n, a, "expectation_area");
  return make_rat(Int(n) * (Int(a) - 2), 2) + falling_power_sum(n, a) / 2;
}

Rat expectation_sum(unsigned n, unsigned a) {
  require_positive(n, a, "expectation_sum");
  return make_rat(Int(n) * (a + n + 1), 2) - falling_power_sum(n, a) / 2;
}

Int p_prime_closed(unsigned n, unsigned a) {
  require_positive(n, a, "p_prime_closed");
  Int twice = Int(a) * n * (a + n + 1) * pow_int(Int(a + n), n - 1);
  Int ff = 1;  // C(n,j) j! = n!/(n-j)!
  for (unsigned j = 1; j <= n; ++j) {
    ff *= n - j + 1;
    twice -= ff * a * pow_int(Int(a + n), n - j);
  }
  if (!mpz_even_p(twice.get_mpz_t())) throw std::logic_error("p_prime_closed: odd numerator");
  return twice / 2;
}

std::vector<Rat> factorial_moments(const JetAtOne& jet) {
  if (jet.values.empty() || jet.values[0] == 0) throw std::domain_error("factorial_moments: empty state");
  std::vector<Rat> out;
  for (std::size_t k = 1; k < jet.values.size(); ++k) out.push_back(make_rat(jet.values[k], jet.values[0]));
  return out;
}

std::vector<Rat> factorial_moments(unsigned n, unsigned a, unsigned order, const SweepOptions& opts) {
  require_positive(n, a, "factorial_moments");
  if (order < 1) throw std::invalid_argument("factorial_moments: order >= 1");
  return factorial_moments(jet_at_one(n, a, order, opts));
}

Int stirling2(unsigned j, unsigned k) {
  static std::mutex mu;
  static std::vector<std::vector<Int>> tri{{Int(1)}};
  std::lock_guard lock(mu);
  while (tri.size() <= j) {
    const std::size_t r = tri.size();
    std::vector<Int> row(r + 1, 0);
    for (std::size_t c = 1; c <= r; ++c) {
      row[c] = tri[r - 1].size() > c ? tri[r - 1][c] * static_cast<unsigned long>(c) : Int(0);
      row[c] += tri[r - 1][c - 1];
    }
    tri.push_back(std::move(row));
  }
  return k <= j ? tri[j][k] : Int(0);
}

MomentTable convert_moments(std::span<const Rat> factorial) {
  MomentTable t;
  t.order = static_cast<unsigned>(factorial.size());
  t.factorial.assign(factorial.begin(), factorial.end());
  for (unsigned j = 1; j <= t.order; ++j) {
    Rat r = 0;
    for (unsigned k = 1; k <= j; ++k) r += Rat(stirling2(j, k)) * factorial[k - 1];
    t.raw.push_back(r);
  }
  const Rat mu = t.order ? t.raw[0] : Rat(0);
  for (unsigned j = 1; j <= t.order; ++j) {
    Rat c = pow_rat(-mu, j);  // i = 0 term, raw_0 = 1
    for (unsigned i = 1; i <= j; ++i) c += Rat(binomial(j, i)) * t.raw[i - 1] * pow_rat(-mu, j - i);
    t.central.push_back(c);
  }
  if (t.order >= 2) {
    t.variance_zero = t.central[1] == 0;
    if (!t.variance_zero)
      for (unsigned j = 1; j <= t.order; ++j) t.scaled.push_back({j, t.central[j - 1], j});
  } else {
    t.variance_zero = true;
  }
  return t;
}

std::string scaled_decimal(const MomentTable& t, unsigned j, unsigned precision) {
  if (t.scaled.empty() || j < 1 || j > t.scaled.size()) throw std::domain_error("scaled moment undefined");
  const ScaledSplit& s = t.scaled[j - 1];
  const BigFloat var(t.variance());
  const BigFloat v = BigFloat(s.central) / var.pow(make_rat(s.var_power_twice, 2));
  return v.to_decimal(precision);
}

ScaledHistogram scaled_histogram(const AreaGenFun& q, unsigned precision) {
  ScaledHistogram h;
  h.n = q.n;
  h.a = q.a;
  const auto c = q.poly.coeffs();
  Int s0 = 0, s1 = 0, s2 = 0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    s0 += c[m];
    s1 += c[m] * static_cast<unsigned long>(m);
    s2 += c[m] * static_cast<unsigned long>(m) * static_cast<unsigned long>(m);
  }
  if (s0 == 0) throw std::domain_error("scaled_histogram: empty state");
  h.total = s0;
  h.mean = make_rat(s1, s0);
  h.variance = make_rat(s2, s0) - h.mean * h.mean;
  if (h.variance <= 0) throw std::domain_error("scaled_histogram: variance is zero");

  const BigFloat sigma = BigFloat(h.variance).sqrt();
  const BigFloat mean(h.mean);
  const BigFloat total(Rat(h.total));
  for (std::size_t m = 0; m < c.size(); ++m) {
    const BigFloat x = (BigFloat(Rat(static_cast<unsigned long>(m))) - mean) / sigma;
    const BigFloat density = BigFloat(Rat(c[m])) * sigma / total;
    h.rows.push_back({m, c[m], x.to_decimal(precision), density.to_decimal(precision)});
  }
  return h;
}

ScaledHistogram scaled_histogram(unsigned n, unsigned a, unsigned precision, const SweepOptions& opts) {
  if (n < 2) throw std::invalid_argument("scaled_histogram: n >= 2");
  return scaled_histogram(area_genfun(n, a, opts), precision);
}

}  // namespace parking
