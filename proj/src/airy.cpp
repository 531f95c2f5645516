#include "parking/airy.hpp"

#include <algorithm>
#include <stdexcept>

#include "parking/genfun.hpp"
#include "parking/moments.hpp"

namespace parking {

BigFloat AiryMoment::value(mpfr_prec_t bits) const {
  BigFloat v(r, bits);
  if (h == 1) v *= (BigFloat(Rat(2), bits) * BigFloat::pi(bits)).sqrt();
  return v;
}

std::string AiryMoment::to_string() const {
  std::string s = parking::to_string(r);
  if (h == 1) s += "*sqrt(2*pi)";
  return s;
}

std::vector<AiryMoment> airy_moments(unsigned K) {
  if (K < 1) throw std::invalid_argument("airy_moments: K >= 1");
  std::vector<Rat> kk{Rat(-1, 2)};
  for (unsigned k = 1; k <= K; ++k) {
    Rat v = make_rat(Int(3 * static_cast<long>(k) - 4), 4) * kk[k - 1];
    for (unsigned j = 1; j < k; ++j) v += kk[j] * kk[k - j];
    kk.push_back(v);
  }
  std::vector<AiryMoment> out;
  for (unsigned k = 1; k <= K; ++k) {
    AiryMoment m;
    m.k = k;
    m.h = k % 2;
    if (m.h == 1) {
      // Gamma((3k-1)/2) = ((3k-3)/2)!, and sqrt(pi) 2^(-k/2) = sqrt(2 pi) 2^(-(k+1)/2)
      const unsigned g = (3 * k - 3) / 2;
      m.r = make_rat(4 * factorial(k), factorial(g) * pow_int(Int(2), (k + 1) / 2)) * kk[k];
    } else {
      // Gamma(q + 1/2) = (2q)! sqrt(pi) / (4^q q!) with q = (3k-2)/2
      const unsigned q = (3 * k - 2) / 2;
      m.r = make_rat(4 * factorial(k) * pow_int(Int(4), q) * factorial(q),
                     factorial(2 * q) * pow_int(Int(2), k / 2)) *
            kk[k];
    }
    out.push_back(m);
  }
  return out;
}

bool AsymptoticReport::all_pass() const {
  return std::all_of(per_k.begin(), per_k.end(), [](const auto& s) { return s.decreasing && s.below_threshold; });
}

AsymptoticReport asymptotic_check(unsigned K, const std::vector<unsigned>& grid, const AsymptoticOptions& opts) {
  if (K < 1) throw std::invalid_argument("asymptotic_check: K >= 1");
  if (grid.empty() || !std::is_sorted(grid.begin(), grid.end()) || grid.front() < 1)
    throw std::invalid_argument("asymptotic_check: grid must be ascending positive integers");

  AsymptoticReport rep;
  rep.K = K;
  rep.grid = grid;
  rep.threshold = opts.threshold;

  const auto airy = airy_moments(K);
  const JetTable jets(grid.back(), 1, K, {opts.threads, 0});
  const BigFloat one(Rat(1));
  for (unsigned k = 1; k <= K; ++k) {
    const BigFloat ek = airy[k - 1].value();
    AsymptoticSummary sum{k, true, false};
    BigFloat last_dev;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const unsigned n = grid[i];
      AsymptoticRow row;
      row.k = k;
      row.n = n;
      row.moment = factorial_moments(jets.get(n, 1)).at(k - 1);
      const BigFloat scale = ek * BigFloat(Rat(n)).pow(make_rat(3 * k, 2));
      const BigFloat ratio = BigFloat(row.moment) / scale;
      const BigFloat dev = (ratio - one).abs();
      row.ratio = ratio.to_decimal(opts.digits);
      row.deviation = dev.to_decimal(opts.digits);
      row.deviation_value = dev.to_double();
      if (i > 0 && !(dev < last_dev)) sum.decreasing = false;
      last_dev = dev;
      rep.rows.push_back(std::move(row));
    }
    sum.below_threshold = rep.rows.back().deviation_value < opts.threshold;
    rep.per_k.push_back(sum);
  }
  return rep;
}

}  // namespace parking
