#include "parking/verify.hpp"

#include <stdexcept>

#include "parking/airy.hpp"
#include "parking/counting.hpp"
#include "parking/genfun.hpp"
#include "parking/moments.hpp"
#include "parking/parking_core.hpp"
#include "parking/reference.hpp"
#include "parking/serialize.hpp"

namespace parking {

namespace {

std::string at(unsigned n, unsigned a) { return "(n=" + std::to_string(n) + ", a=" + std::to_string(a) + ")"; }

CheckOutcome closed_form_counts(const VerifyOptions& o) {
  const auto rep = verify_closed_form(10, 11, o.threads);
  if (!rep.ok) return {"closed-form counts", false, rep.failing_check + " at " + at(rep.failure->first, rep.failure->second)};
  return {"closed-form counts", true, std::to_string(rep.points) + " points, " + (rep.proved ? "proved" : "checked")};
}

CheckOutcome symbolic_counts(const VerifyOptions&) {
  const std::vector<std::string> syms{"a"};
  const SymPoly a = SymPoly::variable(syms, "a");
  for (unsigned n = 1; n <= 10; ++n) {
    SymPoly expected = a;
    const SymPoly base = a + SymPoly::constant(syms, Rat(n));
    for (unsigned i = 1; i < n; ++i) expected = expected * base;
    if (count_symbolic(n) != expected) return {"symbolic counts", false, "p_" + std::to_string(n) + "(a)"};
  }
  return {"symbolic counts", true, "p_n(a) = a(a+n)^(n-1), n = 1..10"};
}

CheckOutcome oracle(const VerifyOptions& o) {
  std::size_t pairs = 0;
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned a = 1; a <= 4; ++a) {
      if (brute_vector_count(n, a) > Int(static_cast<unsigned long>(o.budget))) continue;
      const auto brute = brute_histogram(n, a, {o.budget, o.threads});
      const auto poly = to_histogram(area_genfun(n, a, {o.threads, 0}));
      if (!(brute == poly)) return {"brute-force oracle", false, "histograms differ at " + at(n, a)};
      ++pairs;
    }
  return {"brute-force oracle", true, std::to_string(pairs) + " states match coefficientwise"};
}

CheckOutcome jets(const VerifyOptions& o) {
  const unsigned K = 6;
  const JetTable table(20, 3, K, {o.threads, 0});
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned a = 1; a <= 3; ++a) {
      const auto direct = falling_factorial_sums(area_genfun(n, a, {o.threads, 0}).poly, K);
      if (table.get(n, a).values != direct) return {"jets vs polynomials", false, "mismatch at " + at(n, a)};
    }
  for (unsigned n = 1; n <= 8; ++n)
    if (table.get(n, 2).values != reference::jet_leibniz(n, 2, K))
      return {"jets vs polynomials", false, "Leibniz reference differs at " + at(n, 2)};
  return {"jets vs polynomials", true, "n <= 20, a <= 3, K = 6"};
}

Int p_prime_or_zero(unsigned n, unsigned a) { return n == 0 || a == 0 ? Int(0) : p_prime_closed(n, a); }

CheckOutcome expectations(const VerifyOptions& o) {
  const JetTable table(100, 5, 1, {o.threads, 0});
  for (unsigned n = 1; n <= 100; ++n)
    for (unsigned a = 1; a <= 5; ++a) {
      const auto& j = table.get(n, a);
      if (expectation_area(n, a) != make_rat(j.values[1], j.values[0]))
        return {"expectation closed forms", false, "E_area differs at " + at(n, a)};
    }
  for (unsigned n = 1; n <= 200; ++n)
    if (expectation_area(n, 1) != make_rat(-Int(n), 2) + w_value(n + 1) / 2)
      return {"expectation closed forms", false, "W relation fails at n=" + std::to_string(n)};
  const CountMemo memo(40, o.threads);
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned a = 1; a <= 5; ++a) {
      Int lhs = p_prime_closed(n, a);
      for (unsigned k = 0; k <= n; ++k) lhs -= binomial(n, k) * p_prime_or_zero(n - k, a + k - 1);
      if (lhs != Int(n) * memo.get(n, a)) return {"expectation closed forms", false, "P'(1) recurrence fails at " + at(n, a)};
    }
  return {"expectation closed forms", true, "E_area, W_n relation, P'(1) recurrence"};
}

CheckOutcome airy_pins(const VerifyOptions&) {
  const std::vector<AiryMoment> expected{{1, Rat(1, 4), 1},       {2, Rat(5, 12), 0},    {3, Rat(15, 128), 1},
                                         {4, Rat(221, 1008), 0}, {5, Rat(565, 8192), 1}, {6, Rat(82825, 576576), 0}};
  if (airy_moments(6) != expected) return {"airy moments", false, "e_1..e_6 disagree with the theorem constants"};
  return {"airy moments", true, "e_1..e_6 pinned"};
}

}  // namespace

std::vector<std::string> suite_names() { return {"closed-form", "oracle", "jets", "expectation", "airy", "all"}; }

std::vector<CheckOutcome> run_suite(const std::string& suite, const VerifyOptions& opts) {
  std::vector<CheckOutcome> out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "closed-form") {
    known = true;
    out.push_back(closed_form_counts(opts));
    out.push_back(symbolic_counts(opts));
  }
  if (all || suite == "oracle") {
    known = true;
    out.push_back(oracle(opts));
  }
  if (all || suite == "jets") {
    known = true;
    out.push_back(jets(opts));
  }
  if (all || suite == "expectation") {
    known = true;
    out.push_back(expectations(opts));
  }
  if (all || suite == "airy") {
    known = true;
    out.push_back(airy_pins(opts));
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace parking
