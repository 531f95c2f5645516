// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--threads N] [--full-oracle]
//
// Criteria 3 and 8 cannot be met as stated (see README). They run and print
// FAIL, and the process still exits 0 provided every other criterion passes.

#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "parking/airy.hpp"
#include "parking/cli.hpp"
#include "parking/conjecture_fit.hpp"
#include "parking/counting.hpp"
#include "parking/genfun.hpp"
#include "parking/moments.hpp"
#include "parking/parking_core.hpp"
#include "parking/serialize.hpp"
#include "theorems.hpp"

using namespace parking;

namespace {

// FNV-1a over everything a criterion renders, used for the determinism check.
class Digest {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ull;
    }
    h_ ^= 0xff;
    h_ *= 0x100000001b3ull;
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::uint64_t digest = 0;
};

struct Ctx {
  int threads = 1;
  bool full_oracle = false;
};

std::string at(unsigned n, unsigned a) { return "(n=" + std::to_string(n) + ", a=" + std::to_string(a) + ")"; }

std::string run(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

Outcome c1(const Ctx& ctx) {
  Digest d;
  const CountMemo memo(201, ctx.threads);
  for (unsigned n = 1; n <= 200; ++n) {
    const Int c = memo.get(n, 1);
    d.add(to_string(c));
    if (c != pow_int(Int(n + 1), n - 1)) return {false, "count differs at " + at(n, 1), d.value()};
  }
  return {true, "count(n,1) = (n+1)^(n-1) for n = 1..200", d.value()};
}

Outcome c2(const Ctx&) {
  Digest d;
  const std::vector<std::string> syms{"a"};
  const SymPoly a = SymPoly::variable(syms, "a");
  for (unsigned n = 1; n <= 10; ++n) {
    SymPoly expected = a;
    for (unsigned i = 1; i < n; ++i) expected = expected * (a + SymPoly::constant(syms, Rat(n)));
    const SymPoly got = count_symbolic(n);
    d.add(got.to_string());
    if (got != expected) return {false, "p_" + std::to_string(n) + "(a) = " + got.to_string(), d.value()};
  }
  return {true, "count_symbolic(n) = a(a+n)^(n-1) for n = 1..10", d.value()};
}

constexpr std::uint64_t kOracleBudget = 10'000'000;
constexpr unsigned kN1Cap = 10'000;  // n = 1 is checked up to this a unless --full-oracle

unsigned oracle_a_max(unsigned n) {
  unsigned a = 0;
  while (brute_vector_count(n, a + 1) <= Int(static_cast<unsigned long>(kOracleBudget))) ++a;
  return a;
}

Outcome c3(const Ctx& ctx) {
  Digest d;
  std::size_t pairs = 0;
  std::string mismatch;
  const unsigned n1_full = kOracleBudget;  // (1 + a - 1)^1 <= 10^7
  const unsigned n1_cap = ctx.full_oracle ? n1_full : kN1Cap;
  for (unsigned n = 1;; ++n) {
    const unsigned a_max = n == 1 ? n1_cap : oracle_a_max(n);
    if (a_max == 0) break;
    area_genfun_stream(
        n, a_max,
        [&](const AreaGenFun& q) {
          if (!mismatch.empty()) return;
          const AreaHistogram brute = brute_histogram(n, q.a, {kOracleBudget, ctx.threads});
          const AreaHistogram poly = to_histogram(q);
          d.add(to_csv(poly));
          if (!(brute == poly)) mismatch = at(n, q.a);
          ++pairs;
        },
        {ctx.threads, 0});
    if (!mismatch.empty()) return {false, "histograms differ at " + mismatch, d.value()};
  }
  std::string detail = std::to_string(pairs) + " states match coefficientwise";
  if (n1_cap < n1_full) {
    detail += "; n=1 stops at a=" + std::to_string(n1_cap) + ", the remaining n=1 states up to a=10^7 need ~5e13 " +
              "vector and coefficient comparisons and do not fit the 5 min budget";
    return {false, detail, d.value()};
  }
  return {true, detail, d.value()};
}

Outcome c4(const Ctx& ctx) {
  Digest d;
  for (unsigned n = 1; n <= 40; ++n) {
    const JetAtOne jet = jet_at_one(n, 1, 6, {ctx.threads, 0});
    d.add(to_json(jet).dump());
    if (jet.values != falling_factorial_sums(area_genfun(n, 1, {ctx.threads, 0}).poly, 6))
      return {false, "jet differs at " + at(n, 1), d.value()};
  }
  return {true, "jet_at_one(n,1,6) = falling-factorial sums for n = 1..40", d.value()};
}

Int p_prime_or_zero(unsigned n, unsigned a) { return n == 0 || a == 0 ? Int(0) : p_prime_closed(n, a); }

Outcome c5(const Ctx& ctx) {
  Digest d;
  const JetTable table(100, 5, 1, {ctx.threads, 0});
  for (unsigned n = 1; n <= 100; ++n)
    for (unsigned a = 1; a <= 5; ++a) {
      const auto& j = table.get(n, a);
      const Rat e = expectation_area(n, a);
      d.add(to_string(e));
      if (e != make_rat(j.values[1], j.values[0])) return {false, "E_area differs at " + at(n, a), d.value()};
    }
  for (unsigned n = 1; n <= 200; ++n) {
    const Rat w = w_value(n + 1);
    d.add(to_string(w));
    if (expectation_area(n, 1) != make_rat(-Int(n), 2) + w / 2)
      return {false, "W relation fails at n=" + std::to_string(n), d.value()};
  }
  const CountMemo memo(40, ctx.threads);
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned a = 1; a <= 5; ++a) {
      Int lhs = p_prime_closed(n, a);
      d.add(to_string(lhs));
      for (unsigned k = 0; k <= n; ++k) lhs -= binomial(n, k) * p_prime_or_zero(n - k, a + k - 1);
      if (lhs != Int(n) * memo.get(n, a)) return {false, "P'(1) recurrence fails at " + at(n, a), d.value()};
    }
  return {true, "E_area vs jets (n<=100, a<=5), W relation (n<=200), P'(1) recurrence (n<=30, a<=5)", d.value()};
}

Outcome c6(const Ctx& ctx) {
  Digest d;
  for (const auto& th : testdata::theorems()) {
    int code = 0;
    const std::string text = run({"parkstat", "fit", "--k", std::to_string(th.k), "--format", "json", "--threads",
                                  std::to_string(ctx.threads)},
                                 code);
    d.add(text);
    const std::string name = "Theorem " + std::to_string(th.k);
    if (code != kExitOk) return {false, name + ": fit exited " + std::to_string(code), d.value()};
    const FitResult f = fit_from_json(json::parse(text));
    if (f.A != testdata::poly_in_n(th.a_coeffs)) return {false, name + ": A = " + f.A.to_string(), d.value()};
    if (f.B != testdata::poly_in_n(th.b_coeffs)) return {false, name + ": B = " + f.B.to_string(), d.value()};
  }
  return {true, "fit --k 2..6 reproduces every coefficient of Theorems 2-6", d.value()};
}

Outcome c7(const Ctx&) {
  Digest d;
  const std::vector<AiryMoment> expected{{1, Rat(1, 4), 1},       {2, Rat(5, 12), 0},    {3, Rat(15, 128), 1},
                                         {4, Rat(221, 1008), 0}, {5, Rat(565, 8192), 1}, {6, Rat(82825, 576576), 0}};
  const auto got = airy_moments(6);
  for (const auto& m : got) d.add(m.to_string());
  if (got != expected) return {false, "e_1..e_6 differ from the theorem constants", d.value()};
  return {true, "e_1..e_6 exact in split form", d.value()};
}

Outcome c8(const Ctx& ctx) {
  const AsymptoticReport r = asymptotic_check(8, {100, 400}, {ctx.threads, 0.25, 20});
  Digest d;
  d.add(to_csv(r));
  std::string bad;
  for (const auto& s : r.per_k) {
    if (s.decreasing && s.below_threshold) continue;
    const auto& row = r.rows[(s.k - 1) * 2 + 1];
    bad += " k=" + std::to_string(s.k) + (s.decreasing ? "" : " not decreasing,") + " deviation at n=400 is " +
           row.deviation.substr(0, 6) + ";";
  }
  if (!bad.empty()) return {false, "deviation >= 0.25 or not decreasing:" + bad, d.value()};
  return {true, "k = 1..8 deviations decrease from n=100 to n=400 and are < 0.25", d.value()};
}

Outcome c9(const Ctx& ctx) {
  int code = 0;
  const std::string csv = run({"parkstat", "hist", "--n", "100", "--threads", std::to_string(ctx.threads)}, code);
  Digest d;
  d.add(csv);
  if (code != kExitOk) return {false, "hist exited " + std::to_string(code), d.value()};
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  Int total = 0, first = -1, last = -1;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const Int c = parse_int(line.substr(comma + 1));
    if (rows == 0) first = c;
    last = c;
    total += c;
    ++rows;
  }
  if (rows != 4951) return {false, std::to_string(rows) + " rows", d.value()};
  if (total != pow_int(Int(101), 99)) return {false, "counts do not sum to 101^99", d.value()};
  if (first != factorial(100) || last != 1) return {false, "constant or leading coefficient wrong", d.value()};
  return {true, "4951 rows, sum 101^99, constant term 100!, leading coefficient 1", d.value()};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome(const Ctx&)> run;
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  int alt_threads = 8;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--full-oracle")) ctx.full_oracle = true;
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) alt_threads = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "closed-form counting", c1, 10},       {2, "symbolic counting", c2, 0},
      {3, "oracle equivalence", c3, 300},        {4, "jet/polynomial cross-validation", c4, 0},
      {5, "expectation closed forms", c5, 0},    {6, "theorem reproduction", c6, 600},
      {7, "airy pinning", c7, 0},                {8, "asymptotic convergence", c8, 600},
      {9, "histogram scale", c9, 300},
  };
  const std::set<int> unattainable{3, 8};

  using clock = std::chrono::steady_clock;
  std::vector<std::uint64_t> digests;
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), 0};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; runtime limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s exceeded";
    }
    digests.push_back(o.digest);
    if (!o.pass && !unattainable.count(c.id)) ++unexpected;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.detail << " ["
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s]" << std::endl;
  }

  {
    const auto t0 = clock::now();
    Ctx alt = ctx;
    alt.threads = alt_threads;
    std::string diff;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      std::uint64_t other = 0;
      try {
        other = criteria[i].run(alt).digest;
      } catch (const std::exception&) {
      }
      if (other != digests[i]) diff += " " + std::to_string(criteria[i].id);
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    const bool pass = diff.empty();
    if (!pass) ++unexpected;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion 10 (determinism): "
              << (pass ? "criteria 1-9 render identically at --threads 1 and --threads " + std::to_string(alt_threads)
                       : "output differs for criteria" + diff)
              << " [" << secs << " s]" << std::endl;
  }
  if (unexpected) std::cout << unexpected << " criteria failed unexpectedly" << std::endl;
  return unexpected ? 1 : 0;
}
