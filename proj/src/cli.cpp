#include "parking/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "parking/airy.hpp"
#include "parking/conjecture_fit.hpp"
#include "parking/counting.hpp"
#include "parking/genfun.hpp"
#include "parking/moments.hpp"
#include "parking/serialize.hpp"
#include "parking/verify.hpp"

namespace parking {

namespace {

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string text;
  int code = kExitOk;
};

std::vector<unsigned> parse_grid(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size() || v == 0) throw std::invalid_argument("bad grid entry: " + item);
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

std::string poly_text(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto c = p.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[m] != 1 || m == 0) s += to_string(c[m]);
    if (m >= 1) s += "x";
    if (m >= 2) s += "^" + std::to_string(m);
  }
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Result cmd_count(const RunConfig& cfg, bool symbolic) {
  if (symbolic) {
    const SymPoly p = count_symbolic(cfg.n);
    if (cfg.format == "json") return {dump({{"n", cfg.n}, {"symbolic", p.to_string()}, {"terms", to_json(p)}})};
    if (cfg.format == "csv") {
      std::string s = "power,coefficient\n";
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        s += std::to_string(it->first[0]) + "," + to_string(it->second) + "\n";
      return {s};
    }
    return {p.to_string() + "\n"};
  }
  const Int c = count(cfg.n, cfg.a, cfg.threads);
  if (cfg.format == "json") return {dump({{"n", cfg.n}, {"a", cfg.a}, {"count", to_string(c)}})};
  if (cfg.format == "csv") return {"n,a,count\n" + std::to_string(cfg.n) + "," + std::to_string(cfg.a) + "," + to_string(c) + "\n"};
  return {to_string(c) + "\n"};
}

Result cmd_genfun(const RunConfig& cfg) {
  const AreaGenFun q = area_genfun(cfg.n, cfg.a, {cfg.threads, cfg.budget});
  const AreaHistogram h = to_histogram(q);
  if (cfg.format == "json") return {dump(to_json(h))};
  if (cfg.format == "text")
    return {"Q(" + std::to_string(cfg.n) + "," + std::to_string(cfg.a) + ")(x) = " + poly_text(q.poly) + "\n"};
  return {to_csv(h)};
}

Result cmd_moments(const RunConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("--k must be >= 1");
  if (cfg.n < 1 || cfg.a < 1) throw std::invalid_argument("moments need --n >= 1 and --a >= 1");
  MomentTable t = convert_moments(factorial_moments(cfg.n, cfg.a, cfg.k, {cfg.threads, cfg.budget}));
  t.n = cfg.n;
  t.a = cfg.a;
  if (cfg.format == "json") return {dump(to_json(t, cfg.precision))};
  if (cfg.format == "csv") return {to_csv(t, cfg.precision)};
  return {to_text(t, cfg.precision)};
}

Result cmd_fit(const RunConfig& cfg, bool general_a, unsigned n_max) {
  if (cfg.k < 1) throw std::invalid_argument("--k must be >= 1");
  const FitOptions fo{5, cfg.threads};
  FitResult f;
  if (n_max == 0) {
    f = fit_moment(cfg.k, general_a, fo);
  } else {
    const MomentAnsatz ansatz = MomentAnsatz::standard(cfg.k, general_a);
    std::vector<unsigned> ns, as;
    default_grid(ansatz, fo.margin, ns, as);
    ns.clear();
    for (unsigned n = 1; n <= n_max; ++n) ns.push_back(n);
    f = fit_moment(cfg.k, ansatz, ns, as, fo);
  }
  std::string body;
  if (cfg.format == "json") body = dump(to_json(f));
  else if (cfg.format == "csv") body = to_csv(f);
  else body = to_text(f);
  return {body, f.status == FitStatus::verified ? kExitOk : kExitVerification};
}

Result cmd_airy(const RunConfig& cfg, double threshold) {
  const auto grid = parse_grid(cfg.grid);
  const AsymptoticReport r = asymptotic_check(cfg.k, grid, {cfg.threads, threshold, 20});
  std::string body;
  if (cfg.format == "json") body = dump(to_json(r));
  else if (cfg.format == "text") body = to_text(r);
  else body = to_csv(r);
  bool decreasing = true;
  for (const auto& s : r.per_k) decreasing = decreasing && s.decreasing;
  return {body, decreasing ? kExitOk : kExitVerification};
}

Result cmd_hist(const RunConfig& cfg, bool scaled) {
  const AreaGenFun q = area_genfun(cfg.n, cfg.a, {cfg.threads, cfg.budget});
  if (!scaled) {
    const AreaHistogram h = to_histogram(q);
    if (cfg.format == "json") return {dump(to_json(h))};
    if (cfg.format == "text") {
      std::string s;
      for (const auto& [m, c] : h.counts) s += std::to_string(m) + " " + to_string(c) + "\n";
      return {s};
    }
    return {to_csv(h)};
  }
  if (cfg.n < 2) throw std::invalid_argument("--scaled needs --n >= 2 (positive variance)");
  const ScaledHistogram h = scaled_histogram(q, cfg.precision);
  if (cfg.format == "json") return {dump(to_json(h))};
  if (cfg.format == "text") {
    std::string s;
    for (const auto& r : h.rows) s += std::to_string(r.area) + " " + to_string(r.count) + " " + r.x + " " + r.density + "\n";
    return {s};
  }
  return {to_csv(h)};
}

Result cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const auto outcomes = run_suite(suite, {cfg.threads, cfg.budget});
  bool ok = true;
  std::string body;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& o : outcomes) arr.push_back({{"check", o.name}, {"pass", o.pass}, {"detail", o.detail}});
    body = dump(arr);
  } else if (cfg.format == "csv") {
    body = "check,status,detail\n";
    for (const auto& o : outcomes) body += o.name + "," + (o.pass ? "pass" : "fail") + "," + o.detail + "\n";
  } else {
    for (const auto& o : outcomes) body += std::string(o.pass ? "PASS " : "FAIL ") + o.name + ": " + o.detail + "\n";
  }
  for (const auto& o : outcomes) ok = ok && o.pass;
  return {body, ok ? kExitOk : kExitVerification};
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "length of the preference vectors");
  sub->add_option("--a", cfg.a, "shift parameter a");
  sub->add_option("--k", cfg.k, "moment order");
  sub->add_option("--grid", cfg.grid, "comma-separated n values");
  sub->add_option("--budget", cfg.budget, "resource guard (vectors or resident integers)");
  sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--precision", cfg.precision, "significant digits of decimal output")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  sub->add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact statistics of a-parking functions", "parkstat"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool symbolic = false, scaled = false, general_a = false;
  unsigned n_max = 0;
  std::string suite = "all";
  double threshold = 0.25;

  auto* count_cmd = app.add_subcommand("count", "number of a-parking functions");
  add_common(count_cmd, cfg);
  count_cmd->add_flag("--symbolic", symbolic, "print p_n(a) as a polynomial in a");
  auto* genfun_cmd = app.add_subcommand("genfun", "area generating polynomial Q(n,a)");
  add_common(genfun_cmd, cfg);
  auto* moments_cmd = app.add_subcommand("moments", "factorial, raw, central and scaled moments");
  add_common(moments_cmd, cfg);
  auto* fit_cmd = app.add_subcommand("fit", "fit E_k = A_k + B_k E_1 by undetermined coefficients");
  add_common(fit_cmd, cfg);
  fit_cmd->add_flag("--general-a", general_a, "fit polynomials in n and a");
  fit_cmd->add_option("--n-max", n_max, "sample n = 1..n-max");
  auto* airy_cmd = app.add_subcommand("airy", "compare E_k(n)/n^(3k/2) with the Airy moments");
  add_common(airy_cmd, cfg);
  airy_cmd->add_option("--threshold", threshold, "deviation bound at the largest n");
  auto* hist_cmd = app.add_subcommand("hist", "area histogram, optionally scaled");
  add_common(hist_cmd, cfg);
  hist_cmd->add_flag("--scaled", scaled, "add x = (area - E)/sigma and density columns");
  auto* verify_cmd = app.add_subcommand("verify", "run self-check suites");
  add_common(verify_cmd, cfg);
  verify_cmd->add_option("--suite", suite, "closed-form, oracle, jets, expectation, airy or all")
      ->check(CLI::IsMember(suite_names()));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  const bool k_given = sub->count("--k") > 0;
  try {
    Result r;
    if (cfg.command == "count") {
      if (cfg.format.empty()) cfg.format = "text";
      r = cmd_count(cfg, symbolic);
    } else if (cfg.command == "genfun") {
      if (cfg.format.empty()) cfg.format = "csv";
      r = cmd_genfun(cfg);
    } else if (cfg.command == "moments") {
      if (cfg.format.empty()) cfg.format = "text";
      r = cmd_moments(cfg);
    } else if (cfg.command == "fit") {
      if (cfg.format.empty()) cfg.format = "text";
      r = cmd_fit(cfg, general_a, n_max);
    } else if (cfg.command == "airy") {
      if (cfg.format.empty()) cfg.format = "csv";
      if (!k_given) cfg.k = 8;
      if (cfg.grid.empty()) cfg.grid = "50,100,200";
      r = cmd_airy(cfg, threshold);
    } else if (cfg.command == "hist") {
      if (cfg.format.empty()) cfg.format = "csv";
      r = cmd_hist(cfg, scaled);
    } else {
      if (cfg.format.empty()) cfg.format = "text";
      r = cmd_verify(cfg, suite);
    }
    if (cfg.out.empty()) {
      out << r.text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        err << "cannot open " << cfg.out << "\n";
        return kExitUsage;
      }
      f << r.text;
    }
    if (r.code == kExitVerification) err << "verification failed\n";
    return r.code;
  } catch (const BudgetExceeded& e) {
    err << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource guard: out of memory\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace parking
