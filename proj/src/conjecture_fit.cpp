#include "parking/conjecture_fit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "parking/genfun.hpp"
#include "parking/moments.hpp"

namespace parking {

MomentAnsatz MomentAnsatz::standard(unsigned k, bool general_a) {
  if (k < 1) throw std::invalid_argument("moment order must be >= 1");
  MomentAnsatz m;
  m.k = k;
  m.symbols = general_a ? std::vector<std::string>{"n", "a"} : std::vector<std::string>{"n"};
  // With a free, a-degree pushes the total degree to 3k-1 and 3k-3 (observed
  // for k <= 4); the degree in n alone stays at the single-symbol bounds.
  m.deg_a = general_a ? 3 * k - 1 : 3 * k / 2;
  m.deg_b = general_a ? 3 * (k - 1) : 3 * (k - 1) / 2;
  return m;
}

std::vector<SymPoly::Exponents> MomentAnsatz::basis(unsigned d) const {
  std::vector<SymPoly::Exponents> out;
  const std::size_t vars = symbols.size();
  for (unsigned total = 0; total <= d; ++total) {
    std::vector<SymPoly::Exponents> layer;
    SymPoly::Exponents e(vars, 0);
    // all exponent vectors with sum == total
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == vars) {
        e[i] = left;
        layer.push_back(e);
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        e[i] = v;
        self(self, i + 1, left - v);
      }
    };
    rec(rec, 0, total);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::size_t MomentAnsatz::unknowns() const { return basis(deg_a).size() + basis(deg_b).size(); }

MomentAnsatz MomentAnsatz::escalated() const {
  MomentAnsatz m = *this;
  ++m.deg_a;
  ++m.deg_b;
  return m;
}

const char* to_string(FitStatus s) {
  switch (s) {
    case FitStatus::verified: return "verified";
    case FitStatus::inconsistent: return "inconsistent";
    case FitStatus::underdetermined: return "underdetermined";
  }
  return "?";
}

void default_grid(const MomentAnsatz& ansatz, unsigned margin, std::vector<unsigned>& ns,
                  std::vector<unsigned>& as) {
  const std::size_t need = ansatz.unknowns() + margin;
  ns.clear();
  as.clear();
  if (ansatz.symbols.size() == 1) {
    as.push_back(1);
    for (unsigned n = 1; n <= need; ++n) ns.push_back(n);
    return;
  }
  const unsigned a_count = ansatz.deg_a + 2;
  for (unsigned a = 1; a <= a_count; ++a) as.push_back(a);
  const unsigned n_count = std::max<unsigned>(ansatz.deg_a + 2, static_cast<unsigned>((need + a_count - 1) / a_count));
  for (unsigned n = 1; n <= n_count; ++n) ns.push_back(n);
}

namespace {

struct MomentData {
  JetTable jets;
  unsigned k;

  Rat ek(const FitPoint& p) const { return factorial_moments(jets.get(p.n, p.a)).at(k - 1); }
};

std::map<std::string, Rat> point_map(const std::vector<std::string>& symbols, const FitPoint& p) {
  std::map<std::string, Rat> m;
  for (const auto& s : symbols) m[s] = s == "n" ? Rat(p.n) : Rat(p.a);
  return m;
}

Rat monomial_value(const SymPoly::Exponents& e, const std::vector<std::string>& symbols, const FitPoint& p) {
  Rat v = 1;
  for (std::size_t i = 0; i < e.size(); ++i) v *= pow_rat(symbols[i] == "n" ? Rat(p.n) : Rat(p.a), e[i]);
  return v;
}

bool identity_holds(const FitResult& fit, const FitPoint& p, const Rat& ek) {
  const auto pt = point_map(fit.symbols, p);
  return fit.A.eval(pt) + fit.B.eval(pt) * expectation_area(p.n, p.a) == ek;
}

FitResult attempt(unsigned k, const MomentAnsatz& ansatz, const std::vector<FitPoint>& points, unsigned margin,
                  int threads) {
  FitResult r;
  r.k = k;
  r.symbols = ansatz.symbols;
  r.deg_a = ansatz.deg_a;
  r.deg_b = ansatz.deg_b;
  r.A = SymPoly(ansatz.symbols);
  r.B = SymPoly(ansatz.symbols);

  const auto basis_a = ansatz.basis(ansatz.deg_a);
  const auto basis_b = ansatz.basis(ansatz.deg_b);
  const std::size_t width = basis_a.size() + basis_b.size();
  const std::size_t fit_rows = points.size() - margin;

  unsigned n_max = 0, a_max = 0;
  for (const auto& p : points) {
    n_max = std::max(n_max, p.n);
    a_max = std::max(a_max, p.a);
  }
  const MomentData data{JetTable(n_max, a_max, k, {threads, 0}), k};

  LinSys sys(width);
  for (std::size_t i = 0; i < fit_rows; ++i) {
    const FitPoint& p = points[i];
    const Rat e1 = expectation_area(p.n, p.a);
    std::vector<Rat> row;
    row.reserve(width);
    for (const auto& e : basis_a) row.push_back(monomial_value(e, ansatz.symbols, p));
    for (const auto& e : basis_b) row.push_back(monomial_value(e, ansatz.symbols, p) * e1);
    sys.add_row(std::move(row), data.ek(p));
    r.samples_used.push_back(p);
  }

  const SolveResult sol = solve_exact(sys);
  if (const auto* u = std::get_if<Underdetermined>(&sol)) {
    r.status = FitStatus::underdetermined;
    r.free_column = u->free_column;
    return r;
  }
  if (const auto* bad = std::get_if<Inconsistent>(&sol)) {
    r.status = FitStatus::inconsistent;
    r.witness = points[bad->row];
    return r;
  }
  const auto& x = std::get<UniqueSolution>(sol).values;
  for (std::size_t i = 0; i < basis_a.size(); ++i) r.A.add_term(basis_a[i], x[i]);
  for (std::size_t i = 0; i < basis_b.size(); ++i) r.B.add_term(basis_b[i], x[basis_a.size() + i]);

  for (std::size_t i = fit_rows; i < points.size(); ++i) {
    if (!identity_holds(r, points[i], data.ek(points[i]))) {
      r.status = FitStatus::inconsistent;
      r.witness = points[i];
      r.holdout_verified.clear();
      return r;
    }
    r.holdout_verified.push_back(points[i]);
  }
  r.status = FitStatus::verified;
  return r;
}

std::vector<FitPoint> grid_points(std::span<const unsigned> ns, std::span<const unsigned> as) {
  std::vector<FitPoint> pts;
  for (unsigned n : ns)
    for (unsigned a : as) pts.push_back({n, a});
  return pts;
}

}  // namespace

FitResult fit_moment(unsigned k, const MomentAnsatz& ansatz, std::span<const unsigned> sample_ns,
                     std::span<const unsigned> sample_as, const FitOptions& opts) {
  if (k < 1 || ansatz.k != k) throw std::invalid_argument("fit_moment: ansatz order mismatch");
  if (std::find(sample_ns.begin(), sample_ns.end(), 0u) != sample_ns.end() ||
      std::find(sample_as.begin(), sample_as.end(), 0u) != sample_as.end())
    throw std::invalid_argument("fit_moment: sample points need n, a >= 1");
  if (ansatz.symbols.size() == 1 && sample_as.size() != 1)
    throw std::invalid_argument("fit_moment: single-symbol ansatz needs exactly one a value");

  std::vector<FitPoint> points = grid_points(sample_ns, sample_as);
  // Fewer rows than unknowns is reported as underdetermined by the solver.
  if (points.size() <= opts.margin)
    throw std::invalid_argument("fit_moment: " + std::to_string(points.size()) + " samples leave nothing to fit after " +
                                std::to_string(opts.margin) + " holdout points");

  FitResult r = attempt(k, ansatz, points, opts.margin, opts.threads);
  if (r.status != FitStatus::inconsistent) return r;

  const MomentAnsatz up = ansatz.escalated();
  std::vector<unsigned> ns(sample_ns.begin(), sample_ns.end());
  while (grid_points(ns, sample_as).size() < up.unknowns() + opts.margin)
    ns.push_back(*std::max_element(ns.begin(), ns.end()) + 1);
  FitResult second = attempt(k, up, grid_points(ns, sample_as), opts.margin, opts.threads);
  second.escalations = 1;
  return second;
}

FitResult fit_moment(unsigned k, bool general_a, const FitOptions& opts) {
  const MomentAnsatz ansatz = MomentAnsatz::standard(k, general_a);
  std::vector<unsigned> ns, as;
  default_grid(ansatz, opts.margin, ns, as);
  return fit_moment(k, ansatz, ns, as, opts);
}

bool verify_fit(FitResult& fit, std::span<const FitPoint> extra, int threads) {
  if (fit.status != FitStatus::verified) throw std::invalid_argument("verify_fit: fit is not verified");
  if (extra.empty()) return true;
  unsigned n_max = 0, a_max = 0;
  for (const auto& p : extra) {
    if (p.n < 1 || p.a < 1) throw std::invalid_argument("verify_fit: points need n, a >= 1");
    n_max = std::max(n_max, p.n);
    a_max = std::max(a_max, p.a);
  }
  const MomentData data{JetTable(n_max, a_max, fit.k, {threads, 0}), fit.k};
  for (const auto& p : extra) {
    if (!identity_holds(fit, p, data.ek(p))) return false;
    fit.holdout_verified.push_back(p);
  }
  return true;
}

LeadingTerm leading_asymptotics(const FitResult& fit) {
  if (fit.status != FitStatus::verified) throw std::invalid_argument("leading_asymptotics: fit is not verified");
  if (fit.symbols != std::vector<std::string>{"n"})
    throw std::invalid_argument("leading_asymptotics: needs a fit in n alone");
  const auto da = fit.A.total_degree();
  const auto db = fit.B.total_degree();
  if (!da && !db) throw std::domain_error("leading_asymptotics: A and B vanish");
  // A contributes integer exponents; B*E_1 tops out at deg B + 3/2, and the
  // lower-order part of E_1 only adds exponents <= deg B + 1.
  LeadingTerm lead_a, lead_b;
  bool have_a = false, have_b = false;
  if (da) {
    lead_a = {fit.A.coeff({*da}), 0, Rat(*da)};
    have_a = true;
  }
  if (db) {
    lead_b = {fit.B.coeff({*db}) / 4, 1, Rat(2 * *db + 3, 2)};
    have_b = true;
  }
  // The two exponents never tie (integer vs odd half-integer). When deg A = deg B + 1
  // the rational part of B*E_1 does meet A's top term, but B's sqrt term dominates both.
  if (!have_b || (have_a && lead_a.exponent > lead_b.exponent)) return lead_a;
  return lead_b;
}

std::string theorem_text(const FitResult& fit) {
  const bool general = fit.symbols.size() > 1;
  const std::string args = general ? "(n,a)" : "(n)";
  std::string out = "E_" + std::to_string(fit.k) + args + " = ";
  const bool a_zero = fit.A.is_zero();
  if (!a_zero) out += fit.A.to_string();
  if (!fit.B.is_zero()) {
    if (!a_zero) out += " + ";
    out += "(" + fit.B.to_string() + ")*E_1" + args;
  }
  if (a_zero && fit.B.is_zero()) out += "0";
  return out;
}

}  // namespace parking
