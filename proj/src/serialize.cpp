#include "parking/serialize.hpp"

#include <sstream>

namespace parking {

namespace {

json points_json(const std::vector<FitPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.n, p.a});
  return arr;
}

std::vector<FitPoint> points_from(const json& arr) {
  std::vector<FitPoint> out;
  for (const auto& p : arr) out.push_back({p.at(0).get<unsigned>(), p.at(1).get<unsigned>()});
  return out;
}

json rat_array(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(to_string(r));
  return arr;
}

}  // namespace

// ---------------------------------------------------------------- histograms

json to_json(const AreaHistogram& h) {
  json counts = json::array();
  for (const auto& [m, c] : h.counts) counts.push_back({{"area", m}, {"count", to_string(c)}});
  return {{"n", h.n}, {"a", h.a}, {"total", to_string(h.total())}, {"counts", counts}};
}

AreaHistogram histogram_from_json(const json& j) {
  AreaHistogram h;
  h.n = j.at("n").get<unsigned>();
  h.a = j.at("a").get<unsigned>();
  for (const auto& row : j.at("counts"))
    h.counts[row.at("area").get<std::uint64_t>()] = parse_int(row.at("count").get<std::string>());
  if (h.total() != parse_int(j.at("total").get<std::string>()))
    throw std::invalid_argument("histogram JSON: total does not match counts");
  return h;
}

std::string to_csv(const AreaHistogram& h) {
  std::string out = "area,count\n";
  for (const auto& [m, c] : h.counts) out += std::to_string(m) + "," + to_string(c) + "\n";
  return out;
}

AreaHistogram to_histogram(const AreaGenFun& q) {
  AreaHistogram h{q.n, q.a, {}};
  const auto c = q.poly.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m)
    if (c[m] != 0) h.counts[m] = c[m];
  return h;
}

// ---------------------------------------------------------------- jets

json to_json(const JetAtOne& j) {
  json values = json::array();
  for (const auto& v : j.values) values.push_back(to_string(v));
  return {{"n", j.n}, {"a", j.a}, {"K", j.order}, {"values", values}};
}

JetAtOne jet_from_json(const json& j) {
  JetAtOne out;
  out.n = j.at("n").get<unsigned>();
  out.a = j.at("a").get<unsigned>();
  out.order = j.at("K").get<unsigned>();
  for (const auto& v : j.at("values")) out.values.push_back(parse_int(v.get<std::string>()));
  if (out.values.size() != out.order + 1) throw std::invalid_argument("jet JSON: value count != K+1");
  return out;
}

// ---------------------------------------------------------------- moments

json to_json(const MomentTable& t, unsigned precision) {
  json split = json::array();
  json scaled = json::array();
  for (const auto& s : t.scaled) {
    split.push_back({{"j", s.j},
                     {"central_j", to_string(s.central)},
                     {"var_power", to_string(make_rat(s.var_power_twice, 2))}});
    scaled.push_back(scaled_decimal(t, s.j, precision));
  }
  return {{"n", t.n},
          {"a", t.a},
          {"K", t.order},
          {"factorial", rat_array(t.factorial)},
          {"raw", rat_array(t.raw)},
          {"central", rat_array(t.central)},
          {"variance_zero", t.variance_zero},
          {"scaled_split", split},
          {"scaled", scaled}};
}

std::string to_csv(const MomentTable& t, unsigned precision) {
  std::string out = "j,factorial,raw,central,scaled\n";
  for (unsigned j = 1; j <= t.order; ++j) {
    out += std::to_string(j) + "," + to_string(t.factorial[j - 1]) + "," + to_string(t.raw[j - 1]) + "," +
           to_string(t.central[j - 1]) + ",";
    out += t.scaled.empty() ? "undefined" : scaled_decimal(t, j, precision);
    out += "\n";
  }
  return out;
}

std::string to_text(const MomentTable& t, unsigned precision) {
  std::ostringstream os;
  os << "n = " << t.n << ", a = " << t.a << ", K = " << t.order << "\n";
  for (unsigned j = 1; j <= t.order; ++j) {
    os << "E_" << j << " = " << to_string(t.factorial[j - 1]) << "   raw = " << to_string(t.raw[j - 1])
       << "   central = " << to_string(t.central[j - 1]);
    if (!t.scaled.empty()) os << "   scaled = " << scaled_decimal(t, j, precision);
    os << "\n";
  }
  if (t.variance_zero) os << "variance is zero: scaled moments undefined\n";
  return os.str();
}

json to_json(const ScaledHistogram& h) {
  json rows = json::array();
  for (const auto& r : h.rows)
    rows.push_back({{"area", r.area}, {"count", to_string(r.count)}, {"x", r.x}, {"density", r.density}});
  return {{"n", h.n},
          {"a", h.a},
          {"total", to_string(h.total)},
          {"mean", to_string(h.mean)},
          {"variance", to_string(h.variance)},
          {"rows", rows}};
}

std::string to_csv(const ScaledHistogram& h) {
  std::string out = "area,count,x,density\n";
  for (const auto& r : h.rows)
    out += std::to_string(r.area) + "," + to_string(r.count) + "," + r.x + "," + r.density + "\n";
  return out;
}

// ---------------------------------------------------------------- fits

json to_json(const SymPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
  return arr;
}

SymPoly sympoly_from_json(const std::vector<std::string>& symbols, const json& j) {
  SymPoly p(symbols);
  for (const auto& t : j)
    p.add_term(t.at("exponents").get<SymPoly::Exponents>(), parse_rat(t.at("coefficient").get<std::string>()));
  return p;
}

json to_json(const FitResult& f) {
  json j = {{"k", f.k},
            {"symbols", f.symbols},
            {"deg_A", f.deg_a},
            {"deg_B", f.deg_b},
            {"A", to_json(f.A)},
            {"B", to_json(f.B)},
            {"A_text", f.A.to_string()},
            {"B_text", f.B.to_string()},
            {"status", to_string(f.status)},
            {"escalations", f.escalations},
            {"samples", points_json(f.samples_used)},
            {"holdout", points_json(f.holdout_verified)}};
  if (f.witness) j["witness"] = {f.witness->n, f.witness->a};
  if (f.free_column) j["free_column"] = *f.free_column;
  return j;
}

FitResult fit_from_json(const json& j) {
  FitResult f;
  f.k = j.at("k").get<unsigned>();
  f.symbols = j.at("symbols").get<std::vector<std::string>>();
  f.deg_a = j.at("deg_A").get<unsigned>();
  f.deg_b = j.at("deg_B").get<unsigned>();
  f.A = sympoly_from_json(f.symbols, j.at("A"));
  f.B = sympoly_from_json(f.symbols, j.at("B"));
  const auto status = j.at("status").get<std::string>();
  if (status == "verified") f.status = FitStatus::verified;
  else if (status == "inconsistent") f.status = FitStatus::inconsistent;
  else if (status == "underdetermined") f.status = FitStatus::underdetermined;
  else throw std::invalid_argument("fit JSON: unknown status " + status);
  f.escalations = j.value("escalations", 0u);
  f.samples_used = points_from(j.at("samples"));
  f.holdout_verified = points_from(j.at("holdout"));
  if (j.contains("witness")) f.witness = FitPoint{j["witness"].at(0).get<unsigned>(), j["witness"].at(1).get<unsigned>()};
  if (j.contains("free_column")) f.free_column = j["free_column"].get<std::size_t>();
  return f;
}

std::string to_csv(const FitResult& f) {
  std::string out = "part,exponents,coefficient\n";
  auto emit = [&](const char* part, const SymPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      std::string ex;
      for (std::size_t i = 0; i < e.size(); ++i) ex += (i ? " " : "") + std::to_string(e[i]);
      out += std::string(part) + "," + ex + "," + to_string(c) + "\n";
    }
  };
  emit("A", f.A);
  emit("B", f.B);
  return out;
}

std::string to_text(const FitResult& f) {
  std::ostringstream os;
  os << "status: " << to_string(f.status);
  if (f.escalations) os << " (after degree escalation)";
  os << "\n";
  if (f.status == FitStatus::verified) {
    os << theorem_text(f) << "\n";
    os << "fitted on " << f.samples_used.size() << " points, held out " << f.holdout_verified.size() << "\n";
    if (f.symbols.size() == 1) {
      const LeadingTerm lt = leading_asymptotics(f);
      os << "asymptotically " << to_string(lt.coefficient) << (lt.h ? "*sqrt(2*pi)" : "") << " * n^("
         << to_string(lt.exponent) << ")\n";
    }
  } else if (f.witness) {
    os << "witness point: n=" << f.witness->n << ", a=" << f.witness->a << "\n";
  } else if (f.free_column) {
    os << "free column " << *f.free_column << ": add sample points\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- airy

json to_json(const AiryMoment& m) {
  return {{"k", m.k}, {"r", to_string(m.r)}, {"h", m.h}, {"text", m.to_string()}};
}

json to_json(const AsymptoticReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"n", row.n},
                    {"E_k", to_string(row.moment)},
                    {"ratio", row.ratio},
                    {"deviation", row.deviation}});
  json summary = json::array();
  for (const auto& s : r.per_k)
    summary.push_back({{"k", s.k}, {"decreasing", s.decreasing}, {"below_threshold", s.below_threshold}});
  json e = json::array();
  for (const auto& m : airy_moments(r.K)) e.push_back(to_json(m));
  return {{"K", r.K}, {"grid", r.grid}, {"threshold", r.threshold}, {"airy", e}, {"rows", rows}, {"summary", summary}};
}

std::string to_csv(const AsymptoticReport& r) {
  std::string out = "k,n,ratio,deviation\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.k) + "," + std::to_string(row.n) + "," + row.ratio + "," + row.deviation + "\n";
  return out;
}

std::string to_text(const AsymptoticReport& r) {
  std::ostringstream os;
  const auto e = airy_moments(r.K);
  for (const auto& s : r.per_k) {
    os << "k=" << s.k << "  e_k=" << e[s.k - 1].to_string() << "  decreasing=" << (s.decreasing ? "yes" : "no")
       << "  below " << r.threshold << " at n=" << r.grid.back() << ": " << (s.below_threshold ? "yes" : "no") << "\n";
  }
  for (const auto& row : r.rows)
    os << "  k=" << row.k << " n=" << row.n << " ratio=" << row.ratio << " deviation=" << row.deviation << "\n";
  return os.str();
}

}  // namespace parking
