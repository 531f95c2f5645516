#include "parking/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parking {

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int pow_int(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, unsigned e) {
  Rat r = make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
  return r;
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& v) { return v.get_str(10); }

Int parse_int(const std::string& s) {
  Int r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return r;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return make_rat(parse_int(s.substr(0, slash)), den);
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- PolyX

PolyX::PolyX(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyX PolyX::constant(const Int& c) { return PolyX(std::vector<Int>{c}); }

PolyX PolyX::monomial(const Int& c, std::size_t exponent) {
  std::vector<Int> v(exponent + 1);
  v[exponent] = c;
  return PolyX(std::move(v));
}

void PolyX::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> PolyX::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Int PolyX::coeff(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : Int(0); }

Int PolyX::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Int PolyX::at_one() const {
  Int acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

void PolyX::add_scaled_shifted(const PolyX& q, const Int& c, std::size_t shift) {
  if (q.is_zero() || c == 0) return;
  const std::size_t need = q.coeffs_.size() + shift;
  if (coeffs_.size() < need) coeffs_.resize(need);
  mpz_srcptr cm = c.get_mpz_t();
  for (std::size_t m = 0; m < q.coeffs_.size(); ++m)
    mpz_addmul(coeffs_[m + shift].get_mpz_t(), q.coeffs_[m].get_mpz_t(), cm);
  trim();
}

PolyX PolyX::reversed(std::size_t offset) const {
  if (is_zero()) return {};
  if (offset + 1 < coeffs_.size()) throw std::invalid_argument("reversal offset below degree");
  std::vector<Int> out(offset + 1);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) out[offset - m] = coeffs_[m];
  return PolyX(std::move(out));
}

PolyX poly_mul_xshift(const PolyX& p, std::size_t e) {
  PolyX r;
  r.add_scaled_shifted(p, 1, e);
  return r;
}

PolyX poly_add_scaled(const PolyX& p, const PolyX& q, const Int& c) {
  PolyX r = p;
  r.add_scaled_shifted(q, c, 0);
  return r;
}

// ---------------------------------------------------------------- SymPoly

SymPoly::SymPoly(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

SymPoly SymPoly::constant(std::vector<std::string> symbols, const Rat& c) {
  SymPoly p(std::move(symbols));
  p.add_term(Exponents(p.symbols_.size(), 0), c);
  return p;
}

SymPoly SymPoly::variable(std::vector<std::string> symbols, const std::string& name) {
  SymPoly p(std::move(symbols));
  Exponents e(p.symbols_.size(), 0);
  e[p.symbol_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

SymPoly SymPoly::monomial(std::vector<std::string> symbols, Exponents exps, const Rat& c) {
  SymPoly p(std::move(symbols));
  p.add_term(exps, c);
  return p;
}

std::size_t SymPoly::symbol_index(const std::string& name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) throw std::invalid_argument("undeclared symbol: " + name);
  return static_cast<std::size_t>(it - symbols_.begin());
}

Rat SymPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymPoly::add_term(const Exponents& exps, const Rat& c) {
  if (exps.size() != symbols_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<unsigned> SymPoly::total_degree() const {
  std::optional<unsigned> best;
  for (const auto& [e, c] : terms_) {
    unsigned d = std::accumulate(e.begin(), e.end(), 0u);
    if (!best || d > *best) best = d;
  }
  return best;
}

std::optional<unsigned> SymPoly::degree_in(const std::string& name) const {
  const std::size_t i = symbol_index(name);
  std::optional<unsigned> best;
  for (const auto& [e, c] : terms_)
    if (!best || e[i] > *best) best = e[i];
  return best;
}

Rat SymPoly::eval(const std::map<std::string, Rat>& point) const {
  std::vector<Rat> values;
  values.reserve(symbols_.size());
  for (const auto& s : symbols_) {
    auto it = point.find(s);
    if (it == point.end()) throw std::invalid_argument("no value for symbol " + s);
    values.push_back(it->second);
  }
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= pow_rat(values[i], e[i]);
    acc += t;
  }
  return acc;
}

SymPoly SymPoly::shifted(const std::string& name, const Rat& shift) const {
  const std::size_t idx = symbol_index(name);
  SymPoly out(symbols_);
  for (const auto& [e, c] : terms_) {
    // (s + shift)^d expanded by the binomial theorem
    const unsigned d = e[idx];
    for (unsigned j = 0; j <= d; ++j) {
      Exponents ne = e;
      ne[idx] = j;
      out.add_term(ne, c * Rat(binomial(d, j)) * pow_rat(shift, d - j));
    }
  }
  return out;
}

SymPoly SymPoly::specialized(const std::string& name, const Rat& value) const {
  const std::size_t idx = symbol_index(name);
  SymPoly out(symbols_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[idx] = 0;
    out.add_term(ne, c * pow_rat(value, e[idx]));
  }
  return out;
}

void SymPoly::check_compatible(const SymPoly& o) const {
  if (symbols_ != o.symbols_) throw std::invalid_argument("SymPoly symbol sets differ");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.check_compatible(b);
  SymPoly out(a.symbols_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      SymPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rat>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
    unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    const bool is_const = std::all_of(e.begin(), e.end(), [](unsigned d) { return d == 0; });
    if (negative) out += "-";
    else if (!first) out += "+";
    first = false;
    if (mag.get_den() != 1) {
      out += "(" + parking::to_string(mag) + ")";
    } else if (mag != 1 || is_const) {
      out += parking::to_string(mag);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += symbols_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

SymPoly interpolate(const std::string& symbol, std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolate: bad point set");
  // Newton divided differences, expanded in Horner order.
  std::vector<Rat> dd(ys.begin(), ys.end());
  const std::size_t m = xs.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      Rat h = xs[i] - xs[i - level];
      if (h == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / h;
    }
  const std::vector<std::string> syms{symbol};
  const SymPoly x = SymPoly::variable(syms, symbol);
  SymPoly acc = SymPoly::constant(syms, dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    acc = acc * (x - SymPoly::constant(syms, xs[i]));
    acc += SymPoly::constant(syms, dd[i]);
  }
  return acc;
}

// ---------------------------------------------------------------- LinSys

void LinSys::add_row(std::vector<Rat> coeffs, Rat rhs) {
  if (coeffs.size() != width_) throw std::invalid_argument("LinSys row width mismatch");
  coeffs_.push_back(std::move(coeffs));
  rhs_.push_back(std::move(rhs));
}

namespace {

std::size_t rat_size(const Rat& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

}  // namespace

SolveResult solve_exact(const LinSys& sys) {
  if (sys.rows() == 0) throw std::invalid_argument("solve_exact: empty system");
  const std::size_t w = sys.width();
  const std::size_t h = sys.rows();

  // Augmented matrix; origin tracks the source row of each working row.
  std::vector<std::vector<Rat>> m(h);
  std::vector<std::size_t> origin(h);
  for (std::size_t i = 0; i < h; ++i) {
    m[i] = sys.row(i);
    m[i].push_back(sys.rhs(i));
    origin[i] = i;
  }

  std::vector<std::size_t> pivot_col;
  std::optional<std::size_t> free_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w && r < h; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = r; i < h; ++i) {
      if (m[i][c] == 0) continue;
      if (!best || rat_size(m[i][c]) < rat_size(m[*best][c])) best = i;
    }
    if (!best) {
      if (!free_col) free_col = c;
      continue;
    }
    std::swap(m[r], m[*best]);
    std::swap(origin[r], origin[*best]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j <= w; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < h; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j <= w; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  // Rows below the rank are all-zero on the left.
  std::optional<std::size_t> bad_row;
  for (std::size_t i = r; i < h; ++i)
    if (m[i][w] != 0 && (!bad_row || origin[i] < *bad_row)) bad_row = origin[i];
  if (bad_row) return Inconsistent{*bad_row};

  if (pivot_col.size() < w) {
    if (!free_col) {
      // Every column up to the last pivot had one; the first unpivoted column follows.
      std::vector<bool> has(w, false);
      for (auto c : pivot_col) has[c] = true;
      for (std::size_t c = 0; c < w; ++c)
        if (!has[c]) {
          free_col = c;
          break;
        }
    }
    return Underdetermined{*free_col};
  }

  std::vector<Rat> x(w);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][w];
  return UniqueSolution{std::move(x)};
}

}  // namespace parking
