#pragma once

// Exact arithmetic: big integers and rationals (GMP-backed), dense integer
// polynomials in x, sparse multivariate rational polynomials and an exact
// rational linear solver.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace parking {

using Int = mpz_class;
using Rat = mpq_class;

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);
Int pow_int(const Int& base, unsigned e);
Rat pow_rat(const Rat& base, unsigned e);

// Decimal strings; rationals render as "num/den", or "num" when den == 1.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

// Rat built from num/den, canonicalized.
Rat make_rat(const Int& num, const Int& den = 1);

/// Dense polynomial in x with integer coefficients. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient vector and no
/// degree.
class PolyX {
 public:
  PolyX() = default;
  explicit PolyX(std::vector<Int> coeffs);

  static PolyX constant(const Int& c);
  static PolyX monomial(const Int& c, std::size_t exponent);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^m; zero beyond the degree.
  Int coeff(std::size_t m) const;
  std::span<const Int> coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  Int at_one() const;

  // this += c * x^shift * q
  void add_scaled_shifted(const PolyX& q, const Int& c, std::size_t shift);

  // x^offset * this(1/x); offset must be >= degree.
  PolyX reversed(std::size_t offset) const;

  friend bool operator==(const PolyX&, const PolyX&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

PolyX poly_mul_xshift(const PolyX& p, std::size_t e);
PolyX poly_add_scaled(const PolyX& p, const PolyX& q, const Int& c);

/// Sparse polynomial with rational coefficients over a fixed, declared list
/// of symbol names. Exponent vectors are indexed in declaration order.
class SymPoly {
 public:
  using Exponents = std::vector<unsigned>;

  SymPoly() = default;
  explicit SymPoly(std::vector<std::string> symbols);

  static SymPoly constant(std::vector<std::string> symbols, const Rat& c);
  static SymPoly variable(std::vector<std::string> symbols, const std::string& name);
  static SymPoly monomial(std::vector<std::string> symbols, Exponents exps, const Rat& c);

  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Exponents& exps) const;
  void add_term(const Exponents& exps, const Rat& c);

  std::optional<unsigned> total_degree() const;
  std::optional<unsigned> degree_in(const std::string& name) const;
  std::size_t symbol_index(const std::string& name) const;

  // Throws std::invalid_argument when a declared symbol is unassigned.
  Rat eval(const std::map<std::string, Rat>& point) const;

  // Substitutes name -> name + shift.
  SymPoly shifted(const std::string& name, const Rat& shift) const;

  // Fixes one symbol to a value; the symbol stays declared with exponent 0.
  SymPoly specialized(const std::string& name, const Rat& value) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rat& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rat& c) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  // Expanded form, descending total degree then descending lexicographic
  // exponents, e.g. "a^3+6a^2+9a" or "(5/12)n^3-(1/12)n^2-(1/3)n".
  std::string to_string() const;

 private:
  void check_compatible(const SymPoly& o) const;

  std::vector<std::string> symbols_;
  std::map<Exponents, Rat> terms_;
};

// Univariate interpolation through (xs[i], ys[i]) with distinct xs.
SymPoly interpolate(const std::string& symbol, std::span<const Rat> xs, std::span<const Rat> ys);

/// Rows of an exact linear system sharing one column count.
class LinSys {
 public:
  explicit LinSys(std::size_t width) : width_(width) {}

  void add_row(std::vector<Rat> coeffs, Rat rhs);

  std::size_t width() const { return width_; }
  std::size_t rows() const { return rhs_.size(); }
  const std::vector<Rat>& row(std::size_t i) const { return coeffs_[i]; }
  const Rat& rhs(std::size_t i) const { return rhs_[i]; }

 private:
  std::size_t width_;
  std::vector<std::vector<Rat>> coeffs_;
  std::vector<Rat> rhs_;
};

struct UniqueSolution {
  std::vector<Rat> values;
};
struct Underdetermined {
  std::size_t free_column;
};
struct Inconsistent {
  std::size_t row;  // index into the original system
};
using SolveResult = std::variant<UniqueSolution, Underdetermined, Inconsistent>;

// Gaussian elimination over Q. Inconsistency takes precedence over a free
// column when both occur.
SolveResult solve_exact(const LinSys& sys);

}  // namespace parking
