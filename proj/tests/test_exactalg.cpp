#include <random>

#include "doctest.h"
#include "parking/bigfloat.hpp"
#include "parking/exactalg.hpp"

using namespace parking;

TEST_SUITE("exactalg") {
  TEST_CASE("binomial examples and Pascal's rule") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(5, 9) == 0);
    for (unsigned n = 1; n <= 64; ++n)
      for (unsigned k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }

  TEST_CASE("poly_mul_xshift") {
    CHECK(poly_mul_xshift(PolyX({1, 2}), 2) == PolyX({0, 0, 1, 2}));
    CHECK(poly_mul_xshift(PolyX(), 5).is_zero());
    CHECK(poly_mul_xshift(PolyX({2, 1}), 1) == PolyX({0, 2, 1}));
  }

  TEST_CASE("poly_add_scaled") {
    CHECK(poly_add_scaled(PolyX({1, 1}), PolyX({1, 1}), 1) == PolyX({2, 2}));
    CHECK(poly_add_scaled(PolyX({0, 0, 1}), PolyX({1}), 3) == PolyX({3, 0, 1}));
    const PolyX p({4, 0, -3, 9});
    CHECK(poly_add_scaled(p, PolyX(), 7) == p);
    CHECK(poly_add_scaled(PolyX({1, 2}), PolyX({-1, -2}), 1).is_zero());
  }

  TEST_CASE("PolyX linearity of evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Int> pc(1 + rng() % 8), qc(1 + rng() % 8);
      for (auto& c : pc) c = dist(rng);
      for (auto& c : qc) c = dist(rng);
      const PolyX p(pc), q(qc);
      const Int c = dist(rng);
      const Int x = dist(rng);
      CHECK(poly_add_scaled(p, q, c).eval(x) == p.eval(x) + c * q.eval(x));
      CHECK(poly_mul_xshift(p, 3).eval(x) == p.eval(x) * x * x * x);
    }
  }

  TEST_CASE("PolyX degree and trimming") {
    CHECK_FALSE(PolyX().degree().has_value());
    CHECK(PolyX({1, 0, 0}).degree() == 0u);
    CHECK(PolyX({0, 0, 5}).at_one() == 5);
  }

  TEST_CASE("Rat arithmetic stays exact and canonical") {
    Rat s = 0;
    for (int i = 1; i <= 50; ++i) s += make_rat(1, Int(i) * (i + 1));
    CHECK(s == make_rat(50, 51));
    CHECK(to_string(make_rat(6, 4)) == "3/2");
    CHECK(to_string(make_rat(-4, 2)) == "-2");
    CHECK(parse_rat("10/4") == make_rat(5, 2));
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_int("12x"));
  }

  TEST_CASE("solve_exact examples") {
    LinSys s(2);
    s.add_row({1, 1}, 3);
    s.add_row({1, -1}, 1);
    auto r = solve_exact(s);
    REQUIRE(std::holds_alternative<UniqueSolution>(r));
    CHECK(std::get<UniqueSolution>(r).values == std::vector<Rat>{2, 1});

    LinSys u(2);
    u.add_row({1, 1}, 1);
    CHECK(std::holds_alternative<Underdetermined>(solve_exact(u)));

    LinSys bad(1);
    bad.add_row({1}, 1);
    bad.add_row({1}, 2);
    auto rb = solve_exact(bad);
    REQUIRE(std::holds_alternative<Inconsistent>(rb));
    CHECK(std::get<Inconsistent>(rb).row == 1);
  }

  TEST_CASE("solve_exact recovers planted solutions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t w = 1 + rng() % 6;
      std::vector<Rat> x(w);
      for (auto& v : x) v = make_rat(dist(rng), 1 + rng() % 5);
      LinSys s(w);
      // Vandermonde rows keep the system nonsingular.
      for (std::size_t i = 0; i < w + 2; ++i) {
        std::vector<Rat> row(w);
        Rat rhs = 0, p = 1;
        for (std::size_t j = 0; j < w; ++j, p *= Rat(static_cast<long>(i + 1))) {
          row[j] = p;
          rhs += p * x[j];
        }
        s.add_row(row, rhs);
      }
      auto r = solve_exact(s);
      REQUIRE(std::holds_alternative<UniqueSolution>(r));
      CHECK(std::get<UniqueSolution>(r).values == x);
    }
  }

  TEST_CASE("SymPoly evaluation examples") {
    const std::vector<std::string> syms{"a"};
    const SymPoly a = SymPoly::variable(syms, "a");
    const SymPoly a3 = a + SymPoly::constant(syms, 3);
    const SymPoly p = a * a3 * a3;
    CHECK(p.eval({{"a", 1}}) == 16);
    CHECK((a * (a + SymPoly::constant(syms, 2))).eval({{"a", 2}}) == 8);
    const SymPoly q = p + SymPoly::constant(syms, make_rat(7, 3));
    CHECK(q.eval({{"a", 0}}) == make_rat(7, 3));
    CHECK_THROWS_AS(p.eval({}), std::invalid_argument);
    CHECK(p.to_string() == "a^3+6a^2+9a");
  }

  TEST_CASE("SymPoly shift and specialization") {
    const std::vector<std::string> syms{"n", "a"};
    const SymPoly n = SymPoly::variable(syms, "n");
    const SymPoly a = SymPoly::variable(syms, "a");
    const SymPoly p = n * n * a + a * make_rat(1, 2);
    const SymPoly s = p.shifted("n", 2);
    for (int x = -3; x <= 3; ++x)
      CHECK(s.eval({{"n", x}, {"a", 5}}) == p.eval({{"n", x + 2}, {"a", 5}}));
    CHECK(p.specialized("a", 2).eval({{"n", 3}, {"a", 0}}) == 19);
    CHECK(p.total_degree() == 3u);
    CHECK(p.degree_in("a") == 1u);
  }

  TEST_CASE("interpolation reproduces a polynomial") {
    std::vector<Rat> xs, ys;
    for (int x = 0; x <= 4; ++x) {
      xs.push_back(x);
      ys.push_back(Rat(x * x * x) - Rat(2 * x) + make_rat(1, 3));
    }
    const SymPoly p = interpolate("t", xs, ys);
    CHECK(p.eval({{"t", 10}}) == Rat(1000 - 20) + make_rat(1, 3));
    CHECK(p.total_degree() == 3u);
  }

  TEST_CASE("BigFloat renders without exponent") {
    const BigFloat x(make_rat(1, 3));
    CHECK(x.to_decimal(5) == "0.33333");
    CHECK(BigFloat(Rat(12345)).to_decimal(3).substr(0, 3) == "123");
    CHECK(BigFloat::pi().to_decimal(6) == "3.14159");
  }
}
