#include "doctest.h"
#include "parking/bigfloat.hpp"
#include "parking/counting.hpp"
#include "parking/genfun.hpp"
#include "parking/moments.hpp"
#include "parking/parking_core.hpp"

using namespace parking;

namespace {

// Mean of f(area) taken directly over the histogram.
template <class F>
Rat direct_mean(const PolyX& q, F f) {
  Rat s = 0;
  const auto c = q.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m) s += Rat(c[m]) * f(Rat(static_cast<long>(m)));
  return s / Rat(q.at_one());
}

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("w_value examples") {
    CHECK(w_value(1) == 0);
    CHECK(w_value(2) == 1);
    CHECK(w_value(3) == make_rat(8, 3));
  }

  TEST_CASE("expectation examples") {
    CHECK(expectation_area(1, 1) == 0);
    CHECK(expectation_area(2, 1) == make_rat(1, 3));
    CHECK(expectation_area(3, 1) == make_rat(15, 16));
    CHECK(expectation_sum(2, 1) == make_rat(8, 3));
    CHECK(expectation_sum(1, 1) == 1);
    CHECK(expectation_sum(3, 1) == make_rat(81, 16));
    for (unsigned n = 1; n <= 20; ++n)
      for (unsigned a = 1; a <= 4; ++a)
        CHECK(expectation_sum(n, a) + expectation_area(n, a) == Rat(static_cast<unsigned long>(sum_plus_area(n, a))));
  }

  TEST_CASE("p_prime_closed examples and derivative of the sum polynomial") {
    CHECK(p_prime_closed(1, 1) == 1);
    CHECK(p_prime_closed(2, 1) == 8);
    CHECK(p_prime_closed(3, 1) == 81);
    for (unsigned n = 1; n <= 10; ++n)
      for (unsigned a = 1; a <= 4; ++a) {
        const PolyX s = sum_genfun(n, a);
        Int d = 0;
        for (std::size_t m = 1; m < s.coeffs().size(); ++m) d += s.coeffs()[m] * Int(static_cast<unsigned long>(m));
        CHECK(p_prime_closed(n, a) == d);
      }
  }

  TEST_CASE("expectation agrees with jets and with the W relation") {
    const JetTable t(40, 5, 1);
    for (unsigned n = 1; n <= 40; ++n)
      for (unsigned a = 1; a <= 5; ++a)
        CHECK(expectation_area(n, a) == make_rat(t.get(n, a).values[1], t.get(n, a).values[0]));
    for (unsigned n = 1; n <= 60; ++n) CHECK(expectation_area(n, 1) == make_rat(-Int(n), 2) + w_value(n + 1) / 2);
  }

  TEST_CASE("W_n approaches sqrt(2 pi)/2 n^(3/2)") {
    auto dev = [](unsigned n) {
      const BigFloat lead = BigFloat(Rat(2)) * BigFloat::pi();
      const BigFloat denom = lead.sqrt() * BigFloat(make_rat(1, 2)) * BigFloat(Rat(n)).pow(make_rat(3, 2));
      return (BigFloat(w_value(n)) / denom - BigFloat(Rat(1))).abs();
    };
    CHECK(dev(4000) < dev(400));
  }

  TEST_CASE("factorial_moments examples") {
    CHECK(factorial_moments(3, 1, 2) == std::vector<Rat>{make_rat(15, 16), make_rat(3, 4)});
    CHECK(factorial_moments(2, 1, 2) == std::vector<Rat>{make_rat(1, 3), 0});
    CHECK(factorial_moments(1, 1, 4) == std::vector<Rat>(4, 0));
    CHECK_THROWS_AS(factorial_moments(3, 1, 0), std::invalid_argument);
  }

  TEST_CASE("convert_moments examples") {
    const std::vector<Rat> f{make_rat(15, 16), make_rat(3, 4)};
    const MomentTable t = convert_moments(f);
    CHECK(t.raw == std::vector<Rat>{make_rat(15, 16), make_rat(27, 16)});
    CHECK(t.central[0] == 0);
    CHECK(t.central[1] == make_rat(207, 256));
    CHECK_FALSE(t.variance_zero);

    const MomentTable z = convert_moments(std::vector<Rat>(3, 0));
    CHECK(z.variance_zero);
    CHECK(z.scaled.empty());
  }

  TEST_CASE("moment conversions match direct computation from Q") {
    for (unsigned n = 2; n <= 20; n += 3) {
      const PolyX q = area_genfun(n, 1).poly;
      const MomentTable t = convert_moments(factorial_moments(n, 1, 5));
      const Rat mu = t.mean();
      for (unsigned j = 1; j <= 5; ++j) {
        CHECK(t.raw[j - 1] == direct_mean(q, [j](const Rat& x) { return pow_rat(x, j); }));
        CHECK(t.central[j - 1] == direct_mean(q, [j, &mu](const Rat& x) { return pow_rat(x - mu, j); }));
      }
      CHECK(scaled_decimal(t, 2, 15) == "1.00000000000000");
    }
  }

  TEST_CASE("scaled_histogram examples") {
    const ScaledHistogram h2 = scaled_histogram(2, 1, 10);
    REQUIRE(h2.rows.size() == 2);
    CHECK(h2.rows[0].count == 2);
    CHECK(h2.rows[1].count == 1);
    CHECK(h2.mean == make_rat(1, 3));
    const ScaledHistogram h3 = scaled_histogram(3, 1, 10);
    REQUIRE(h3.rows.size() == 4);
    CHECK(h3.rows[3].count == 1);
    CHECK_THROWS_AS(scaled_histogram(1, 1, 10), std::invalid_argument);
  }
}
