#include <doctest.h>

#include "mirror/json_io.hpp"
#include "mirror/periods.hpp"
#include "mirror/series.hpp"
#include "mirror/yukawa.hpp"
#include "support.hpp"

using namespace mirror;
using testing_support::big;
using testing_support::SmallRationals;

namespace {

PowerSeries z_series(std::vector<Rational> c) { return PowerSeries(Variable::z, std::move(c)); }
PowerSeries q_series(std::vector<Rational> c) { return PowerSeries(Variable::q, std::move(c)); }

// Independent Lambert synthesis: sum of n_d d^ell (q^d + q^{2d} + ...).
PowerSeries synthesize_by_expansion(const std::vector<Rational>& numbers, int ell, int truncation) {
  PowerSeries out(Variable::q, truncation);
  for (size_t i = 0; i < numbers.size(); ++i) {
    int d = static_cast<int>(i) + 1;
    Rational weight = numbers[i];
    for (int e = 0; e < ell; ++e) weight *= d;
    out += lambert_expand(d, truncation) * weight;
  }
  return out;
}

// Compositional inverse of f = z + h(z) by fixed-point iteration g = q - h(g).
PowerSeries revert_by_iteration(const PowerSeries& f) {
  int t = f.truncation();
  PowerSeries h = f - PowerSeries::monomial(Variable::z, t, 1);
  PowerSeries q = PowerSeries::monomial(Variable::q, t, 1);
  PowerSeries g = q;
  for (int i = 0; i < t; ++i) g = q - h.compose(g);
  return g;
}

}  // namespace

TEST_SUITE("exact_series") {
  TEST_CASE("rationals are canonical") {
    Rational r = make_rational(6, -4);
    CHECK(to_string(r) == "-3/2");
    CHECK(r.get_den() > 0);
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("+12/3")) == "4");
    CHECK_THROWS_AS(make_rational(1, 0), precondition_error);
    CHECK_THROWS_AS(parse_rational("1/0"), precondition_error);
    CHECK_THROWS_AS(parse_rational("x"), precondition_error);
  }

  TEST_CASE("products, inverses and truncation") {
    auto p = z_series({1, 1, 0, 0}) * z_series({1, -1, 0, 0});
    CHECK(p == z_series({1, 0, -1, 0}));
    auto g = PowerSeries::one(Variable::z, 6) / z_series({1, -1, 0, 0, 0, 0, 0});
    for (int k = 0; k <= 6; ++k) CHECK(g[k] == 1);

    auto e0 = periods::holomorphic_period(5, 10);
    CHECK(e0 * e0.inverse() == PowerSeries::one(Variable::z, 10));

    auto shorter = z_series({1, 2}) + z_series({1, 2, 3, 4});
    CHECK(shorter.truncation() == 1);
    CHECK_THROWS_AS(z_series({1, 2}) + q_series({1, 2}), precondition_error);
    CHECK_THROWS_AS(z_series({0, 1}).inverse(), precondition_error);
  }

  TEST_CASE("exp and log") {
    CHECK(exp_series(PowerSeries(Variable::z, 5)) == PowerSeries::one(Variable::z, 5));
    auto z = PowerSeries::monomial(Variable::z, 7, 1);
    CHECK(log_series(exp_series(z)) == z);
    auto e = exp_series(z_series({0, 770, 0}));
    CHECK(e == z_series({1, 770, 296450}));
    CHECK_THROWS_AS(exp_series(z_series({1, 1})), precondition_error);
    CHECK_THROWS_AS(log_series(z_series({2, 1})), precondition_error);
  }

  TEST_CASE("exp and log are mutually inverse on random series") {
    SmallRationals rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = rng.series(Variable::z, 8);
      a[0] = 0;
      CHECK(log_series(exp_series(a)) == a);
      auto b = a;
      b[0] = 1;
      CHECK(exp_series(log_series(b)) == b);
    }
  }

  TEST_CASE("reversion") {
    auto z = PowerSeries::monomial(Variable::z, 6, 1);
    CHECK(revert(z) == PowerSeries::monomial(Variable::q, 6, 1));
    auto r = revert(z_series({0, 1, 1, 0, 0}));
    CHECK(r == q_series({0, 1, -1, 2, -5}));
    CHECK(r == revert_by_iteration(z_series({0, 1, 1, 0, 0})));
    CHECK_THROWS_AS(revert(z_series({1, 1, 0})), precondition_error);
    CHECK_THROWS_AS(revert(z_series({0, 2, 0})), precondition_error);
  }

  TEST_CASE("reversion is a two-sided inverse on random series") {
    SmallRationals rng(12);
    for (int trial = 0; trial < 15; ++trial) {
      auto f = rng.series(Variable::z, 7);
      f[0] = 0;
      f[1] = 1;
      auto g = revert(f);
      CHECK(g == revert_by_iteration(f));
      CHECK(f.compose(g) == PowerSeries::monomial(Variable::q, 7, 1));
      CHECK(g.compose(f) == PowerSeries::monomial(Variable::z, 7, 1));
    }
  }

  TEST_CASE("reverting the quintic canonical coordinate gives z(q)") {
    auto map = yukawa::mirror_map(periods::frobenius_basis(5, 10));
    CHECK(map.q_of_z[1] == 1);
    CHECK(map.q_of_z[2] == 770);
    CHECK(map.z_of_q[2] == -770);
    CHECK(revert(map.q_of_z) == map.z_of_q);
    CHECK(map.q_of_z.compose(map.z_of_q) == PowerSeries::monomial(Variable::q, 10, 1));
  }

  TEST_CASE("theta on power and log series") {
    CHECK(theta(PowerSeries::monomial(Variable::z, 5, 3)) == PowerSeries::monomial(Variable::z, 5, 3, 3));
    auto log_z = LogSeries::log_power(Variable::z, 4, 1);
    CHECK(theta(log_z) == LogSeries(PowerSeries::one(Variable::z, 4)));

    auto z = PowerSeries::monomial(Variable::z, 4, 1);
    auto f = LogSeries::log_power(Variable::z, 4, 2) * z;
    auto expected = LogSeries(std::vector<PowerSeries>{PowerSeries(Variable::z, 4), 2 * z, z});
    CHECK(theta(f) == expected);
  }

  TEST_CASE("theta is additive and obeys Leibniz") {
    SmallRationals rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = rng.series(Variable::q, 9);
      auto b = rng.series(Variable::q, 9);
      CHECK(theta(a + b) == theta(a) + theta(b));
      CHECK(theta(a * b) == theta(a) * b + a * theta(b));
      LogSeries la({a, b});
      LogSeries lb({b, a, a});
      CHECK(theta(la * lb) == theta(la) * lb + la * theta(lb));
    }
  }

  TEST_CASE("ring axioms on random series") {
    SmallRationals rng(14);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = rng.series(Variable::w, 8);
      auto b = rng.series(Variable::w, 8);
      auto c = rng.series(Variable::w, 8);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == PowerSeries(Variable::w, 8));
      if (c[0] != 0) CHECK((a / c) * c == a);
    }
  }

  TEST_CASE("log series structure") {
    auto z = PowerSeries::monomial(Variable::z, 3, 1);
    LogSeries trimmed({z, PowerSeries(Variable::z, 3)});
    CHECK(trimmed.max_log_degree() == 0);
    CHECK(trimmed.as_power_series() == z);
    LogSeries multi({z, z});
    CHECK_THROWS_AS(multi.as_power_series(), invariant_error);
    // (log z + 1) z for log z -> log z + 1.
    CHECK(multi.shift_log(1) == LogSeries({2 * z, z}));
  }

  TEST_CASE("lambert expansion") {
    CHECK(lambert_expand(1, 3) == q_series({0, 1, 1, 1}));
    CHECK(lambert_expand(2, 5) == q_series({0, 0, 1, 0, 1, 0}));
    CHECK(lambert_expand(4, 3).is_zero());
    CHECK_THROWS_AS(lambert_expand(0, 3), precondition_error);
  }

  TEST_CASE("lambert inversion") {
    auto c = q_series({0, 2875, 4876875, 8564575000});
    auto inv = lambert_invert(c, 3);
    CHECK(inv.numbers == std::vector<Rational>{2875, 609250, 317206375});
    CHECK(inv.integral);
    auto one = lambert_invert(lambert_expand(1, 6), 0);
    CHECK(one.numbers == std::vector<Rational>{1, 0, 0, 0, 0, 0});
    auto frac = lambert_invert(q_series({0, 1, 0}), 1);
    CHECK(frac.numbers[1] == make_rational(-1, 2));
    CHECK_FALSE(frac.integral);
    CHECK_THROWS_AS(lambert_invert(q_series({1, 0}), 0), precondition_error);
  }

  TEST_CASE("lambert inversion undoes synthesis for arbitrary rationals") {
    SmallRationals rng(15);
    for (int ell = 0; ell <= 3; ++ell) {
      std::vector<Rational> numbers;
      for (int d = 0; d < 10; ++d) numbers.push_back(rng.next());
      auto c = synthesize_by_expansion(numbers, ell, 10);
      CHECK(lambert_synthesize(numbers, ell, 10) == c);
      CHECK(lambert_invert(c, ell).numbers == numbers);
    }
  }

  TEST_CASE("nilpotent polynomials") {
    using NP = NilpotentPoly<Rational>;
    auto a = NP::linear(4, 2, 3);
    auto inv = a.inverse();
    CHECK(a * inv == NP({1, 0, 0, 0}));
    // rho^4 vanishes.
    auto rho = NP::linear(4, 0, 1);
    CHECK(rho * rho * rho * rho == NP({0, 0, 0, 0}));
    CHECK_THROWS_AS(NP::linear(3, 1, 1) + NP::linear(4, 1, 1), precondition_error);
  }

  TEST_CASE("laurent elements and the reflected geometric identity") {
    auto x = LaurentElement::monomial(-2, 3) + LaurentElement::monomial(-2, -3);
    CHECK(x.is_zero());
    auto p = LaurentElement::monomial(-1) * LaurentElement::monomial(1, 5);
    CHECK(p == LaurentElement::constant(5));
    auto sum = LaurentFraction::geometric(1) + LaurentFraction::geometric(-1);
    REQUIRE(sum.constant_value().has_value());
    CHECK(*sum.constant_value() == -1);
    CHECK_FALSE(LaurentFraction::geometric(2).constant_value().has_value());
  }

  TEST_CASE("series json roundtrip uses decimal strings") {
    auto s = z_series({1, make_rational(-1, 3), big("123456789012345678901234567890")});
    auto j = json_io::to_json(s);
    CHECK(j["variable"] == "z");
    CHECK(j["truncation"] == 2);
    CHECK(j["coefficients"][1] == "-1/3");
    CHECK(j["coefficients"][2] == "123456789012345678901234567890");
    CHECK(json_io::series_from_json(j) == s);
    auto op = periods::pf_operator(5);
    CHECK(json_io::operator_from_json(json_io::to_json(op)) == op);
  }
}
