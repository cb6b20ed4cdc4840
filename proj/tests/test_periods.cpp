#include <doctest.h>

#include <algorithm>

#include "mirror/periods.hpp"
#include "support.hpp"

using namespace mirror;
using namespace mirror::periods;

namespace {

// multinomial(Nm; m, ..., m) as a product of binomials.
BigInt multinomial_oracle(int degree, int m) {
  BigInt out = 1;
  for (int k = 0; k < degree; ++k) out *= binomial(static_cast<long>(degree - k) * m, m);
  return out;
}

// The period obeys m^{N-1} a_m = N a_{m-1} prod_{k=1}^{N-1} (N m - k).
bool recurrence_holds(int degree, const PowerSeries& a) {
  for (int m = 1; m <= a.truncation(); ++m) {
    Rational lhs = a[m];
    for (int i = 0; i < degree - 1; ++i) lhs *= m;
    Rational rhs = a[m - 1] * degree;
    for (int k = 1; k < degree; ++k) rhs *= degree * m - k;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<Rational> fractions(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Rational> out;
  for (auto [p, q] : list) out.push_back(make_rational(p, q));
  return out;
}

}  // namespace

TEST_SUITE("periods") {
  TEST_CASE("holomorphic period coefficients") {
    auto a = holomorphic_period(5, 12);
    CHECK(a[0] == 1);
    CHECK(a[1] == 120);
    CHECK(a[2] == 113400);
    CHECK(holomorphic_period(3, 2)[1] == 6);
    for (int n = 3; n <= 8; ++n) {
      auto s = holomorphic_period(n, 8);
      CHECK(s[0] == 1);
      for (int m = 0; m <= 8; ++m) CHECK(s[m] == Rational(multinomial_oracle(n, m)));
    }
    CHECK_THROWS_AS(holomorphic_period(2, 3), precondition_error);
  }

  TEST_CASE("the operator annihilates the period and matches the recurrence") {
    auto a5 = holomorphic_period(5, 20);
    CHECK(recurrence_holds(5, a5));
    CHECK(pf_operator(5).apply(a5).is_zero());
    auto a6 = holomorphic_period(6, 15);
    CHECK(recurrence_holds(6, a6));
    CHECK(pf_operator(6).order() == 5);
    CHECK(pf_operator(6).apply(a6).is_zero());
    // Perturbing one coefficient breaks annihilation.
    a5[7] += 1;
    CHECK_FALSE(pf_operator(5).apply(a5).is_zero());
  }

  TEST_CASE("Frobenius basis structure") {
    for (int degree = 5; degree <= 7; ++degree) {
      auto basis = frobenius_basis(degree, 10);
      int n = degree - 2;
      REQUIRE(basis.solutions.size() == static_cast<size_t>(n + 1));
      const auto& e0 = basis.solutions[0];
      CHECK(e0 == LogSeries(holomorphic_period(degree, 10)));
      Rational factorial_inv = 1;
      for (int j = 0; j <= n; ++j) {
        if (j > 0) factorial_inv /= j;
        const auto& e = basis.solutions[static_cast<size_t>(j)];
        CHECK(e.max_log_degree() == j);
        CHECK(e.part(j) == e0.part(0) * factorial_inv);
        CHECK(pf_operator(degree).apply(e).is_zero());
      }
    }
    auto quintic = frobenius_basis(5, 6);
    CHECK(quintic.solutions[1].part(0)[1] == 770);
    CHECK(quintic.solutions[2].part(2) * Rational(2) == quintic.solutions[0].part(0));
  }

  TEST_CASE("normalized solutions are unit-triangular at z = 0") {
    auto basis = frobenius_basis(6, 6);
    const auto& e0 = basis.solutions[0].part(0);
    for (size_t j = 0; j < basis.solutions.size(); ++j) {
      LogSeries f = basis.solutions[j] / e0;
      for (size_t i = 0; i < j; ++i) f = theta(f);
      CHECK(f.part(0)[0] == 1);
    }
  }

  TEST_CASE("indicial exponents") {
    auto op = pf_operator(5);
    auto at_zero = indicial_exponents(op, Location::finite(0));
    CHECK(at_zero.exponents == std::vector<Rational>{0, 0, 0, 0});
    auto conifold = indicial_exponents(op, Location::finite(conifold_point(5)));
    CHECK(conifold_point(5) == make_rational(1, 3125));
    CHECK(conifold.exponents == std::vector<Rational>{0, 1, 1, 2});
    auto infinity = indicial_exponents(op, Location::infinity());
    CHECK(infinity.exponents == fractions({{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
    // An ordinary point has exponents 0..order-1.
    auto ordinary = indicial_exponents(op, Location::finite(1));
    CHECK(ordinary.exponents == std::vector<Rational>{0, 1, 2, 3});
  }

  TEST_CASE("exponents for higher degree") {
    for (int degree = 6; degree <= 8; ++degree) {
      auto op = pf_operator(degree);
      auto zero = indicial_exponents(op, Location::finite(0));
      CHECK(zero.exponents == std::vector<Rational>(static_cast<size_t>(degree - 1), 0));
      std::vector<Rational> inf;
      for (int k = 1; k < degree; ++k) inf.push_back(make_rational(k, degree));
      CHECK(indicial_exponents(op, Location::infinity()).exponents == inf);
      // Hypergeometric conifold: 0..N-3 together with (N-3)/2.
      std::vector<Rational> con;
      for (int k = 0; k <= degree - 3; ++k) con.push_back(k);
      con.push_back(make_rational(degree - 3, 2));
      std::sort(con.begin(), con.end());
      CHECK(indicial_exponents(op, Location::finite(conifold_point(degree))).exponents == con);
    }
  }

  TEST_CASE("irregular points are rejected") {
    // theta + z^2 has an irregular singularity at infinity.
    ThetaOperator op({Polynomial{0, 0, 1}, Polynomial{1}});
    CHECK_THROWS_AS(indicial_exponents(op, Location::infinity()), precondition_error);
    CHECK_THROWS_AS(ThetaOperator({Polynomial{}}), precondition_error);
  }

  TEST_CASE("formal monodromy is maximally unipotent") {
    for (int degree = 5; degree <= 8; ++degree) {
      int n = degree - 2;
      auto report = formal_monodromy(frobenius_basis(degree, 4));
      CHECK(report.nilpotency_index == n + 1);
      CHECK(report.even_weights_only);
      std::vector<Rational> fixed(static_cast<size_t>(n + 1), 0);
      fixed[0] = 1;
      CHECK(report.matrix[0] == fixed);
      int total = 0;
      for (int w = 0; w <= 2 * n; ++w) {
        int dim = report.weight_graded_dimensions[static_cast<size_t>(w)];
        total += dim;
        CHECK(dim == (w % 2 == 0 ? 1 : 0));
      }
      CHECK(total == n + 1);
    }
  }
}
