#include <doctest.h>

#include <algorithm>

#include "mirror/avhs.hpp"
#include "mirror/flop.hpp"
#include "mirror/quantum.hpp"
#include "support.hpp"

using namespace mirror;
using namespace mirror::quantum;
using testing_support::bigs;

namespace {

CurveSeries q_power(long d, const Rational& c = 1) { return CurveSeries::monomial({d}, c); }

QuantumElement scaled_basis(const QuantumRing& ring, size_t i, const CurveSeries& coeff) {
  QuantumElement e(ring.size());
  e[i] = coeff;
  return e;
}

TripleTensor classical_of(const QuantumRing& ring) {
  size_t n = ring.size();
  TripleTensor t(n * n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = ring.classical(i, j, k);
  return t;
}

std::vector<Rational> quintic_numbers(size_t count) {
  auto all = bigs(reference::quintic_y11);
  return {all.begin(), all.begin() + static_cast<long>(count)};
}

QuantumRing quintic_ring(int truncation) {
  auto numbers = quintic_numbers(static_cast<size_t>(truncation));
  return cy3_ring(one_parameter_cy3(5, numbers), CoefficientRingPolicy::formal_semigroup({{1}}, truncation));
}

CoefficientRingPolicy flop_policy() { return CoefficientRingPolicy::novikov({3, 2, 1}, 8); }

}  // namespace

TEST_SUITE("quantum") {
  TEST_CASE("projective space ring relations") {
    for (int n = 1; n <= 6; ++n) {
      auto ring = cpn_ring(n);
      CHECK(quantum_power(ring.basis(1), n + 1, ring) == scaled_basis(ring, 0, q_power(1)));
    }
    auto p1 = cpn_ring(1);
    CHECK(p1.product(p1.basis(1), p1.basis(1)) == scaled_basis(p1, 0, q_power(1)));
    auto p2 = cpn_ring(2);
    CHECK(p2.product(p2.basis(1), p2.basis(2)) == scaled_basis(p2, 0, q_power(1)));
    CHECK(p2.product(p2.basis(2), p2.basis(2)) == scaled_basis(p2, 1, q_power(1)));
    auto p4 = cpn_ring(4);
    CHECK(p4.product(p4.basis(3), p4.basis(2)) == scaled_basis(p4, 0, q_power(1)));
    CHECK(p4.product(p4.basis(1), p4.basis(2)) == p4.basis(3));
  }

  TEST_CASE("projective space correlations") {
    for (int n = 1; n <= 5; ++n) {
      auto ring = cpn_ring(n);
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
          for (int c = 0; c <= n; ++c) {
            CurveSeries expected;
            if (a + b + c == n) expected = CurveSeries::constant(1, 1);
            if (a + b + c == 2 * n + 1) expected = q_power(1);
            CHECK(ring.correlation(static_cast<size_t>(a), static_cast<size_t>(b), static_cast<size_t>(c)) == expected);
          }
    }
  }

  TEST_CASE("identity element and expectation function") {
    std::vector<QuantumRing> rings = {cpn_ring(2), cpn_ring(5), quintic_ring(4),
                                      cy3_ring(synthetic_flop_instance(1, 1, 1, 1), flop_policy())};
    for (const auto& ring : rings) {
      for (size_t i = 0; i < ring.size(); ++i) {
        CHECK(ring.product(ring.identity(), ring.basis(i)) == ring.basis(i));
        CHECK(ring.product(ring.basis(i), ring.identity()) == ring.basis(i));
        for (size_t j = 0; j < ring.size(); ++j) {
          auto pairing = CurveSeries::constant(ring.rank(), ring.pairing()[i][j]);
          CHECK(ring.correlation(ring.identity(), ring.basis(i), ring.basis(j)) == pairing);
          CHECK(ring.expectation(ring.product(ring.basis(i), ring.basis(j))) == pairing);
        }
      }
    }
  }

  TEST_CASE("pairing of the product reproduces the correlation") {
    auto ring = quintic_ring(5);
    for (size_t i = 0; i < ring.size(); ++i)
      for (size_t j = 0; j < ring.size(); ++j)
        for (size_t k = 0; k < ring.size(); ++k) {
          auto xy = ring.product(ring.basis(i), ring.basis(j));
          CurveSeries paired;
          for (size_t m = 0; m < ring.size(); ++m) paired += xy[m] * ring.pairing()[m][k];
          CHECK(paired == ring.correlation(i, j, k));
        }
  }

  TEST_CASE("products respect the grading") {
    auto check_degrees = [](const QuantumRing& ring, bool exact) {
      for (size_t i = 0; i < ring.size(); ++i)
        for (size_t j = 0; j < ring.size(); ++j) {
          auto xy = ring.product(ring.basis(i), ring.basis(j));
          int target = ring.degrees()[i] + ring.degrees()[j];
          for (size_t k = 0; k < ring.size(); ++k) {
            if (xy[k].is_zero()) continue;
            if (exact)
              CHECK(ring.degrees()[k] == target);
            else
              CHECK(ring.degrees()[k] <= target);
          }
        }
    };
    check_degrees(cpn_ring(4), false);
    check_degrees(quintic_ring(4), true);
    check_degrees(cy3_ring(synthetic_flop_instance(2, 1, 1, 3), flop_policy()), true);
  }

  TEST_CASE("grading rule for Gromov-Witten entries") {
    GWTable table(2, {0, 2, 4});
    table.add_class({1}, 3);
    table.set({1}, 1, 2, 2, 1);
    CHECK(table.get({1}, 2, 1, 2) == 1);
    CHECK_THROWS_AS(table.set({1}, 1, 1, 1, 1), precondition_error);
    CHECK_THROWS_AS(table.set({1}, 0, 2, 2, 1), precondition_error);
    CHECK_THROWS_AS(table.set({2}, 1, 2, 2, 1), precondition_error);
    CHECK_THROWS_AS(table.add_class({2}, 5), precondition_error);
    CHECK_THROWS_AS(table.add_class({3}, -1), precondition_error);
    CHECK_THROWS_AS(table.add_class({1}, 2), precondition_error);
    CHECK_THROWS_AS(table.add_class({1, 1}, 0), precondition_error);
    CHECK_THROWS_AS(GWTable(2, {0, 3, 4}), precondition_error);
  }

  TEST_CASE("Gromov-Witten tables load from JSON") {
    auto doc = nlohmann::ordered_json::parse(R"({
      "dimension": 2,
      "basis": [{"degree": 0}, {"degree": 2}, {"degree": 4}],
      "classes": [{"eta": [1], "minusK_dot": 3, "entries": [[1, 2, 2, "1"]]}]
    })");
    auto table = GWTable::from_json(doc);
    CHECK(table.dimension() == 2);
    CHECK(table.get({1}, 2, 2, 1) == 1);
    CHECK(GWTable::from_json(table.to_json()).to_json() == table.to_json());
    auto bad = doc;
    bad["classes"][0]["entries"][0] = {1, 1, 2, "1"};
    CHECK_THROWS_AS(GWTable::from_json(bad), precondition_error);
    CHECK(cpn_ring(2).gw().to_json()["classes"][0]["entries"].size() == 1);
  }

  TEST_CASE("coefficient ring policies") {
    auto poly = CoefficientRingPolicy::polynomial(1);
    CHECK_FALSE(poly.allows_lambert());
    CHECK_THROWS_AS(poly.lambert({1}), precondition_error);

    auto formal = CoefficientRingPolicy::formal_semigroup({{1}}, 3);
    CHECK(formal.keeps({3}));
    CHECK_FALSE(formal.keeps({4}));
    CHECK(formal.lambert({1}) == q_power(1) + q_power(2) + q_power(3));
    CHECK(formal.lambert({2}) == q_power(2));
    CHECK_THROWS_AS(CoefficientRingPolicy::formal_semigroup({{1, 0}, {-1, 0}}, 3), precondition_error);
    CHECK_THROWS_AS(CoefficientRingPolicy::formal_semigroup({{0, 0}}, 3), precondition_error);
    auto cone = CoefficientRingPolicy::formal_semigroup({{1, 0}, {1, 1}, {1, -1}}, 4);
    for (const auto& g : cone.generators()) CHECK(cone.degree(g) > 0);

    auto novikov = CoefficientRingPolicy::novikov({2, 1}, 5);
    CHECK(novikov.keeps({2, 0}));
    CHECK_FALSE(novikov.keeps({2, 1}));
    CHECK(novikov.lambert({1, 1}) == CurveSeries::monomial({1, 1}));
    CHECK_THROWS_AS(novikov.lambert({-1, 1}), precondition_error);
    CHECK(novikov.describe().find('5') != std::string::npos);
  }

  TEST_CASE("rings reject inconsistent data") {
    auto ring = cpn_ring(2);
    auto classical = classical_of(ring);
    auto asym = classical;
    asym[(0 * 3 + 1) * 3 + 1] += 1;
    CHECK_THROWS_AS(QuantumRing(ring.gw(), asym, ring.policy()), precondition_error);
    CHECK_THROWS_AS(QuantumRing(ring.gw(), TripleTensor(27, 0), ring.policy()), precondition_error);
    // A Lambert-weighted class cannot live in the polynomial ring.
    GWTable cy(3, {0, 2, 4, 6});
    cy.add_class({1}, 0);
    cy.set({1}, 1, 1, 1, 5);
    TripleTensor t(64, 0);
    auto put = [&](int i, int j, int k, int v) {
      std::array<int, 3> idx{i, j, k};
      std::sort(idx.begin(), idx.end());
      do t[static_cast<size_t>((idx[0] * 4 + idx[1]) * 4 + idx[2])] = v;
      while (std::next_permutation(idx.begin(), idx.end()));
    };
    put(0, 0, 3, 1);
    put(0, 1, 2, 1);
    put(1, 1, 1, 1);
    CHECK_THROWS_AS(QuantumRing(cy, t, CoefficientRingPolicy::polynomial(1)), precondition_error);
    CHECK_NOTHROW(QuantumRing(cy, t, CoefficientRingPolicy::formal_semigroup({{1}}, 3)));
  }

  TEST_CASE("associativity of projective spaces and threefolds") {
    for (int n = 1; n <= 6; ++n) {
      auto report = check_associativity(cpn_ring(n), 4);
      CHECK(report.max_defect == 0);
      CHECK(report.commutativity_defect == 0);
      CHECK(report.triples_checked == static_cast<size_t>((n + 1) * (n + 1) * (n + 1)));
    }
    CHECK(check_associativity(quintic_ring(8), 8).max_defect == 0);
    CHECK(check_associativity(cy3_ring(synthetic_flop_instance(1, 2, 1, 5), flop_policy()), 8).max_defect == 0);
  }

  TEST_CASE("associativity report is independent of the thread count") {
    auto ring = cpn_ring(4);
    auto one = check_associativity(ring, 4, 1);
    auto many = check_associativity(ring, 4, 5);
    CHECK(one.max_defect == many.max_defect);
    CHECK(one.triples_checked == many.triples_checked);
  }

  TEST_CASE("a corrupted projective space entry breaks associativity") {
    auto ring = cpn_ring(3);
    GWTable gw = ring.gw();
    gw.set({1}, 1, 3, 3, 2);
    QuantumRing corrupted(gw, classical_of(ring), ring.policy());
    CHECK(check_associativity(corrupted, 4).max_defect > 0);
  }

  TEST_CASE("quintic correlations close the loop with the n-point function") {
    auto numbers = quintic_numbers(10);
    auto series = cy3_correlation({1, 1, 1}, 5, numbers, 10);
    auto npoint = bigs(reference::npoint_n3);
    for (int k = 0; k <= 10; ++k) CHECK(series[k] == npoint[static_cast<size_t>(k)]);

    auto ring = quintic_ring(10);
    CHECK(to_power_series(ring.correlation(1, 1, 1), 10) == series);
    auto hh = ring.product(ring.basis(1), ring.basis(1));
    CHECK(hh[2].coefficient({0}) == 5);
    CHECK(hh[2].coefficient({1}) == 2875);

    std::vector<Rational> none(5, 0);
    CHECK(cy3_correlation({1, 1, 1}, 5, none, 5) == PowerSeries::constant(Variable::q, 5, 5));
    std::vector<Rational> single{1};
    auto simple = cy3_correlation({1, 1, 1}, 5, single, 5);
    CHECK(simple == PowerSeries::constant(Variable::q, 5, 5) + lambert_expand(1, 5));
    CHECK(cy3_correlation({2, 1, 3}, 5, numbers, 6) == cy3_correlation({1, 1, 1}, 5, numbers, 6) * Rational(6));
  }

  TEST_CASE("flop identity and transform") {
    CHECK(flop_identity_holds());
    auto data = synthetic_flop_instance(1, 1, 1, 1);
    auto flopped = flop_transform(data, {1, 1, -1}, 1);
    // (A.G)(B.G)(C.G) = -1, so the classical term rises by n_Gamma.
    CHECK(flopped.triple(0, 1, 2) - data.triple(0, 1, 2) == 1);
    CHECK(flopped.triple(0, 0, 0) - data.triple(0, 0, 0) == -1);
    CHECK(flopped.instantons.count({1, 1, -1}) == 0);
    CHECK(flopped.instantons.at({-1, -1, 1}) == 1);
    CHECK(flopped.instantons.at({2, 1, 1}) == 7);
    CHECK(flop_transform(flopped, {-1, -1, 1}, 1) == data);
    CHECK_THROWS_AS(flop_transform(data, {2, 2, -2}, 1), precondition_error);
    CHECK_THROWS_AS(synthetic_flop_instance(2, 2, 2, 1), precondition_error);
  }

  TEST_CASE("flop invariance") {
    for (auto [a, b, c] : std::vector<std::array<long, 3>>{{1, 1, 1}, {2, 1, 1}, {1, 2, 3}, {3, 1, 2}}) {
      CAPTURE(a);
      auto data = synthetic_flop_instance(a, b, c, 2);
      CurveClass gamma{a, b, -c};
      auto check = check_flop_invariance(data, gamma, 2, 6);
      CHECK(check.invariant);
      CHECK(check.symbolic_agrees);
      CHECK(check.truncated_agrees);
      CHECK(check.triples_checked == 10);
      auto wrong = check_flop_invariance(data, gamma, 3, 6);
      CHECK_FALSE(wrong.invariant);
      CHECK_FALSE(wrong.symbolic_agrees);
    }
    // Divisors orthogonal to Gamma keep their intersections.
    auto data = synthetic_flop_instance(1, 0, 1, 4);
    auto flopped = flop_transform(data, {1, 0, -1}, 4);
    CHECK(flopped.triple(1, 1, 1) == data.triple(1, 1, 1));
    CHECK(flopped.triple(0, 1, 2) == data.triple(0, 1, 2));
    CHECK(check_flop_invariance(data, {1, 0, -1}, 4, 6).invariant);
  }

  TEST_CASE("Laurent fractions expand at the origin") {
    auto g = expand_at_zero(LaurentFraction::geometric(1), 4);
    REQUIRE(g.has_value());
    CHECK(*g == lambert_expand(1, 4).retagged(g->variable()));
    auto reflected = expand_at_zero(LaurentFraction::geometric(-1), 3);
    REQUIRE(reflected.has_value());
    CHECK((*reflected)[0] == -1);
    CHECK((*reflected)[3] == -1);
    auto pole = LaurentFraction(LaurentElement::constant(1), LaurentElement::monomial(1));
    CHECK_FALSE(expand_at_zero(pole, 3).has_value());
  }

  TEST_CASE("quintic A-model connection") {
    auto ring = quintic_ring(8);
    auto conn = avhs_connection_rank1(ring, 1);
    auto diag = superdiagonal(conn, 5, 8);
    auto run = yukawa::run_mirror(3, 8);
    REQUIRE(diag.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(diag[static_cast<size_t>(k)] == run.couplings.y1(k));
    auto shape = connection_shape(conn);
    CHECK(shape.nilpotency_index == 4);
    CHECK(shape.griffiths_shift);
    CHECK(shape.weight_filtration_invariant);
    CHECK(check_flatness(conn, 8).flat());
    // Classical limit: the constant terms are cup products.
    for (size_t a = 0; a < 4; ++a)
      for (size_t b = 0; b < 4; ++b) {
        Rational expected = b == a + 1 ? 1 : 0;
        CHECK(conn.matrices[0][a][b].coefficient({0}) == expected);
      }
  }

  TEST_CASE("hypersurface connections reproduce every coupling") {
    for (int n = 3; n <= 6; ++n) {
      int order = n == 3 ? 8 : 5;
      auto run = yukawa::run_mirror(n, order);
      auto ring = hypersurface_ring(run.instantons, order);
      auto conn = avhs_connection_rank1(ring, 1);
      auto diag = superdiagonal(conn, n + 2, order);
      for (int k = 0; k < n; ++k) CHECK(diag[static_cast<size_t>(k)] == run.couplings.y1(k));
      CHECK(connection_shape(conn).nilpotency_index == n + 1);
      CHECK(check_associativity(ring, order).max_defect == 0);
    }
  }

  TEST_CASE("projective plane connection is flat") {
    auto conn = avhs_connection(cpn_ring(2));
    CHECK(check_flatness(conn, 5).flat());
  }

  TEST_CASE("multi-parameter connection is flat and detects corruption") {
    auto data = synthetic_flop_instance(1, 2, 1, 5);
    auto ring = cy3_ring(data, flop_policy());
    auto conn = avhs_connection(ring);
    CHECK(conn.matrices.size() == 3);
    CHECK(check_flatness(conn, 8).flat());
    CHECK(connection_shape(conn).griffiths_shift);

    // Break the (D.eta)^3 n_eta shape of a single invariant.
    GWTable gw = ring.gw();
    CurveClass eta{1, 1, 0};
    gw.set(eta, 1, 1, 2, gw.get(eta, 1, 1, 2) + 1);
    QuantumRing corrupted(gw, classical_of(ring), ring.policy());
    auto bad = check_flatness(avhs_connection(corrupted), 8);
    CHECK_FALSE(bad.flat());
  }

  TEST_CASE("theta acts on curve series") {
    CurveSeries s = CurveSeries::monomial({2, 3}, 5) + CurveSeries::monomial({1, 0}, 7);
    CHECK(theta(s, 0) == CurveSeries::monomial({2, 3}, 10) + CurveSeries::monomial({1, 0}, 7));
    CHECK(theta(s, 1) == CurveSeries::monomial({2, 3}, 15));
  }
}
