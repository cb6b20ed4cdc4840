#include <doctest.h>

#include "mirror/yukawa.hpp"
#include "support.hpp"

using namespace mirror;
using namespace mirror::yukawa;
using testing_support::bigs;

namespace {

const MirrorRun& cached_run(int dimension) {
  static const MirrorRun n3 = run_mirror(3, 18);
  static const MirrorRun n4 = run_mirror(4, 12);
  static const MirrorRun n5 = run_mirror(5, 9);
  static const MirrorRun n6 = run_mirror(6, 8);
  switch (dimension) {
    case 3: return n3;
    case 4: return n4;
    case 5: return n5;
    default: return n6;
  }
}

std::vector<Rational> leading(const std::vector<Rational>& v, size_t count) {
  return {v.begin(), v.begin() + static_cast<long>(std::min(count, v.size()))};
}

const CouplingInstantons& entry(const InstantonTable& table, int a, int b) {
  for (const auto& e : table.entries)
    if (e.a == a && e.b == b) return e;
  throw std::runtime_error("missing coupling");
}

}  // namespace

TEST_SUITE("yukawa") {
  TEST_CASE("n-point functions match the printed tables") {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(n);
      const auto& expected = reference::npoint(n);
      const auto& run = cached_run(n);
      REQUIRE(run.npoint.truncation() + 1 == static_cast<int>(expected.size()));
      for (int k = 0; k <= run.npoint.truncation(); ++k) CHECK(run.npoint[k] == testing_support::big(expected[static_cast<size_t>(k)]));
    }
  }

  TEST_CASE("quintic instanton numbers") {
    auto run = run_mirror(3, 16);
    const auto& y11 = entry(run.instantons, 1, 1);
    CHECK(y11.inversion.degree_power == 3);
    CHECK(y11.inversion.numbers == bigs(reference::quintic_y11));
    CHECK(run.instantons.all_integral());
  }

  TEST_CASE("higher-dimensional instanton numbers") {
    const auto& n4 = cached_run(4).instantons;
    CHECK(entry(n4, 1, 1).inversion.degree_power == 2);
    CHECK(leading(entry(n4, 1, 1).inversion.numbers, 5) == bigs(reference::sextic_y11));

    const auto& n5 = cached_run(5).instantons;
    CHECK(entry(n5, 1, 1).inversion.degree_power == 2);
    CHECK(entry(n5, 1, 2).inversion.degree_power == 1);
    CHECK(leading(entry(n5, 1, 1).inversion.numbers, 4) == bigs(reference::septic_y11));
    CHECK(leading(entry(n5, 1, 2).inversion.numbers, 4) == bigs(reference::septic_y12));

    const auto& n6 = cached_run(6).instantons;
    CHECK(entry(n6, 1, 1).inversion.degree_power == 2);
    CHECK(entry(n6, 1, 2).inversion.degree_power == 1);
    CHECK(entry(n6, 2, 2).inversion.degree_power == 0);
    CHECK(leading(entry(n6, 1, 1).inversion.numbers, 4) == bigs(reference::octic_y11));
    CHECK(leading(entry(n6, 1, 2).inversion.numbers, 4) == bigs(reference::octic_y12));
    CHECK(leading(entry(n6, 2, 2).inversion.numbers, 4) == bigs(reference::octic_y22));
    // First secondary number from the primary ones.
    CHECK(2 * testing_support::big("37502976") - testing_support::big("15984640") ==
          testing_support::big("59021312"));
  }

  TEST_CASE("coupling expansions start as printed") {
    const auto& n3 = cached_run(3).couplings.y1(1);
    CHECK(n3[0] == 5);
    CHECK(n3[1] == 2875);
    CHECK(n3[2] == 2875 + 609250 * 8);
    const auto& n4 = cached_run(4).couplings.y1(1);
    CHECK(n4[0] == 6);
    CHECK(n4[1] == 60480);
    CHECK(n4[2] == 60480 + Rational(440884080) * 4);
    const auto& y22 = *cached_run(6).couplings.secondary;
    CHECK(y22[0] == 8);
    CHECK(y22[1] == 59021312);
  }

  TEST_CASE("structural identities") {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(n);
      const auto& run = cached_run(n);
      const auto& c = run.couplings;
      REQUIRE(c.primary.size() == static_cast<size_t>(n));
      CHECK(c.y1(0) == PowerSeries::constant(Variable::q, run.order, n + 2));
      for (int j = 0; j < n; ++j) {
        CHECK(c.y1(j)[0] == n + 2);
        CHECK(c.y1(j) == c.y1(n - 1 - j));
      }
      PowerSeries product = PowerSeries::one(Variable::q, run.order);
      Rational scale = 1;
      for (int j = 0; j < n; ++j) product *= c.y1(j);
      for (int j = 0; j < n - 1; ++j) scale *= n + 2;
      CHECK(product * (1 / scale) == run.npoint);
      CHECK(npoint_function(c) == run.npoint);
      CHECK(run.instantons.all_integral());
      for (const auto& e : run.instantons.entries)
        CHECK(lambert_synthesize(e.inversion.numbers, e.inversion.degree_power, run.order) + PowerSeries::constant(Variable::q, run.order, n + 2) == e.coupling);
    }
    // For n = 3 the n-point function is Y^1_1 itself.
    CHECK(cached_run(3).npoint == cached_run(3).couplings.y1(1));
  }

  TEST_CASE("secondary coupling") {
    const auto& c = cached_run(6).couplings;
    REQUIRE(c.secondary.has_value());
    CHECK(*c.secondary * c.y1(1) == c.y1(2) * c.y1(2));
    CHECK(secondary_coupling(c) == *c.secondary);
    CHECK_THROWS_AS(secondary_coupling(cached_run(3).couplings), precondition_error);
  }

  TEST_CASE("degree power convention") {
    CHECK(degree_power(3, 1, 1) == 3);
    CHECK(degree_power(4, 1, 1) == 2);
    CHECK(degree_power(5, 1, 2) == 1);
    CHECK(degree_power(6, 2, 2) == 0);
    CHECK_THROWS_AS(degree_power(3, 2, 2), precondition_error);
  }

  TEST_CASE("closed-form top coupling agrees with the reduction") {
    auto check = yukawa_closed_form_check(3, 10);
    CHECK(check.closed_form_matches);
    CHECK(check.normalization == 5);
    CHECK(check.top_coupling[0] == 5);
    CHECK(check.agrees_with_reduction);
    CHECK_THROWS_AS(yukawa_closed_form_check(4, 5), precondition_error);
  }

  TEST_CASE("mirror map is a pair of inverse series") {
    for (int n = 3; n <= 6; ++n) {
      const auto& map = cached_run(n).map;
      CHECK(map.q_of_z.variable() == Variable::z);
      CHECK(map.z_of_q.variable() == Variable::q);
      CHECK(map.q_of_z[1] == 1);
      CHECK(map.q_of_z.compose(map.z_of_q) == PowerSeries::monomial(Variable::q, cached_run(n).order, 1));
    }
  }

  TEST_CASE("a basis without unit constant term is rejected") {
    auto basis = periods::frobenius_basis(5, 4);
    for (auto& s : basis.solutions) s *= Rational(2);
    CHECK_THROWS_AS(mirror_map(basis), precondition_error);
  }

  TEST_CASE("a corrupted basis is caught by the reduction") {
    auto basis = periods::frobenius_basis(5, 6);
    auto map = mirror_map(basis);
    auto e0 = basis.solutions[0].part(0);
    auto z = PowerSeries::monomial(Variable::z, 6, 1);
    // A stray z log z term in e_2 / e_0 survives differentiation.
    basis.solutions[2] += LogSeries(std::vector<PowerSeries>{PowerSeries(Variable::z, 6), z * e0});
    CHECK_THROWS_AS(distinguished_reduction(basis, map), invariant_error);
  }

  TEST_CASE("default orders") {
    CHECK(default_order(3) == 12);
    CHECK(default_order(4) == 8);
    CHECK(default_order(5) == 6);
    CHECK(default_order(6) == 6);
  }
}
