#include "mirror/counts.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mirror/grassmann.hpp"
#include "mirror/polynomial.hpp"

namespace mirror::intersection {

Rational count_lines_on_hypersurface(int degree, int ambient_dimension) {
  if (degree < 1 || ambient_dimension < 1) throw precondition_error("degree and ambient dimension must be positive");
  const int rank = degree + 1;
  const int dim = 2 * (ambient_dimension - 1);
  if (rank != dim) {
    throw precondition_error("rank of Sym^" + std::to_string(degree) + " U* is " + std::to_string(rank) +
                             " but dim Gr(2," + std::to_string(ambient_dimension + 1) + ") is " + std::to_string(dim));
  }
  const ChernVector sym = chern_sym_power(dual_tautological(2, ambient_dimension + 1), degree);
  return integrate(sym.c(sym.rank));
}

ConicCount count_conics_on_quintic() {
  constexpr int k = 3;
  constexpr int n = 5;
  const ChernVector u = dual_tautological(k, n);
  const auto bundle = ProjectiveBundle::create(k, n, chern_sym_power(u, 2));
  const ChernVector quintics = chern_sym_power(u, 5);
  const ChernVector cubics = chern_sym_power(u, 3);

  ConicCount out;
  out.bundle_rank = quintics.rank - cubics.rank;
  out.space_dimension = bundle->dimension();
  if (out.bundle_rank != out.space_dimension) throw invariant_error("rank of B differs from dim P(Sym^2 U*)");

  ProjBundleClass c_quintics = bundle->lift(quintics.total());
  const ProjBundleClass minus_xi = bundle->xi() * Rational(-1);
  const ProjBundleClass c_sub = twisted_total_chern(*bundle, cubics, minus_xi);
  const ProjBundleClass c_quotient = c_quintics * inverse_total(c_sub);
  out.count = bundle->integrate(c_quotient.homogeneous(out.bundle_rank));
  return out;
}

Rational conics_on_quintic() { return count_conics_on_quintic().count; }

SplittingCohomology splitting_cohomology(const std::vector<long>& degrees) {
  SplittingCohomology out;
  for (long a : degrees) {
    out.h0 += std::max(1 + a, 0L);
    out.h1 += std::max(-1 - a, 0L);
    out.euler += 1 + a;
  }
  return out;
}

Rational projective_space_cotangent_top(int n) {
  if (n < 1) throw precondition_error("projective space dimension must be positive");
  // c(T*P^n) = (1 - h)^{n+1}.
  Polynomial total{Rational(1)};
  for (int i = 0; i <= n; ++i) total = multiply(total, Polynomial{Rational(1), Rational(-1)});
  return total.at(static_cast<size_t>(n));
}

namespace {

// Variables u, v, eta1, eta2, a, b, c with eta_i^5 = -1.
constexpr int kU = 0, kV = 1, kEta1 = 2, kEta2 = 3, kA = 4, kB = 5, kC = 6, kVars = 7;

MonomialPoly monomial(std::initializer_list<int> vars) {
  std::vector<int> e(kVars, 0);
  for (int v : vars) ++e[static_cast<size_t>(v)];
  MonomialPoly out;
  out[e] = 1;
  return out;
}

MonomialPoly fifth_power(const MonomialPoly& x) {
  MonomialPoly out = poly_constant(kVars, 1);
  for (int i = 0; i < 5; ++i) out = poly_multiply(out, x);
  return out;
}

MonomialPoly reduce_roots(const MonomialPoly& p) {
  MonomialPoly out;
  for (const auto& [exps, coeff] : p) {
    std::vector<int> e = exps;
    Rational c = coeff;
    for (int r : {kEta1, kEta2}) {
      while (e[static_cast<size_t>(r)] >= 5) {
        e[static_cast<size_t>(r)] -= 5;
        c = -c;
      }
    }
    MonomialPoly term;
    term[e] = c;
    out = poly_add(out, term);
  }
  return out;
}

MonomialPoly fermat(const std::array<MonomialPoly, 5>& x) {
  MonomialPoly sum;
  for (const auto& xi : x) sum = poly_add(sum, fifth_power(xi));
  return reduce_roots(sum);
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
  const Polynomial d = trimmed(b);
  a = trimmed(std::move(a));
  while (!a.empty() && a.size() >= d.size()) {
    const Rational factor = a.back() / d.back();
    const size_t shift = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= factor * d[i];
    a = trimmed(std::move(a));
  }
  return a;
}

// Degree of gcd(f, f'); zero means f is separable.
int repeated_root_degree(const Polynomial& f) {
  Polynomial a = f;
  Polynomial b;
  for (size_t i = 1; i < f.size(); ++i) b.push_back(f[i] * static_cast<long>(i));
  while (!trimmed(b).empty()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return degree(a);
}

}  // namespace

FermatCensus fermat_line_census() {
  FermatCensus census;
  const Polynomial x5_plus_1{1, 0, 0, 0, 0, 1};
  if (repeated_root_degree(x5_plus_1) != 0) throw invariant_error("x^5 + 1 has a repeated root");
  census.root_count = degree(x5_plus_1);

  // First type: {p, p'} {r, r'} {s} with x_p = u, x_p' = eta1 u, x_r = v,
  // x_r' = eta2 v, x_s = 0. The smaller index of each pair carries the free
  // coordinate, so each line appears once.
  long patterns = 0;
  for (int s = 0; s < 5; ++s) {
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i)
      if (i != s) rest.push_back(i);
    const std::array<std::array<int, 4>, 3> pairings{{{rest[0], rest[1], rest[2], rest[3]},
                                                      {rest[0], rest[2], rest[1], rest[3]},
                                                      {rest[0], rest[3], rest[1], rest[2]}}};
    for (const auto& pr : pairings) {
      std::array<MonomialPoly, 5> x;
      x[static_cast<size_t>(s)] = MonomialPoly{};
      x[static_cast<size_t>(pr[0])] = monomial({kU});
      x[static_cast<size_t>(pr[1])] = monomial({kEta1, kU});
      x[static_cast<size_t>(pr[2])] = monomial({kV});
      x[static_cast<size_t>(pr[3])] = monomial({kEta2, kV});
      if (!fermat(x).empty()) throw invariant_error("first-type line does not lie on the Fermat quintic");
      ++patterns;
    }
  }
  census.first_type = patterns * census.root_count * census.root_count;

  // Families: x_i = u, x_j = eta1 u, remaining coordinates (a v, b v, c v).
  const MonomialPoly expected = poly_multiply(
      poly_add(poly_add(fifth_power(monomial({kA})), fifth_power(monomial({kB}))), fifth_power(monomial({kC}))),
      fifth_power(monomial({kV})));
  long pairs = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      std::array<MonomialPoly, 5> x;
      x[static_cast<size_t>(i)] = monomial({kU});
      x[static_cast<size_t>(j)] = monomial({kEta1, kU});
      int slot = 0;
      const std::array<int, 3> free{kA, kB, kC};
      for (int m = 0; m < 5; ++m)
        if (m != i && m != j) x[static_cast<size_t>(m)] = monomial({free[static_cast<size_t>(slot++)], kV});
      if (fermat(x) != expected) throw invariant_error("family residue is not (a^5 + b^5 + c^5) v^5");
      ++pairs;
    }
  }
  census.families = pairs * census.root_count;
  census.katz_total = 5 * census.first_type + 20 * census.families;
  return census;
}

}  // namespace mirror::intersection
