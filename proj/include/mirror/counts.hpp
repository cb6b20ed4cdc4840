#pragma once

// Enumerative counts on hypersurfaces via Chern classes on Grassmannians,
// plus the cohomology bookkeeping of split normal bundles on P^1.

#include <vector>

#include "mirror/rational.hpp"

namespace mirror::intersection {

/// integral of c_top(Sym^d U*) over Gr(2, m+1). Requires d + 1 = 2(m - 1).
Rational count_lines_on_hypersurface(int degree, int ambient_dimension);

struct ConicCount {
  int bundle_rank = 0;
  int space_dimension = 0;
  Rational count = 0;
};

/// c_11 of Sym^5 U* / (Sym^3 U* (x) O(-1)) on P(Sym^2 U*) over Gr(3, 5).
ConicCount count_conics_on_quintic();
/// Convenience: count_conics_on_quintic().count.
Rational conics_on_quintic();

struct SplittingCohomology {
  long h0 = 0;
  long h1 = 0;
  long euler = 0;
};

/// h^0, h^1 and chi of O(a_1) + ... + O(a_k) on P^1.
SplittingCohomology splitting_cohomology(const std::vector<long>& degrees);

/// Coefficient of h^n in (1 - h)^{n+1}: the top Chern class of the
/// cotangent bundle of P^n.
Rational projective_space_cotangent_top(int n);

struct FermatCensus {
  long first_type = 0;
  long families = 0;
  long katz_total = 0;
  /// Number of distinct fifth roots of -1 (5 when x^5 + 1 is separable).
  int root_count = 0;
};

/// Lines on x_0^5 + ... + x_4^5 = 0: isolated lines from splittings
/// {pair, pair, singleton} and one-parameter families from a single pair.
/// The parametrizations are substituted symbolically; any nonvanishing
/// residue throws invariant_error. The multiplicities 5 and 20 for the
/// weighted total are fixed inputs, not derived.
FermatCensus fermat_line_census();

}  // namespace mirror::intersection
