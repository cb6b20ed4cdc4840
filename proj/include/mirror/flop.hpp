#pragma once

// Transport of threefold data across a flop of a (-1,-1) curve Gamma and
// the symbolic check that all three-point functions are unchanged.

#include <optional>
#include <vector>

#include "mirror/quantum.hpp"

namespace mirror::quantum {

/// kappa'_abc = kappa_abc - Gamma_a Gamma_b Gamma_c n_Gamma; the entry stored
/// at Gamma moves to -Gamma, every other class is carried unchanged.
/// Throws precondition_error unless Gamma is primitive.
Cy3Data flop_transform(const Cy3Data& data, const CurveClass& gamma, const Rational& n_gamma);

/// x/(1 - x) + 1/(x - 1) == -1 as rational functions.
bool flop_identity_holds();

struct FlopCheck {
  /// Both the symbolic and the truncated comparison succeeded.
  bool invariant = false;
  bool symbolic_agrees = false;
  bool truncated_agrees = false;
  /// Divisor triples (a <= b <= c) compared.
  int triples_checked = 0;
  /// Lines {k eta0 : k != 0} through primitive classes with nonzero data.
  int lines = 0;
  int truncation = 0;
};

/// Compares <D_a D_b D_c> before and after flop_transform. Curve terms are
/// grouped by primitive line through the origin; on a line with generator
/// x = q^{eta0}, each side is a Laurent fraction in x. The difference on
/// every line must be a constant, and the constants must add up to the
/// change in classical intersections. The same comparison is repeated
/// with each line expanded as a power series in x through x^T.
FlopCheck check_flop_invariance(const Cy3Data& data, const CurveClass& gamma, const Rational& n_gamma, int truncation);

/// Rank-3 test instance: divisors A, B, C with (A.Gamma, B.Gamma, C.Gamma)
/// = (a, b, -c), plus a few unrelated curve classes.
Cy3Data synthetic_flop_instance(long a, long b, long c, const Rational& n_gamma);

/// Power series of num/den in x through x^T when num/den is regular at
/// x = 0.
std::optional<PowerSeries> expand_at_zero(const LaurentFraction& f, int truncation);

}  // namespace mirror::quantum
