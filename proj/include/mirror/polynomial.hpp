#pragma once

// Dense univariate polynomials over Q, lowest degree first.

#include <vector>

#include "mirror/rational.hpp"

namespace mirror {

using Polynomial = std::vector<Rational>;

/// Drops trailing zero coefficients (the zero polynomial becomes empty).
Polynomial trimmed(Polynomial p);
int degree(const Polynomial& p);  // -1 for zero
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& p, const Rational& s);
Rational evaluate(const Polynomial& p, const Rational& x);
/// p(x + shift), expanded in x.
Polynomial taylor_shift(const Polynomial& p, const Rational& shift);
/// Exact quotient by (x - root); throws if root is not a root.
Polynomial deflate(const Polynomial& p, const Rational& root);
/// The falling factorial x(x-1)...(x-k+1).
Polynomial falling_factorial(int k);

/// All roots of p with multiplicity, sorted ascending. Throws
/// invariant_error when p does not split into rational linear factors.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace mirror
