#pragma once

// Periods of the one-parameter mirror family of degree-N hypersurfaces in
// P^{N-1} near the large complex structure point z = 0.

#include <vector>

#include "mirror/polynomial.hpp"
#include "mirror/series.hpp"

namespace mirror::periods {

/// sum_k p_k(z) theta^k with theta = z d/dz and polynomial p_k.
class ThetaOperator {
 public:
  explicit ThetaOperator(std::vector<Polynomial> coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// p_k(z); empty polynomial when p_k = 0.
  const Polynomial& coefficient(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  /// Largest z-degree among the coefficients.
  int z_degree() const;

  PowerSeries apply(const PowerSeries& f) const;
  LogSeries apply(const LogSeries& f) const;

  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Polynomial> coeffs_;
};

/// sum_m (N m)!/(m!)^N z^m through z^T.
PowerSeries holomorphic_period(int degree, int truncation);

/// theta^{N-1} - N z prod_{k=1}^{N-1} (N theta + k).
ThetaOperator pf_operator(int degree);

/// Local solutions e_0..e_n (n = N - 2) at the maximally unipotent point.
/// e_j is the Taylor coefficient of rho^j in z^rho sum_m c_m(rho) z^m, so
/// its (log z)^j coefficient is e_0 / j!.
struct FrobeniusBasis {
  int dimension = 0;
  int degree = 0;
  std::vector<LogSeries> solutions;
};

FrobeniusBasis frobenius_basis(int degree, int truncation);

/// Frobenius solutions for any theta-operator whose indicial polynomial at
/// z = 0 is a multiple of rho^{count}.
std::vector<LogSeries> frobenius_solutions(const ThetaOperator& op, int count, int truncation);

struct Location {
  bool at_infinity = false;
  Rational point = 0;

  static Location infinity() { return {true, 0}; }
  static Location finite(const Rational& z) { return {false, z}; }
};

/// z = N^{-N}, where the fibre acquires a node.
Rational conifold_point(int degree);

struct IndicialData {
  Location location;
  /// The indicial polynomial in the local exponent, lowest degree first.
  Polynomial indicial_polynomial;
  /// Roots with multiplicity, ascending.
  std::vector<Rational> exponents;
};

/// Exponents at a regular singular point (or ordinary point). Local
/// coordinate u = z - z0, or u = 1/z at infinity. Throws precondition_error
/// at an irregular singular point.
IndicialData indicial_exponents(const ThetaOperator& op, const Location& location);

struct MonodromyReport {
  /// Row j holds the coordinates of e_j(log z + 1) in the basis e_0..e_n.
  std::vector<std::vector<Rational>> matrix;
  /// Smallest k with (M - I)^k = 0.
  int nilpotency_index = 0;
  /// Dimensions of the graded pieces of the weight filtration centred at n,
  /// indexed by weight 0..2n.
  std::vector<int> weight_graded_dimensions;
  bool even_weights_only = true;
};

MonodromyReport formal_monodromy(const FrobeniusBasis& basis);

}  // namespace mirror::periods
