#pragma once

// Mirror map, distinguished-basis reduction of the period matrix, three-point
// couplings and instanton extraction for the one-parameter mirror family.

#include <optional>
#include <vector>

#include "mirror/periods.hpp"
#include "mirror/series.hpp"

namespace mirror::yukawa {

/// Canonical coordinate q = z exp(h(z)/e_0(z)) and its inverse z(q), where
/// e_1 = e_0 log z + h.
struct MirrorMap {
  PowerSeries q_of_z;
  PowerSeries z_of_q;
};

MirrorMap mirror_map(const periods::FrobeniusBasis& basis);

/// Couplings Y^1_j(q), j = 0..n-1, and the secondary Y^2_2 when n = 6.
struct CouplingSet {
  int dimension = 0;
  std::vector<PowerSeries> primary;
  std::optional<PowerSeries> secondary;

  const PowerSeries& y1(int j) const { return primary.at(static_cast<size_t>(j)); }
};

/// Row-reduces the period matrix to upper triangular form with diagonal
/// n + 2, differentiating with D = (theta t)^{-1} theta. Throws
/// invariant_error when an entry that must vanish does not, or when log
/// terms survive in a coupling.
CouplingSet distinguished_reduction(const periods::FrobeniusBasis& basis, const MirrorMap& map);

/// prod_j Y^1_j / (n+2)^{n-1}.
PowerSeries npoint_function(const CouplingSet& couplings);

/// Y^2_2 = (Y^1_2)^2 / Y^1_1; defined for n = 6.
PowerSeries secondary_coupling(const CouplingSet& couplings);

/// Number of 1's among {a, b, n - a - b}.
int degree_power(int dimension, int a, int b);

struct CouplingInstantons {
  int a = 1;
  int b = 1;
  PowerSeries coupling;
  LambertInversion inversion;
};

struct InstantonTable {
  int dimension = 0;
  std::vector<CouplingInstantons> entries;
  bool all_integral() const;
};

/// Inverts the multiple-cover expansion of every independent coupling
/// (Y^1_j for 1 <= j <= (n-1)/2, plus Y^2_2 when present) and checks that
/// resynthesis reproduces the coupling exactly.
InstantonTable extract_instantons(const CouplingSet& couplings);

struct ClosedFormCheck {
  /// theta K = g(z) K solved as a series, compared with c/(1 - 5^5 z).
  bool closed_form_matches = false;
  Rational normalization = 0;
  /// K / (e_0^2 (theta t)^3) in the q-chart.
  PowerSeries top_coupling;
  bool agrees_with_reduction = false;
};

/// Independent route to Y^1_1 for n = 3 from the first-order equation the
/// Picard-Fuchs operator imposes on the top coupling. Throws
/// invariant_error on disagreement.
ClosedFormCheck yukawa_closed_form_check(int dimension, int truncation);

/// Default truncation: 12 for n = 3, 8 for n = 4, 6 otherwise.
int default_order(int dimension);

struct MirrorRun {
  int dimension = 0;
  int order = 0;
  MirrorMap map;
  CouplingSet couplings;
  PowerSeries npoint;
  InstantonTable instantons;
};

/// The whole B-model pipeline for dimension n (3 <= n <= 6 recommended) at
/// truncation order T.
MirrorRun run_mirror(int dimension, int truncation);

}  // namespace mirror::yukawa
