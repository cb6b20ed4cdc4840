#pragma once

// The connection d - sum_j C_j dt_j on the trivial bundle with fibre
// H^even, where C_j is quantum multiplication by the divisor class e^j.

#include <vector>

#include "mirror/quantum.hpp"
#include "mirror/yukawa.hpp"

namespace mirror::quantum {

using CurveMatrix = std::vector<std::vector<CurveSeries>>;

struct Connection {
  /// Real degree of each frame element.
  std::vector<int> degrees;
  /// matrices[j][a][b]: coefficient of frame element b in e^j * (frame a).
  std::vector<CurveMatrix> matrices;
  CoefficientRingPolicy policy;
};

/// One matrix per degree-2 basis element, in the ring's own basis.
Connection avhs_connection(const QuantumRing& ring);

/// Rank-one frame 1, H, ..., H^n of classical cup powers of the basis
/// element `divisor`. Throws invariant_error when H * H^k leaves the span
/// of the frame.
Connection avhs_connection_rank1(const QuantumRing& ring, size_t divisor);

struct FlatnessReport {
  /// max |theta_i C_j - theta_j C_i|.
  Rational symmetry_defect = 0;
  /// max |C_i C_j - C_j C_i|.
  Rational commutator_defect = 0;
  long truncation = 0;
  bool flat() const { return symmetry_defect == 0 && commutator_defect == 0; }
};

/// Curvature terms compared on classes of degree <= truncation.
FlatnessReport check_flatness(const Connection& connection, long truncation);

struct ConnectionShape {
  /// Every C_j maps degree l to degree l + 2 only.
  bool griffiths_shift = false;
  /// Each span of frame elements of degree >= 2l is preserved.
  bool weight_filtration_invariant = false;
  /// Smallest k with (sum_j C_j(0))^k = 0; 0 if not nilpotent.
  int nilpotency_index = 0;
};

ConnectionShape connection_shape(const Connection& connection);

/// Entries (k, k+1) of the single matrix of a rank-one connection, as
/// power series in q through q^T, each multiplied by `scale`.
std::vector<PowerSeries> superdiagonal(const Connection& connection, const Rational& scale, int truncation);

/// Rank-one ring of a degree-(n+2) hypersurface in P^{n+1}: basis
/// H^0..H^n, <H^a H^b H^c> = n + 2 for a + b + c = n, and for each degree d
/// Phi_d(H^a, H^b, H^c) = d^l n_d taken from the matching entry of the
/// instanton table (l = number of 1's among a, b, c). Classes are kept
/// through degree `truncation`.
QuantumRing hypersurface_ring(const yukawa::InstantonTable& table, int truncation);

/// theta_j applied to every entry: q^eta -> eta_j q^eta.
CurveSeries theta(const CurveSeries& s, size_t j);

}  // namespace mirror::quantum
