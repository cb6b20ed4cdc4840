#include "mirror/avhs.hpp"

#include <algorithm>
#include <string>

namespace mirror::quantum {

namespace {

QuantumElement from_vector(const std::vector<Rational>& v, int rank) {
  QuantumElement out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = CurveSeries::constant(rank, v[i]);
  return out;
}

std::vector<Rational> constant_part(const QuantumElement& e, int rank) {
  std::vector<Rational> out(e.size());
  const CurveClass zero(static_cast<size_t>(rank), 0);
  for (size_t i = 0; i < e.size(); ++i) out[i] = e[i].coefficient(zero);
  return out;
}

Rational bounded_max(const CurveSeries& s, const CoefficientRingPolicy& policy, long truncation) {
  Rational m = 0;
  for (const auto& [eta, c] : s.terms())
    if (policy.degree(eta) <= truncation) m = std::max<Rational>(m, abs(c));
  return m;
}

}  // namespace

CurveSeries theta(const CurveSeries& s, size_t j) {
  CurveSeries out;
  for (const auto& [eta, c] : s.terms()) out.add_term(eta, c * eta.at(j));
  return out;
}

Connection avhs_connection(const QuantumRing& ring) {
  Connection conn{ring.degrees(), {}, ring.policy()};
  const size_t n = ring.size();
  for (size_t j = 0; j < n; ++j) {
    if (ring.degrees()[j] != 2) continue;
    CurveMatrix m(n, std::vector<CurveSeries>(n));
    for (size_t a = 0; a < n; ++a) {
      const QuantumElement image = ring.product(ring.basis(j), ring.basis(a));
      for (size_t b = 0; b < n; ++b) m[a][b] = image[b];
    }
    conn.matrices.push_back(std::move(m));
  }
  if (conn.matrices.empty()) throw precondition_error("ring has no degree-2 classes");
  return conn;
}

Connection avhs_connection_rank1(const QuantumRing& ring, size_t divisor) {
  if (divisor >= ring.size() || ring.degrees()[divisor] != 2) throw precondition_error("frame generator must have degree 2");
  const int n = ring.dimension();
  const int lattice_rank = ring.rank();
  const QuantumElement h = ring.basis(divisor);
  std::vector<std::vector<Rational>> powers{constant_part(ring.identity(), lattice_rank)};
  for (int k = 1; k <= n; ++k)
    powers.push_back(constant_part(ring.cup_product(h, from_vector(powers.back(), lattice_rank)), lattice_rank));

  // frame: N x (n+1), columns H^k; left inverse (F^T F)^{-1} F^T.
  const size_t big = ring.size();
  const size_t small = powers.size();
  Matrix frame = zero_matrix(big, small);
  for (size_t k = 0; k < small; ++k)
    for (size_t i = 0; i < big; ++i) frame[i][k] = powers[k][i];
  if (rank(frame) != small) throw invariant_error("cup powers of the generator are linearly dependent");
  Matrix ft = zero_matrix(small, big);
  for (size_t i = 0; i < big; ++i)
    for (size_t k = 0; k < small; ++k) ft[k][i] = frame[i][k];
  const auto gram_inv = inverse(multiply(ft, frame));
  const Matrix left = multiply(*gram_inv, ft);

  Connection conn{{}, {}, ring.policy()};
  for (int k = 0; k <= n; ++k) conn.degrees.push_back(2 * k);
  CurveMatrix m(small, std::vector<CurveSeries>(small));
  for (size_t k = 0; k < small; ++k) {
    const QuantumElement image = ring.product(h, from_vector(powers[k], lattice_rank));
    for (size_t a = 0; a < small; ++a)
      for (size_t i = 0; i < big; ++i)
        if (left[a][i] != 0) m[k][a] += image[i] * left[a][i];
    // Closure: the frame combination must reproduce the image exactly.
    for (size_t i = 0; i < big; ++i) {
      CurveSeries rebuilt;
      for (size_t a = 0; a < small; ++a)
        if (frame[i][a] != 0) rebuilt += m[k][a] * frame[i][a];
      if (rebuilt != image[i]) throw invariant_error("frame 1, H, ..., H^n is not closed under H*");
    }
  }
  conn.matrices.push_back(std::move(m));
  return conn;
}

FlatnessReport check_flatness(const Connection& connection, long truncation) {
  FlatnessReport report;
  report.truncation = truncation;
  const auto& policy = connection.policy;
  const auto& mats = connection.matrices;
  const size_t n = connection.degrees.size();
  for (size_t i = 0; i < mats.size(); ++i) {
    for (size_t j = i + 1; j < mats.size(); ++j) {
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          const CurveSeries sym = theta(mats[j][a][b], i) - theta(mats[i][a][b], j);
          report.symmetry_defect = std::max(report.symmetry_defect, bounded_max(sym, policy, truncation));
          CurveSeries comm;
          for (size_t m = 0; m < n; ++m) {
            comm += policy.multiply(mats[i][a][m], mats[j][m][b]);
            comm -= policy.multiply(mats[j][a][m], mats[i][m][b]);
          }
          report.commutator_defect = std::max(report.commutator_defect, bounded_max(comm, policy, truncation));
        }
      }
    }
  }
  return report;
}

ConnectionShape connection_shape(const Connection& connection) {
  ConnectionShape shape;
  shape.griffiths_shift = true;
  shape.weight_filtration_invariant = true;
  const auto& deg = connection.degrees;
  const size_t n = deg.size();
  Matrix sum = zero_matrix(n, n);
  const CurveClass zero(static_cast<size_t>(connection.policy.rank()), 0);
  for (const auto& m : connection.matrices) {
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        if (m[a][b].is_zero()) continue;
        shape.griffiths_shift = shape.griffiths_shift && deg[b] == deg[a] + 2;
        shape.weight_filtration_invariant = shape.weight_filtration_invariant && deg[b] >= deg[a];
        sum[a][b] += m[a][b].coefficient(zero);
      }
    }
  }
  Matrix power = sum;
  for (size_t k = 1; k <= n + 1; ++k) {
    if (is_zero(power)) {
      shape.nilpotency_index = static_cast<int>(k);
      break;
    }
    power = multiply(power, sum);
  }
  return shape;
}

QuantumRing hypersurface_ring(const yukawa::InstantonTable& table, int truncation) {
  const int n = table.dimension;
  if (n < 3) throw precondition_error("hypersurface ring needs dimension >= 3");
  const size_t size = static_cast<size_t>(n) + 1;
  std::vector<int> degrees;
  for (int k = 0; k <= n; ++k) degrees.push_back(2 * k);
  TripleTensor classical(size * size * size, 0);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) classical[(static_cast<size_t>(a) * size + static_cast<size_t>(b)) * size +
                                                static_cast<size_t>(n - a - b)] = n + 2;
  GWTable gw(n, degrees);
  for (int d = 1; d <= truncation; ++d) {
    const CurveClass eta{d};
    gw.add_class(eta, 0);
    for (int a = 1; 3 * a <= n; ++a) {
      for (int b = a; a + 2 * b <= n; ++b) {
        const int c = n - a - b;
        const auto it = std::find_if(table.entries.begin(), table.entries.end(),
                                     [&](const yukawa::CouplingInstantons& e) { return e.a == a && e.b == b; });
        if (it == table.entries.end()) {
          throw precondition_error("instanton table has no coupling for <H^" + std::to_string(a) + " H^" +
                                   std::to_string(b) + " H^" + std::to_string(c) + ">");
        }
        if (static_cast<size_t>(d) > it->inversion.numbers.size()) throw precondition_error("instanton table too short");
        const int ell = yukawa::degree_power(n, a, b);
        Rational weight = 1;
        for (int i = 0; i < ell; ++i) weight *= d;
        gw.set(eta, a, b, c, it->inversion.numbers[static_cast<size_t>(d - 1)] * weight);
      }
    }
  }
  return QuantumRing(std::move(gw), std::move(classical), CoefficientRingPolicy::formal_semigroup({{1}}, truncation));
}

std::vector<PowerSeries> superdiagonal(const Connection& connection, const Rational& scale, int truncation) {
  if (connection.matrices.size() != 1) throw precondition_error("superdiagonal needs a single connection matrix");
  const auto& m = connection.matrices.front();
  std::vector<PowerSeries> out;
  for (size_t k = 0; k + 1 < m.size(); ++k) out.push_back(to_power_series(m[k][k + 1], truncation) * scale);
  return out;
}

}  // namespace mirror::quantum
