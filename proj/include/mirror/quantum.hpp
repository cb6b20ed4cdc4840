#pragma once

// Quantum cohomology rings: three-point Gromov-Witten data over a
// semigroup-type coefficient ring, the quantum product and correlation
// functions, and the Calabi-Yau threefold and projective-space examples.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mirror/linalg.hpp"
#include "mirror/series.hpp"

namespace mirror::quantum {

/// Class in H_2(M; Z)/torsion in a fixed basis.
using CurveClass = std::vector<long>;

std::string to_string(const CurveClass& eta);

/// Finite sum of c_eta q^eta; zero coefficients are never stored.
class CurveSeries {
 public:
  CurveSeries() = default;
  static CurveSeries constant(int rank, const Rational& value);
  static CurveSeries monomial(const CurveClass& eta, const Rational& coeff = 1);

  const std::map<CurveClass, Rational>& terms() const { return terms_; }
  Rational coefficient(const CurveClass& eta) const;
  bool is_zero() const { return terms_.empty(); }
  /// Largest |coefficient|.
  Rational max_abs() const;

  CurveSeries& operator+=(const CurveSeries& o);
  CurveSeries& operator-=(const CurveSeries& o);
  CurveSeries& operator*=(const Rational& s);
  friend CurveSeries operator+(CurveSeries a, const CurveSeries& b) { return a += b; }
  friend CurveSeries operator-(CurveSeries a, const CurveSeries& b) { return a -= b; }
  friend CurveSeries operator*(CurveSeries a, const Rational& s) { return a *= s; }
  friend CurveSeries operator*(const Rational& s, CurveSeries a) { return a *= s; }
  friend bool operator==(const CurveSeries& a, const CurveSeries& b) { return a.terms_ == b.terms_; }

  void add_term(const CurveClass& eta, const Rational& c);

  std::string to_string() const;

 private:
  std::map<CurveClass, Rational> terms_;
};

/// Which q^eta survive in the coefficient ring.
class CoefficientRingPolicy {
 public:
  enum class Mode { polynomial, formal_semigroup, novikov };

  /// Finite sums only; q^eta/(1 - q^eta) weights are rejected.
  static CoefficientRingPolicy polynomial(int rank);
  /// Semigroup generated by `generators`. A strictly positive grading is
  /// found on the generators (certifying the finite partition property);
  /// terms of grading > truncation are dropped.
  static CoefficientRingPolicy formal_semigroup(std::vector<CurveClass> generators, long truncation);
  /// Generalized Laurent series in a Kahler functional omega, kept below
  /// the cutoff: omega . eta < cutoff.
  static CoefficientRingPolicy novikov(std::vector<Rational> omega, const Rational& cutoff);

  Mode mode() const { return mode_; }
  int rank() const { return rank_; }
  const std::vector<CurveClass>& generators() const { return generators_; }
  const std::vector<Rational>& grading() const { return omega_; }
  const Rational& cutoff() const { return cutoff_; }
  bool allows_lambert() const { return mode_ != Mode::polynomial; }
  std::string describe() const;

  /// omega . eta (the total degree in polynomial mode).
  Rational degree(const CurveClass& eta) const;
  bool keeps(const CurveClass& eta) const;
  CurveSeries filter(const CurveSeries& s) const;
  /// Product with the dropped terms never formed.
  CurveSeries multiply(const CurveSeries& a, const CurveSeries& b) const;
  /// q^eta/(1 - q^eta) = sum_{m>=1} q^{m eta} through the cutoff. Requires
  /// a strictly positive degree on eta.
  CurveSeries lambert(const CurveClass& eta) const;

 private:
  Mode mode_ = Mode::polynomial;
  int rank_ = 0;
  std::vector<CurveClass> generators_;
  std::vector<Rational> omega_;
  Rational cutoff_ = 0;
  bool inclusive_ = true;
};

/// Triple invariants Phi_eta(zeta_i, zeta_j, zeta_k), symmetric in i,j,k.
/// Basis degrees are real degrees (2 for a divisor class).
class GWTable {
 public:
  GWTable(int dimension, std::vector<int> degrees);

  int dimension() const { return dimension_; }
  const std::vector<int>& degrees() const { return degrees_; }
  size_t size() const { return degrees_.size(); }

  /// Declares a curve class with its canonical-class pairing -K . eta.
  void add_class(const CurveClass& eta, long minus_k_dot);
  /// Stores (or overwrites) an entry. Throws precondition_error when the
  /// entry violates the grading rule l_i + l_j + l_k = 2n + 2(-K . eta)
  /// with every l >= 2.
  void set(const CurveClass& eta, int i, int j, int k, const Rational& value);
  Rational get(const CurveClass& eta, int i, int j, int k) const;

  struct ClassData {
    long minus_k_dot = 0;
    /// Keys are sorted index triples.
    std::map<std::array<int, 3>, Rational> entries;
  };
  const std::map<CurveClass, ClassData>& classes() const { return classes_; }
  /// Curve lattice rank; 0 while no class has been added.
  int rank() const { return rank_; }

  static GWTable from_json(const nlohmann::ordered_json& value);
  nlohmann::ordered_json to_json() const;

 private:
  int dimension_;
  std::vector<int> degrees_;
  int rank_ = 0;
  std::map<CurveClass, ClassData> classes_;
};

/// Coefficients over the basis; entry i multiplies zeta_i.
class QuantumElement {
 public:
  explicit QuantumElement(size_t size) : coeffs_(size) {}
  static QuantumElement basis(size_t size, size_t i, int rank);

  size_t size() const { return coeffs_.size(); }
  const CurveSeries& operator[](size_t i) const { return coeffs_.at(i); }
  CurveSeries& operator[](size_t i) { return coeffs_.at(i); }

  QuantumElement& operator+=(const QuantumElement& o);
  QuantumElement& operator-=(const QuantumElement& o);
  friend QuantumElement operator+(QuantumElement a, const QuantumElement& b) { return a += b; }
  friend QuantumElement operator-(QuantumElement a, const QuantumElement& b) { return a -= b; }
  friend QuantumElement operator*(QuantumElement a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend bool operator==(const QuantumElement& a, const QuantumElement& b) { return a.coeffs_ == b.coeffs_; }

  Rational max_abs() const;

 private:
  std::vector<CurveSeries> coeffs_;
};

/// Dense classical triple intersections, index (i * N + j) * N + k.
using TripleTensor = std::vector<Rational>;

class QuantumRing {
 public:
  /// Validates: symmetric classical data respecting degrees, a unique
  /// degree-0 identity, a nondegenerate cup pairing, and GW classes
  /// compatible with the policy.
  QuantumRing(GWTable gw, TripleTensor classical, CoefficientRingPolicy policy);

  const GWTable& gw() const { return gw_; }
  const CoefficientRingPolicy& policy() const { return policy_; }
  size_t size() const { return gw_.size(); }
  int dimension() const { return gw_.dimension(); }
  const std::vector<int>& degrees() const { return gw_.degrees(); }
  size_t identity_index() const { return identity_; }
  int rank() const { return policy_.rank(); }

  const Rational& classical(size_t i, size_t j, size_t k) const;
  /// (zeta_i . zeta_j)|[M] = classical(identity, i, j).
  const Matrix& pairing() const { return pairing_; }
  /// Correlation <zeta_i zeta_j zeta_k>: classical term plus the weighted
  /// GW contributions.
  const CurveSeries& correlation(size_t i, size_t j, size_t k) const;

  QuantumElement basis(size_t i) const { return QuantumElement::basis(size(), i, rank()); }
  QuantumElement identity() const { return basis(identity_); }
  QuantumElement product(const QuantumElement& x, const QuantumElement& y) const;
  CurveSeries correlation(const QuantumElement& x, const QuantumElement& y, const QuantumElement& z) const;
  /// epsilon(x) = <x 1 1>.
  CurveSeries expectation(const QuantumElement& x) const;
  /// The q^0 part of x * y.
  QuantumElement cup_product(const QuantumElement& x, const QuantumElement& y) const;

 private:
  size_t index(size_t i, size_t j, size_t k) const { return (i * size() + j) * size() + k; }
  GWTable gw_;
  TripleTensor classical_;
  CoefficientRingPolicy policy_;
  size_t identity_ = 0;
  Matrix pairing_;
  Matrix pairing_inverse_;
  std::vector<CurveSeries> correlations_;
  /// structure_[(i * N + j) * N + k] = coefficient of zeta_k in zeta_i * zeta_j.
  std::vector<CurveSeries> structure_;
};

QuantumElement quantum_product(const QuantumElement& x, const QuantumElement& y, const QuantumRing& ring);
CurveSeries correlation(const QuantumElement& x, const QuantumElement& y, const QuantumElement& z,
                        const QuantumRing& ring);

/// Basis 1, zeta, ..., zeta^n; Phi_L(zeta^a, zeta^b, zeta^c) = 1 when
/// a + b + c = 2n + 1; -K . L = n + 1. Polynomial coefficient ring.
QuantumRing cpn_ring(int n);

/// k-fold quantum power of x (k >= 1).
QuantumElement quantum_power(const QuantumElement& x, int k, const QuantumRing& ring);

struct AssociativityReport {
  /// Largest |coefficient| of (x*y)*z - x*(y*z) over basis triples, using
  /// terms of degree <= truncation.
  Rational max_defect = 0;
  /// Largest |coefficient| of x*y - y*x.
  Rational commutativity_defect = 0;
  size_t triples_checked = 0;
  long truncation = 0;
};

/// Basis triples are split across `threads` workers; the result does not
/// depend on the thread count.
AssociativityReport check_associativity(const QuantumRing& ring, long truncation, unsigned threads = 1);

/// Intersection data of a Calabi-Yau threefold: divisor basis D_1..D_r,
/// triple intersections kappa_abc, and curve counts n_eta.
struct Cy3Data {
  int rank = 0;
  /// kappa[(a * r + b) * r + c], symmetric.
  std::vector<Rational> kappa;
  std::map<CurveClass, Rational> instantons;

  const Rational& triple(int a, int b, int c) const {
    return kappa.at(static_cast<size_t>((a * rank + b) * rank + c));
  }
  void set_triple(int a, int b, int c, const Rational& value);
  friend bool operator==(const Cy3Data&, const Cy3Data&) = default;
};

/// Basis (1, D_1..D_r, C^1..C^r, pt) with D_a . C^b = delta_ab, and
/// Phi_eta(D_a, D_b, D_c) = (D_a . eta)(D_b . eta)(D_c . eta) n_eta.
QuantumRing cy3_ring(const Cy3Data& data, const CoefficientRingPolicy& policy);

/// Rank-one data: kappa = H^3, instantons[d-1] = n_d.
Cy3Data one_parameter_cy3(const Rational& triple, std::span<const Rational> instantons);

/// <zeta_1 zeta_2 zeta_3> for zeta_i = h_i H on a one-parameter threefold:
/// h_1 h_2 h_3 (H^3 + sum_d d^3 n_d q^d/(1 - q^d)) through q^T.
PowerSeries cy3_correlation(const std::array<Rational, 3>& multiples, const Rational& triple,
                            std::span<const Rational> instantons, int truncation);

/// Rank-one curve series as a power series in q through q^T.
PowerSeries to_power_series(const CurveSeries& s, int truncation);

}  // namespace mirror::quantum
