#pragma once

// Cohomology of Grassmannians as symmetric functions in the Chern roots of
// the dual tautological bundle, reduced to Schur classes in the k x (n-k)
// box, plus projective bundles over them.

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mirror/rational.hpp"

namespace mirror::intersection {

/// Weakly decreasing nonnegative parts, trailing zeros removed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Part i, zero past the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
  bool fits_in_box(int rows, int cols) const;
  /// Complement inside the rows x cols box (requires fits_in_box).
  Partition complement(int rows, int cols) const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions inside the rows x cols box, ordered by size then
/// lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Sparse polynomial over Q keyed by exponent vectors of equal length.
using MonomialPoly = std::map<std::vector<int>, Rational>;

MonomialPoly poly_add(const MonomialPoly& a, const MonomialPoly& b);
MonomialPoly poly_multiply(const MonomialPoly& a, const MonomialPoly& b);
/// Product with all monomials of total degree > max_degree dropped
/// (max_degree < 0 means no truncation).
MonomialPoly poly_multiply(const MonomialPoly& a, const MonomialPoly& b, int max_degree);
MonomialPoly poly_constant(int variables, const Rational& value);
/// Degree-m complete homogeneous symmetric polynomial.
MonomialPoly complete_symmetric(int variables, int m);
/// Degree-m elementary symmetric polynomial.
MonomialPoly elementary_symmetric(int variables, int m);
/// Schur polynomial s_lambda(x_1..x_vars) by the Jacobi-Trudi determinant.
MonomialPoly schur_polynomial(int variables, const Partition& lambda);

/// Element of H^*(Gr(k, n)) in the Schur basis sigma_lambda.
class GrassmannClass {
 public:
  GrassmannClass(int k, int n);
  static GrassmannClass schubert(int k, int n, const Partition& lambda, const Rational& coeff = 1);
  static GrassmannClass one(int k, int n) { return schubert(k, n, Partition()); }
  /// sigma_{1^i} = c_i of the dual tautological bundle.
  static GrassmannClass special_column(int k, int n, int i);
  /// Image of a symmetric polynomial in the roots x_1..x_k; classes outside
  /// the box are dropped. Throws precondition_error if f is not symmetric.
  static GrassmannClass from_symmetric(int k, int n, const MonomialPoly& f);

  int k() const { return k_; }
  int n() const { return n_; }
  int dimension() const { return k_ * (n_ - k_); }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coefficient(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }
  /// The part of cohomological degree 2d (partitions of size d).
  GrassmannClass homogeneous(int d) const;

  GrassmannClass& operator+=(const GrassmannClass& o);
  GrassmannClass& operator-=(const GrassmannClass& o);
  GrassmannClass& operator*=(const Rational& s);
  friend GrassmannClass operator+(GrassmannClass a, const GrassmannClass& b) { return a += b; }
  friend GrassmannClass operator-(GrassmannClass a, const GrassmannClass& b) { return a -= b; }
  friend GrassmannClass operator*(GrassmannClass a, const Rational& s) { return a *= s; }
  friend GrassmannClass operator*(const Rational& s, GrassmannClass a) { return a *= s; }
  friend GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b);
  GrassmannClass operator-() const { return *this * Rational(-1); }
  friend bool operator==(const GrassmannClass& a, const GrassmannClass& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const Partition& lambda, const Rational& c);
  void check_ambient(const GrassmannClass& o) const;
  int k_;
  int n_;
  std::map<Partition, Rational> terms_;
};

GrassmannClass pieri_mult(const GrassmannClass& a, const GrassmannClass& b);
/// Coefficient of the point class (full box); zero when absent.
Rational integrate(const GrassmannClass& a);
/// Structure constants c_{lambda mu}^nu of H^*(Gr(k, n)), cached per (k, n).
const std::map<Partition, Rational>& schubert_product(int k, int n, const Partition& lambda, const Partition& mu);

/// c_1..c_rank of a bundle on Gr(k, n).
struct ChernVector {
  int rank = 0;
  std::vector<GrassmannClass> chern_classes;

  /// c_i with c_0 = 1 and c_i = 0 for i > rank.
  GrassmannClass c(int i) const;
  /// 1 + c_1 + ... + c_rank.
  GrassmannClass total() const;
};

/// The dual tautological bundle U* on Gr(k, n): c_i = sigma_{1^i}.
ChernVector dual_tautological(int k, int n);

/// c_d of Sym^k(E) for a rank-r bundle E as polynomials in c_1(E)..c_r(E),
/// for d = 0..max_degree. Key i of a term is the exponent of c_{i+1}.
std::vector<MonomialPoly> sym_power_chern_polynomials(int rank, int k, int max_degree);

/// Rewrites a symmetric polynomial in `variables` roots as a polynomial in
/// the elementary symmetric functions e_1..e_variables.
MonomialPoly to_elementary(const MonomialPoly& symmetric, int variables);

/// Evaluates a polynomial in c_1..c_r at ring elements.
template <class Ring>
Ring evaluate_chern_polynomial(const MonomialPoly& p, const std::vector<Ring>& c, const Ring& one) {
  Ring acc = one * Rational(0);
  for (const auto& [exps, coeff] : p) {
    Ring term = one * coeff;
    for (size_t i = 0; i < exps.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) term = term * c.at(i);
    acc = acc + term;
  }
  return acc;
}

/// Chern classes of Sym^k(E) by the splitting principle.
ChernVector chern_sym_power(const ChernVector& c, int k);
/// c(A + B) = c(A) c(B).
ChernVector chern_direct_sum(const ChernVector& a, const ChernVector& b);

class ProjectiveBundle;

/// Class on P(E) over Gr(k, n): sum_{j < rank E} a_j xi^j with base
/// coefficients a_j, kept in normal form by sum_i c_i(E) xi^{r-i} = 0.
class ProjBundleClass {
 public:
  ProjBundleClass(std::shared_ptr<const ProjectiveBundle> bundle, std::vector<GrassmannClass> coefficients);

  const ProjectiveBundle& bundle() const { return *bundle_; }
  const std::vector<GrassmannClass>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  ProjBundleClass homogeneous(int d) const;

  ProjBundleClass& operator+=(const ProjBundleClass& o);
  ProjBundleClass& operator-=(const ProjBundleClass& o);
  friend ProjBundleClass operator+(ProjBundleClass a, const ProjBundleClass& b) { return a += b; }
  friend ProjBundleClass operator-(ProjBundleClass a, const ProjBundleClass& b) { return a -= b; }
  friend ProjBundleClass operator*(const ProjBundleClass& a, const ProjBundleClass& b);
  friend ProjBundleClass operator*(ProjBundleClass a, const Rational& s);
  friend bool operator==(const ProjBundleClass& a, const ProjBundleClass& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_bundle(const ProjBundleClass& o) const;
  std::shared_ptr<const ProjectiveBundle> bundle_;
  std::vector<GrassmannClass> coeffs_;
};

/// Projectivization of lines in E over Gr(k, n); xi = c_1(O(1)).
class ProjectiveBundle : public std::enable_shared_from_this<ProjectiveBundle> {
 public:
  static std::shared_ptr<const ProjectiveBundle> create(int k, int n, ChernVector e);

  int k() const { return k_; }
  int n() const { return n_; }
  int rank() const { return e_.rank; }
  const ChernVector& bundle() const { return e_; }
  int dimension() const { return k_ * (n_ - k_) + e_.rank - 1; }

  ProjBundleClass one() const { return lift(GrassmannClass::one(k_, n_)); }
  ProjBundleClass xi() const;
  ProjBundleClass lift(const GrassmannClass& base) const;
  /// Coefficient of xi^{r-1} in normal form.
  GrassmannClass pushforward(const ProjBundleClass& a) const;
  Rational integrate(const ProjBundleClass& a) const;

 private:
  ProjectiveBundle(int k, int n, ChernVector e) : k_(k), n_(n), e_(std::move(e)) {}
  int k_;
  int n_;
  ChernVector e_;
};

/// Total Chern class of F (x) L from the Chern classes of F (rank r) and
/// ell = c_1(L): c_d = sum_i C(r - i, d - i) c_i(F) ell^{d-i}.
ProjBundleClass twisted_total_chern(const ProjectiveBundle& p, const ChernVector& f, const ProjBundleClass& ell);
/// (1 + N)^{-1} for N of positive degree.
ProjBundleClass inverse_total(const ProjBundleClass& total);

}  // namespace mirror::intersection
