#pragma once

// Truncated formal power series, logarithmic series, nilpotent-parameter
// polynomials and Laurent data over exact rationals.

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mirror/rational.hpp"

namespace mirror {

enum class Variable { z, q, w };

std::string_view to_string(Variable var);
Variable parse_variable(std::string_view text);

/// Series sum_{k=0}^{T} c_k x^k; every coefficient of exponent > T is
/// unknown. Binary operations return the smaller of the two truncation
/// orders and reject operands with different variables.
class PowerSeries {
 public:
  /// The zero series in z with truncation order 0.
  PowerSeries() : PowerSeries(Variable::z, 0) {}
  PowerSeries(Variable var, int truncation);
  PowerSeries(Variable var, std::vector<Rational> coefficients);

  static PowerSeries constant(Variable var, int truncation, const Rational& value);
  static PowerSeries one(Variable var, int truncation) { return constant(var, truncation, 1); }
  static PowerSeries monomial(Variable var, int truncation, int exponent, const Rational& coeff = 1);

  Variable variable() const { return var_; }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Lowest exponent with a nonzero coefficient, or nullopt for zero.
  std::optional<int> valuation() const;

  PowerSeries truncated(int truncation) const;
  /// Multiplication by x^k (k >= 0), keeping the truncation order.
  PowerSeries shifted(int k) const;
  /// Substitution this(inner). inner must have zero constant term; the
  /// result lives in inner's variable.
  PowerSeries compose(const PowerSeries& inner) const;
  /// Same coefficients, different variable tag.
  PowerSeries retagged(Variable var) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  PowerSeries operator-() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Variable var_;
  std::vector<Rational> coeffs_;
};

/// Requires zero constant term.
PowerSeries exp_series(const PowerSeries& a);
/// Requires constant term one.
PowerSeries log_series(const PowerSeries& a);
/// Compositional inverse of f = x + O(x^2), computed by Lagrange inversion.
/// The result is tagged `result_var`.
PowerSeries revert(const PowerSeries& f, Variable result_var);
/// As above, with the z <-> q chart swap (w maps to itself).
PowerSeries revert(const PowerSeries& f);
/// Logarithmic derivative x d/dx.
PowerSeries theta(const PowerSeries& f);

/// q^d + q^{2d} + ... through q^T.
PowerSeries lambert_expand(int d, int truncation, Variable var = Variable::q);

struct LambertInversion {
  int degree_power = 0;
  /// numbers[d-1] is n_d.
  std::vector<Rational> numbers;
  bool integral = true;
};

/// Solves c(q) = sum_d n_d d^ell q^d/(1-q^d) for n_1..n_T.
LambertInversion lambert_invert(const PowerSeries& c, int degree_power);
/// sum_d n_d d^ell q^d/(1-q^d) through q^T.
PowerSeries lambert_synthesize(std::span<const Rational> numbers, int degree_power, int truncation,
                               Variable var = Variable::q);

/// sum_i (log x)^i * parts[i], each part a PowerSeries in x. Stores plain
/// powers of the logarithm; trailing zero parts are dropped.
class LogSeries {
 public:
  explicit LogSeries(PowerSeries single_valued);
  explicit LogSeries(std::vector<PowerSeries> parts);

  /// (log x)^power.
  static LogSeries log_power(Variable var, int truncation, int power);

  Variable variable() const { return parts_.front().variable(); }
  int truncation() const { return parts_.front().truncation(); }
  int max_log_degree() const { return static_cast<int>(parts_.size()) - 1; }
  /// Coefficient of (log x)^i; zero past the top degree.
  PowerSeries part(int i) const;
  const std::vector<PowerSeries>& parts() const { return parts_; }

  bool is_zero() const;
  bool is_single_valued() const { return parts_.size() == 1; }
  /// Throws invariant_error unless all log terms vanish.
  const PowerSeries& as_power_series() const;

  /// Substitution log x -> log x + shift.
  LogSeries shift_log(const Rational& shift) const;

  LogSeries& operator+=(const LogSeries& other);
  LogSeries& operator-=(const LogSeries& other);
  LogSeries& operator*=(const PowerSeries& factor);
  LogSeries& operator*=(const Rational& scalar);

  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(LogSeries a, const PowerSeries& b) { return a *= b; }
  friend LogSeries operator*(const PowerSeries& b, LogSeries a) { return a *= b; }
  friend LogSeries operator*(LogSeries a, const Rational& s) { return a *= s; }
  friend LogSeries operator*(const Rational& s, LogSeries a) { return a *= s; }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator/(const LogSeries& a, const PowerSeries& b);

  friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.parts_ == b.parts_; }

 private:
  void normalize();
  std::vector<PowerSeries> parts_;
};

LogSeries theta(const LogSeries& f);

inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline PowerSeries zero_like(const PowerSeries& s) { return PowerSeries(s.variable(), s.truncation()); }
inline PowerSeries one_like(const PowerSeries& s) { return PowerSeries::one(s.variable(), s.truncation()); }

/// Polynomials in a parameter rho modulo rho^m, with coefficients in a
/// commutative ring (Rational or PowerSeries).
template <class Coeff>
class NilpotentPoly {
 public:
  explicit NilpotentPoly(std::vector<Coeff> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw precondition_error("nilpotent polynomial needs rho^m with m >= 1");
  }
  /// a + b*rho mod rho^m.
  static NilpotentPoly linear(int m, const Coeff& a, const Coeff& b) {
    std::vector<Coeff> c(static_cast<size_t>(m), zero_like(a));
    c[0] = a;
    if (m > 1) c[1] = b;
    return NilpotentPoly(std::move(c));
  }

  int nilpotency() const { return static_cast<int>(c_.size()); }
  const Coeff& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  NilpotentPoly& operator+=(const NilpotentPoly& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  NilpotentPoly& operator-=(const NilpotentPoly& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend NilpotentPoly operator+(NilpotentPoly a, const NilpotentPoly& b) { return a += b; }
  friend NilpotentPoly operator-(NilpotentPoly a, const NilpotentPoly& b) { return a -= b; }
  friend NilpotentPoly operator*(const NilpotentPoly& a, const NilpotentPoly& b) {
    a.check(b);
    std::vector<Coeff> out(a.c_.size(), zero_like(a.c_[0]));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; i + j < a.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return NilpotentPoly(std::move(out));
  }
  friend NilpotentPoly operator*(NilpotentPoly a, const Coeff& s) {
    for (auto& x : a.c_) x *= s;
    return a;
  }

  /// Requires an invertible constant coefficient.
  NilpotentPoly inverse() const {
    std::vector<Coeff> b(c_.size(), zero_like(c_[0]));
    Coeff inv0 = one_like(c_[0]) / c_[0];
    b[0] = inv0;
    for (size_t k = 1; k < c_.size(); ++k) {
      Coeff acc = zero_like(c_[0]);
      for (size_t j = 1; j <= k; ++j) acc += c_[j] * b[k - j];
      b[k] = -(acc * inv0);
    }
    return NilpotentPoly(std::move(b));
  }
  friend NilpotentPoly operator/(const NilpotentPoly& a, const NilpotentPoly& b) { return a * b.inverse(); }

  friend bool operator==(const NilpotentPoly& a, const NilpotentPoly& b) { return a.c_ == b.c_; }

 private:
  void check(const NilpotentPoly& o) const {
    if (o.c_.size() != c_.size()) throw precondition_error("nilpotent polynomials with different rho^m");
  }
  std::vector<Coeff> c_;
};

/// Finitely supported sum of c_k x^k, k in Z. Zero coefficients are never
/// stored.
class LaurentElement {
 public:
  LaurentElement() = default;
  static LaurentElement monomial(long exponent, const Rational& coeff = 1);
  static LaurentElement constant(const Rational& value) { return monomial(0, value); }

  const std::map<long, Rational>& terms() const { return terms_; }
  Rational coefficient(long exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  LaurentElement& operator*=(const Rational& s);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(LaurentElement a, const Rational& s) { return a *= s; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(long exponent, const Rational& coeff);
  std::map<long, Rational> terms_;
};

/// Quotient num/den of Laurent polynomials, compared by cross
/// multiplication. Used for exact rational-function identities.
class LaurentFraction {
 public:
  LaurentFraction(LaurentElement num, LaurentElement den);
  static LaurentFraction constant(const Rational& value);
  /// x^k / (1 - x^k) for any nonzero k.
  static LaurentFraction geometric(long k);

  const LaurentElement& numerator() const { return num_; }
  const LaurentElement& denominator() const { return den_; }

  /// The constant value when the fraction is a constant function.
  std::optional<Rational> constant_value() const;

  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator*(const LaurentFraction& a, const Rational& s);
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b);

 private:
  LaurentElement num_;
  LaurentElement den_;
};

}  // namespace mirror
