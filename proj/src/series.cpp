#include "mirror/series.hpp"

#include <algorithm>
#include <string>

namespace mirror {

std::string_view to_string(Variable var) {
  switch (var) {
    case Variable::z: return "z";
    case Variable::q: return "q";
    case Variable::w: return "w";
  }
  return "?";
}

Variable parse_variable(std::string_view text) {
  if (text == "z") return Variable::z;
  if (text == "q") return Variable::q;
  if (text == "w") return Variable::w;
  throw precondition_error("unknown series variable '" + std::string(text) + "'");
}

namespace {

void require_same_variable(const PowerSeries& a, const PowerSeries& b) {
  if (a.variable() != b.variable()) {
    throw precondition_error("series in different variables (" + std::string(to_string(a.variable())) +
                             " vs " + std::string(to_string(b.variable())) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PowerSeries

PowerSeries::PowerSeries(Variable var, int truncation) : var_(var) {
  if (truncation < 0) throw precondition_error("negative truncation order");
  coeffs_.assign(static_cast<size_t>(truncation) + 1, Rational(0));
}

PowerSeries::PowerSeries(Variable var, std::vector<Rational> coefficients)
    : var_(var), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw precondition_error("power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(Variable var, int truncation, const Rational& value) {
  PowerSeries s(var, truncation);
  s.coeffs_[0] = value;
  return s;
}

PowerSeries PowerSeries::monomial(Variable var, int truncation, int exponent, const Rational& coeff) {
  if (exponent < 0) throw precondition_error("negative exponent in power series monomial");
  PowerSeries s(var, truncation);
  if (exponent <= truncation) s.coeffs_[static_cast<size_t>(exponent)] = coeff;
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<int> PowerSeries::valuation() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return std::nullopt;
}

PowerSeries PowerSeries::truncated(int truncation) const {
  if (truncation < 0) throw precondition_error("negative truncation order");
  if (truncation > this->truncation()) {
    throw precondition_error("cannot extend a series past its truncation order");
  }
  return PowerSeries(var_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + truncation + 1));
}

PowerSeries PowerSeries::shifted(int k) const {
  if (k < 0) throw precondition_error("negative shift");
  PowerSeries out(var_, truncation());
  for (int i = 0; i + k <= truncation(); ++i) out.coeffs_[static_cast<size_t>(i + k)] = coeffs_[static_cast<size_t>(i)];
  return out;
}

PowerSeries PowerSeries::retagged(Variable var) const { return PowerSeries(var, coeffs_); }

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner[0] != 0) throw precondition_error("composition needs an inner series without constant term");
  const int T = std::min(truncation(), inner.truncation());
  const PowerSeries g = inner.truncated(T);
  // Horner: f(g) = c0 + g(c1 + g(c2 + ...)).
  PowerSeries acc = PowerSeries::constant(g.variable(), T, coeffs_[static_cast<size_t>(T)]);
  for (int k = T - 1; k >= 0; --k) {
    acc *= g;
    acc.coeffs_[0] += coeffs_[static_cast<size_t>(k)];
  }
  return acc;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0) throw precondition_error("division by a series with zero constant term");
  const int T = truncation();
  PowerSeries b(var_, T);
  Rational inv0 = 1 / coeffs_[0];
  b.coeffs_[0] = inv0;
  for (int k = 1; k <= T; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeffs_[static_cast<size_t>(j)] * b.coeffs_[static_cast<size_t>(k - j)];
    b.coeffs_[static_cast<size_t>(k)] = -acc * inv0;
  }
  return b;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  require_same_variable(*this, other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  require_same_variable(*this, other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& other) {
  require_same_variable(*this, other);
  const size_t n = std::min(coeffs_.size(), other.coeffs_.size());
  std::vector<Rational> out(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  require_same_variable(a, b);
  return a * b.inverse();
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

// ---------------------------------------------------------------------------
// Free series operations

PowerSeries exp_series(const PowerSeries& a) {
  if (a[0] != 0) throw precondition_error("exp needs a series with zero constant term");
  const int T = a.truncation();
  PowerSeries e(a.variable(), T);
  e[0] = 1;
  // k e_k = sum_{j=1}^k j a_j e_{k-j}
  for (int k = 1; k <= T; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += j * a[j] * e[k - j];
    e[k] = acc / k;
  }
  return e;
}

PowerSeries log_series(const PowerSeries& a) {
  if (a[0] != 1) throw precondition_error("log needs a series with constant term 1");
  const int T = a.truncation();
  PowerSeries l(a.variable(), T);
  // k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  for (int k = 1; k <= T; ++k) {
    Rational acc = k * a[k];
    for (int j = 1; j < k; ++j) acc -= j * l[j] * a[k - j];
    l[k] = acc / k;
  }
  return l;
}

PowerSeries revert(const PowerSeries& f, Variable result_var) {
  if (f[0] != 0 || f.truncation() < 1 || f[1] != 1) {
    throw precondition_error("reversion needs f(0) = 0 and f'(0) = 1");
  }
  const int T = f.truncation();
  // Lagrange inversion: [q^k] g = (1/k) [x^{k-1}] (x/f)^k.
  std::vector<Rational> quotient(static_cast<size_t>(T), Rational(0));
  for (int k = 1; k <= T; ++k) quotient[static_cast<size_t>(k - 1)] = f[k];
  const PowerSeries h = PowerSeries(f.variable(), quotient).inverse();
  PowerSeries g(result_var, T);
  PowerSeries power = PowerSeries::one(f.variable(), T - 1);
  for (int k = 1; k <= T; ++k) {
    power *= h;
    g[k] = power[k - 1] / k;
  }
  return g;
}

PowerSeries revert(const PowerSeries& f) {
  switch (f.variable()) {
    case Variable::z: return revert(f, Variable::q);
    case Variable::q: return revert(f, Variable::z);
    case Variable::w: return revert(f, Variable::w);
  }
  return revert(f, f.variable());
}

PowerSeries theta(const PowerSeries& f) {
  PowerSeries out = f;
  for (int k = 0; k <= f.truncation(); ++k) out[k] *= k;
  return out;
}

PowerSeries lambert_expand(int d, int truncation, Variable var) {
  if (d <= 0) throw precondition_error("Lambert term needs a positive degree");
  PowerSeries s(var, truncation);
  for (int k = d; k <= truncation; k += d) s[k] = 1;
  return s;
}

LambertInversion lambert_invert(const PowerSeries& c, int degree_power) {
  if (degree_power < 0) throw precondition_error("negative degree power");
  if (c[0] != 0) throw precondition_error("Lambert inversion needs zero constant term");
  LambertInversion out;
  out.degree_power = degree_power;
  const int T = c.truncation();
  std::vector<BigInt> weight(static_cast<size_t>(T) + 1);
  for (int d = 1; d <= T; ++d) mpz_ui_pow_ui(weight[static_cast<size_t>(d)].get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(degree_power));
  out.numbers.assign(static_cast<size_t>(T), Rational(0));
  for (int m = 1; m <= T; ++m) {
    Rational rest = c[m];
    for (int d = 1; d < m; ++d)
      if (m % d == 0) rest -= out.numbers[static_cast<size_t>(d - 1)] * weight[static_cast<size_t>(d)];
    Rational n_m = rest / Rational(weight[static_cast<size_t>(m)]);
    if (!is_integer(n_m)) out.integral = false;
    out.numbers[static_cast<size_t>(m - 1)] = n_m;
  }
  return out;
}

PowerSeries lambert_synthesize(std::span<const Rational> numbers, int degree_power, int truncation, Variable var) {
  PowerSeries s(var, truncation);
  for (size_t i = 0; i < numbers.size(); ++i) {
    const int d = static_cast<int>(i) + 1;
    if (d > truncation) break;
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(degree_power));
    Rational coeff = numbers[i] * Rational(w);
    for (int k = d; k <= truncation; k += d) s[k] += coeff;
  }
  return s;
}

// ---------------------------------------------------------------------------
// LogSeries

LogSeries::LogSeries(PowerSeries single_valued) { parts_.push_back(std::move(single_valued)); }

LogSeries::LogSeries(std::vector<PowerSeries> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw precondition_error("log series needs at least one part");
  const int T = std::min_element(parts_.begin(), parts_.end(), [](const auto& a, const auto& b) {
                  return a.truncation() < b.truncation();
                })->truncation();
  for (auto& p : parts_) {
    require_same_variable(parts_.front(), p);
    if (p.truncation() != T) p = p.truncated(T);
  }
  normalize();
}

LogSeries LogSeries::log_power(Variable var, int truncation, int power) {
  if (power < 0) throw precondition_error("negative log power");
  std::vector<PowerSeries> parts(static_cast<size_t>(power) + 1, PowerSeries(var, truncation));
  parts.back()[0] = 1;
  return LogSeries(std::move(parts));
}

void LogSeries::normalize() {
  while (parts_.size() > 1 && parts_.back().is_zero()) parts_.pop_back();
}

PowerSeries LogSeries::part(int i) const {
  if (i < 0) throw precondition_error("negative log degree");
  if (i > max_log_degree()) return PowerSeries(variable(), truncation());
  return parts_[static_cast<size_t>(i)];
}

bool LogSeries::is_zero() const { return parts_.size() == 1 && parts_.front().is_zero(); }

const PowerSeries& LogSeries::as_power_series() const {
  if (!is_single_valued()) {
    throw invariant_error("log terms up to (log " + std::string(to_string(variable())) + ")^" +
                          std::to_string(max_log_degree()) + " did not cancel");
  }
  return parts_.front();
}

LogSeries LogSeries::shift_log(const Rational& shift) const {
  // (L + s)^i = sum_a C(i, a) s^{i-a} L^a
  const int top = max_log_degree();
  std::vector<PowerSeries> out(static_cast<size_t>(top) + 1, PowerSeries(variable(), truncation()));
  for (int i = 0; i <= top; ++i) {
    Rational s_pow = 1;
    for (int a = i; a >= 0; --a) {
      out[static_cast<size_t>(a)] += parts_[static_cast<size_t>(i)] * (Rational(binomial(i, a)) * s_pow);
      s_pow *= shift;
    }
  }
  return LogSeries(std::move(out));
}

LogSeries& LogSeries::operator+=(const LogSeries& other) {
  const size_t n = std::max(parts_.size(), other.parts_.size());
  const int T = std::min(truncation(), other.truncation());
  std::vector<PowerSeries> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    PowerSeries a = i < parts_.size() ? parts_[i].truncated(T) : PowerSeries(variable(), T);
    if (i < other.parts_.size()) a += other.parts_[i];
    out.push_back(std::move(a));
  }
  parts_ = std::move(out);
  normalize();
  return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& other) { return *this += other * Rational(-1); }

LogSeries& LogSeries::operator*=(const PowerSeries& factor) {
  for (auto& p : parts_) p *= factor;
  normalize();
  return *this;
}

LogSeries& LogSeries::operator*=(const Rational& scalar) {
  for (auto& p : parts_) p *= scalar;
  normalize();
  return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  const int T = std::min(a.truncation(), b.truncation());
  std::vector<PowerSeries> out(a.parts_.size() + b.parts_.size() - 1, PowerSeries(a.variable(), T));
  for (size_t i = 0; i < a.parts_.size(); ++i)
    for (size_t j = 0; j < b.parts_.size(); ++j) out[i + j] += a.parts_[i] * b.parts_[j];
  return LogSeries(std::move(out));
}

LogSeries operator/(const LogSeries& a, const PowerSeries& b) { return a * b.inverse(); }

LogSeries theta(const LogSeries& f) {
  // theta((log x)^i g) = (log x)^i theta(g) + i (log x)^{i-1} g
  const int top = f.max_log_degree();
  std::vector<PowerSeries> out;
  out.reserve(static_cast<size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    PowerSeries term = theta(f.parts()[static_cast<size_t>(i)]);
    if (i < top) term += f.parts()[static_cast<size_t>(i + 1)] * Rational(i + 1);
    out.push_back(std::move(term));
  }
  return LogSeries(std::move(out));
}

// ---------------------------------------------------------------------------
// Laurent data

LaurentElement LaurentElement::monomial(long exponent, const Rational& coeff) {
  LaurentElement e;
  e.add_term(exponent, coeff);
  return e;
}

Rational LaurentElement::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentElement::add_term(long exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentElement& LaurentElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [i, x] : a.terms_)
    for (const auto& [j, y] : b.terms_) out.add_term(i + j, x * y);
  return out;
}

LaurentFraction::LaurentFraction(LaurentElement num, LaurentElement den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw precondition_error("Laurent fraction with zero denominator");
}

LaurentFraction LaurentFraction::constant(const Rational& value) {
  return LaurentFraction(LaurentElement::constant(value), LaurentElement::constant(1));
}

LaurentFraction LaurentFraction::geometric(long k) {
  if (k == 0) throw precondition_error("geometric fraction needs a nonzero exponent");
  return LaurentFraction(LaurentElement::monomial(k), LaurentElement::constant(1) - LaurentElement::monomial(k));
}

std::optional<Rational> LaurentFraction::constant_value() const {
  if (num_.is_zero()) return Rational(0);
  const auto& [k_den, c_den] = *den_.terms().begin();
  const auto& [k_num, c_num] = *num_.terms().begin();
  if (k_den != k_num) return std::nullopt;
  Rational c = c_num / c_den;
  if (num_ == den_ * c) return c;
  return std::nullopt;
}

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
  return LaurentFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
  return LaurentFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
  return LaurentFraction(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFraction operator*(const LaurentFraction& a, const Rational& s) { return LaurentFraction(a.num_ * s, a.den_); }

bool operator==(const LaurentFraction& a, const LaurentFraction& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

}  // namespace mirror
