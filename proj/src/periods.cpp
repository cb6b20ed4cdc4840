#include "mirror/periods.hpp"

#include <algorithm>
#include <string>

#include "mirror/linalg.hpp"

namespace mirror::periods {

namespace {

void require_degree(int degree) {
  if (degree < 3) {
    throw precondition_error("degree N = " + std::to_string(degree) +
                             " is below 3; no Calabi-Yau hypersurface of this form");
  }
}

// Stirling numbers of the second kind S(k, j), 0 <= j <= k <= order.
std::vector<std::vector<BigInt>> stirling2(int order) {
  std::vector<std::vector<BigInt>> s(static_cast<size_t>(order) + 1,
                                     std::vector<BigInt>(static_cast<size_t>(order) + 1, BigInt(0)));
  s[0][0] = 1;
  for (int k = 1; k <= order; ++k)
    for (int j = 1; j <= k; ++j)
      s[static_cast<size_t>(k)][static_cast<size_t>(j)] =
          BigInt(j) * s[static_cast<size_t>(k - 1)][static_cast<size_t>(j)] + s[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)];
  return s;
}

Rational coeff_at(const Polynomial& p, int k) {
  return k >= 0 && static_cast<size_t>(k) < p.size() ? p[static_cast<size_t>(k)] : Rational(0);
}

// Indicial data of sum_k R_k(u) theta_u^k at u = 0.
IndicialData indicial_at_origin(const std::vector<Polynomial>& local, const Location& where) {
  const int s = static_cast<int>(local.size()) - 1;
  auto order_of = [](const Polynomial& p) {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) return static_cast<int>(i);
    return -1;
  };
  int v = -1;
  for (const auto& r : local) {
    int o = order_of(r);
    if (o >= 0 && (v < 0 || o < v)) v = o;
  }
  if (order_of(local.back()) != v) throw precondition_error("irregular singular point");
  IndicialData out;
  out.location = where;
  Polynomial ind(static_cast<size_t>(s) + 1, Rational(0));
  for (int k = 0; k <= s; ++k) ind[static_cast<size_t>(k)] = coeff_at(local[static_cast<size_t>(k)], v);
  out.indicial_polynomial = trimmed(ind);
  out.exponents = rational_roots(out.indicial_polynomial);
  return out;
}

}  // namespace

ThetaOperator::ThetaOperator(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& p : coeffs_) p = trimmed(std::move(p));
  while (coeffs_.size() > 1 && coeffs_.back().empty()) coeffs_.pop_back();
  if (coeffs_.empty() || coeffs_.back().empty()) throw precondition_error("theta operator with zero leading coefficient");
}

int ThetaOperator::z_degree() const {
  int d = 0;
  for (const auto& p : coeffs_) d = std::max(d, static_cast<int>(p.size()) - 1);
  return d;
}

PowerSeries ThetaOperator::apply(const PowerSeries& f) const {
  PowerSeries out(f.variable(), f.truncation());
  PowerSeries power = f;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    for (size_t j = 0; j < coeffs_[k].size(); ++j)
      if (coeffs_[k][j] != 0) out += power.shifted(static_cast<int>(j)) * coeffs_[k][j];
    power = theta(power);
  }
  return out;
}

LogSeries ThetaOperator::apply(const LogSeries& f) const {
  std::vector<PowerSeries> zero(1, PowerSeries(f.variable(), f.truncation()));
  LogSeries out(zero);
  LogSeries power = f;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    for (size_t j = 0; j < coeffs_[k].size(); ++j) {
      if (coeffs_[k][j] == 0) continue;
      std::vector<PowerSeries> shifted;
      for (const auto& part : power.parts()) shifted.push_back(part.shifted(static_cast<int>(j)) * coeffs_[k][j]);
      out += LogSeries(std::move(shifted));
    }
    power = theta(power);
  }
  return out;
}

PowerSeries holomorphic_period(int degree, int truncation) {
  require_degree(degree);
  PowerSeries out(Variable::z, truncation);
  for (int m = 0; m <= truncation; ++m) {
    BigInt m_fact = factorial(static_cast<unsigned long>(m));
    BigInt denom;
    mpz_pow_ui(denom.get_mpz_t(), m_fact.get_mpz_t(), static_cast<unsigned long>(degree));
    out[m] = make_rational(factorial(static_cast<unsigned long>(degree) * static_cast<unsigned long>(m)), denom);
  }
  return out;
}

ThetaOperator pf_operator(int degree) {
  require_degree(degree);
  const int order = degree - 1;
  // prod_{k=1}^{N-1} (N theta + k) as a polynomial in theta.
  Polynomial prod{Rational(1)};
  for (int k = 1; k < degree; ++k) prod = multiply(prod, Polynomial{Rational(k), Rational(degree)});
  std::vector<Polynomial> coeffs(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Polynomial p{Rational(k == order ? 1 : 0), -Rational(degree) * coeff_at(prod, k)};
    coeffs[static_cast<size_t>(k)] = std::move(p);
  }
  return ThetaOperator(std::move(coeffs));
}

std::vector<LogSeries> frobenius_solutions(const ThetaOperator& op, int count, int truncation) {
  if (count < 1) throw precondition_error("need at least one Frobenius solution");
  using Nil = NilpotentPoly<Rational>;
  const int zdeg = op.z_degree();
  // P_j(s) = sum_k [z^j] p_k(z) s^k
  std::vector<Polynomial> shift_polys(static_cast<size_t>(zdeg) + 1);
  for (int j = 0; j <= zdeg; ++j) {
    Polynomial p(static_cast<size_t>(op.order()) + 1, Rational(0));
    for (int k = 0; k <= op.order(); ++k) p[static_cast<size_t>(k)] = coeff_at(op.coefficient(k), j);
    shift_polys[static_cast<size_t>(j)] = trimmed(p);
  }
  for (int i = 0; i < count; ++i) {
    if (coeff_at(shift_polys[0], i) != 0) {
      throw precondition_error("indicial polynomial at z = 0 is not divisible by rho^" + std::to_string(count));
    }
  }
  // P(a + rho) in the nilpotent ring.
  auto eval_shifted = [count](const Polynomial& p, long a) {
    Nil x = Nil::linear(count, Rational(a), Rational(1));
    Nil acc(std::vector<Rational>(static_cast<size_t>(count), Rational(0)));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      acc = acc * x;
      std::vector<Rational> c = acc.coefficients();
      c[0] += *it;
      acc = Nil(std::move(c));
    }
    return acc;
  };

  std::vector<Nil> c;
  std::vector<Rational> one(static_cast<size_t>(count), Rational(0));
  one[0] = 1;
  c.emplace_back(one);
  for (int m = 1; m <= truncation; ++m) {
    Nil rhs(std::vector<Rational>(static_cast<size_t>(count), Rational(0)));
    for (int j = 1; j <= std::min(m, zdeg); ++j) {
      if (shift_polys[static_cast<size_t>(j)].empty()) continue;
      rhs += eval_shifted(shift_polys[static_cast<size_t>(j)], m - j) * c[static_cast<size_t>(m - j)];
    }
    c.push_back(Nil(std::vector<Rational>(static_cast<size_t>(count), Rational(0))) -
                rhs / eval_shifted(shift_polys[0], m));
  }

  // f_l(z) = sum_m [rho^l] c_m z^m
  std::vector<PowerSeries> f;
  for (int l = 0; l < count; ++l) {
    PowerSeries s(Variable::z, truncation);
    for (int m = 0; m <= truncation; ++m) s[m] = c[static_cast<size_t>(m)][l];
    f.push_back(std::move(s));
  }
  // e_j = sum_{i+l=j} (log z)^i / i! f_l
  std::vector<LogSeries> out;
  for (int j = 0; j < count; ++j) {
    std::vector<PowerSeries> parts;
    for (int i = 0; i <= j; ++i) parts.push_back(f[static_cast<size_t>(j - i)] * make_rational(1, factorial(static_cast<unsigned long>(i))));
    out.emplace_back(std::move(parts));
  }
  return out;
}

FrobeniusBasis frobenius_basis(int degree, int truncation) {
  require_degree(degree);
  FrobeniusBasis basis;
  basis.degree = degree;
  basis.dimension = degree - 2;
  basis.solutions = frobenius_solutions(pf_operator(degree), degree - 1, truncation);
  return basis;
}

Rational conifold_point(int degree) {
  require_degree(degree);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(degree), static_cast<unsigned long>(degree));
  return make_rational(1, p);
}

IndicialData indicial_exponents(const ThetaOperator& op, const Location& location) {
  const int s = op.order();
  std::vector<Polynomial> local(static_cast<size_t>(s) + 1);
  if (location.at_infinity) {
    // z = 1/w, theta_z = -theta_w; multiply through by w^d.
    const int d = op.z_degree();
    for (int k = 0; k <= s; ++k) {
      Polynomial r(static_cast<size_t>(d) + 1, Rational(0));
      const Polynomial& p = op.coefficient(k);
      for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(d) - i] = (k % 2 == 0) ? p[i] : -p[i];
      local[static_cast<size_t>(k)] = trimmed(r);
    }
    return indicial_at_origin(local, location);
  }
  // theta_z^k = sum_j S(k,j) z^j D^j and D^j = u^{-j} theta_u(theta_u - 1)...(theta_u - j + 1).
  const auto st = stirling2(s);
  std::vector<Polynomial> d_form(static_cast<size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) {
    Polynomial q;
    for (int k = j; k <= s; ++k) {
      const BigInt& sk = st[static_cast<size_t>(k)][static_cast<size_t>(j)];
      if (sk == 0) continue;
      Polynomial zj(static_cast<size_t>(j) + 1, Rational(0));
      zj.back() = Rational(sk);
      q = add(q, multiply(op.coefficient(k), zj));
    }
    d_form[static_cast<size_t>(j)] = taylor_shift(q, location.point);
  }
  for (int j = 0; j <= s; ++j) {
    Polynomial uj(static_cast<size_t>(s - j) + 1, Rational(0));
    uj.back() = 1;
    const Polynomial coeff = multiply(d_form[static_cast<size_t>(j)], uj);
    const Polynomial ff = falling_factorial(j);
    for (size_t k = 0; k < ff.size(); ++k)
      local[k] = add(local[k], scale(coeff, ff[k]));
  }
  return indicial_at_origin(local, location);
}

MonodromyReport formal_monodromy(const FrobeniusBasis& basis) {
  const auto& e = basis.solutions;
  const size_t dim = e.size();
  MonodromyReport report;
  report.matrix = zero_matrix(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    LogSeries rest = e[j].shift_log(1);
    for (int i = rest.max_log_degree(); i >= 0; --i) {
      if (static_cast<size_t>(i) >= dim) throw invariant_error("shifted solution leaves the basis span");
      const Rational lead = e[static_cast<size_t>(i)].part(i)[0];
      const Rational c = rest.part(i)[0] / lead;
      report.matrix[j][static_cast<size_t>(i)] = c;
      rest -= e[static_cast<size_t>(i)] * c;
      if (!rest.part(i).is_zero()) throw invariant_error("shifted solution leaves the basis span");
    }
    if (!rest.is_zero()) throw invariant_error("shifted solution leaves the basis span");
  }

  const Matrix nil = subtract(report.matrix, identity_matrix(dim));
  std::vector<size_t> ranks{dim};
  Matrix power = identity_matrix(dim);
  while (ranks.back() > 0) {
    power = multiply(power, nil);
    ranks.push_back(rank(power));
    if (ranks.size() > dim + 1) throw invariant_error("monodromy logarithm is not nilpotent");
  }
  report.nilpotency_index = static_cast<int>(ranks.size()) - 1;

  // Jordan block sizes from the rank sequence; a block of size s contributes
  // weights n + s - 1 - 2i, i = 0..s-1.
  const int n = basis.dimension;
  report.weight_graded_dimensions.assign(static_cast<size_t>(2 * n) + 1, 0);
  auto r = [&ranks](size_t k) { return k < ranks.size() ? static_cast<long>(ranks[k]) : 0L; };
  for (size_t size = 1; size <= dim; ++size) {
    const long blocks = (r(size - 1) - r(size)) - (r(size) - r(size + 1));
    for (long b = 0; b < blocks; ++b)
      for (size_t i = 0; i < size; ++i) {
        const long weight = n + static_cast<long>(size) - 1 - 2 * static_cast<long>(i);
        if (weight < 0 || weight > 2 * n) throw invariant_error("weight outside [0, 2n]");
        report.weight_graded_dimensions[static_cast<size_t>(weight)] += 1;
      }
  }
  for (size_t w = 1; w < report.weight_graded_dimensions.size(); w += 2)
    if (report.weight_graded_dimensions[w] != 0) report.even_weights_only = false;
  return report;
}

}  // namespace mirror::periods
