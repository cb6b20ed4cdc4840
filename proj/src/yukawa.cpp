#include "mirror/yukawa.hpp"

#include <string>

namespace mirror::yukawa {

namespace {

BigInt ipow(long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

}  // namespace

MirrorMap mirror_map(const periods::FrobeniusBasis& basis) {
  if (basis.solutions.size() < 2) throw precondition_error("mirror map needs e_0 and e_1");
  const PowerSeries& e0 = basis.solutions[0].as_power_series();
  if (e0[0] != 1) throw precondition_error("e_0 must have constant term 1, got " + to_string(e0[0]));
  const LogSeries& e1 = basis.solutions[1];
  if (e1.max_log_degree() != 1 || e1.part(1) != e0) {
    throw precondition_error("e_1 must be e_0 log z + single-valued");
  }
  const PowerSeries h = e1.part(0) / e0;
  MirrorMap map{exp_series(h).shifted(1), PowerSeries(Variable::q, 0)};
  map.z_of_q = revert(map.q_of_z, Variable::q);
  return map;
}

CouplingSet distinguished_reduction(const periods::FrobeniusBasis& basis, const MirrorMap& map) {
  const int n = basis.dimension;
  if (static_cast<int>(basis.solutions.size()) != n + 1) throw precondition_error("basis must hold e_0..e_n");
  const Rational diag = n + 2;
  const PowerSeries& e0 = basis.solutions[0].as_power_series();

  std::vector<LogSeries> row;
  for (const auto& e : basis.solutions) row.push_back((e / e0) * diag);
  const LogSeries t = basis.solutions[1] / e0;
  const PowerSeries dt_inverse = theta(t).as_power_series().inverse();

  CouplingSet out;
  out.dimension = n;
  for (int j = 0; j < n; ++j) {
    std::vector<LogSeries> r;
    r.reserve(row.size());
    for (const auto& entry : row) r.push_back(theta(entry) * dt_inverse);
    for (int k = 0; k <= j; ++k) {
      if (!r[static_cast<size_t>(k)].is_zero()) {
        throw invariant_error("entry " + std::to_string(k) + " of the derivative of row " + std::to_string(j) +
                              " does not vanish");
      }
    }
    const PowerSeries y = r[static_cast<size_t>(j + 1)].as_power_series();
    if (y[0] == 0) throw invariant_error("coupling " + std::to_string(j) + " has zero constant term");
    const PowerSeries scale = y.inverse() * diag;
    for (auto& entry : r) entry *= scale;
    row = std::move(r);
    out.primary.push_back(y.compose(map.z_of_q));
  }
  if (n == 6) out.secondary = secondary_coupling(out);
  return out;
}

PowerSeries npoint_function(const CouplingSet& couplings) {
  const int n = couplings.dimension;
  if (static_cast<int>(couplings.primary.size()) != n) throw precondition_error("n-point function needs Y^1_0..Y^1_{n-1}");
  PowerSeries prod = couplings.primary.front();
  for (int j = 1; j < n; ++j) prod *= couplings.y1(j);
  return prod * make_rational(1, ipow(n + 2, static_cast<unsigned long>(n - 1)));
}

PowerSeries secondary_coupling(const CouplingSet& couplings) {
  if (couplings.dimension != 6) {
    throw precondition_error("Y^2_2 = (Y^1_2)^2 / Y^1_1 is defined here for n = 6 only (got n = " +
                             std::to_string(couplings.dimension) + ")");
  }
  return couplings.y1(2) * couplings.y1(2) / couplings.y1(1);
}

int degree_power(int dimension, int a, int b) {
  const int c = dimension - a - b;
  if (a < 0 || b < 0 || c < 0) throw precondition_error("coupling indices out of range");
  return (a == 1) + (b == 1) + (c == 1);
}

bool InstantonTable::all_integral() const {
  for (const auto& e : entries)
    if (!e.inversion.integral) return false;
  return true;
}

InstantonTable extract_instantons(const CouplingSet& couplings) {
  const int n = couplings.dimension;
  InstantonTable table;
  table.dimension = n;
  auto add = [&](int a, int b, const PowerSeries& y) {
    const int ell = degree_power(n, a, b);
    const PowerSeries shifted = y - PowerSeries::constant(y.variable(), y.truncation(), n + 2);
    CouplingInstantons entry{a, b, y, lambert_invert(shifted, ell)};
    PowerSeries rebuilt = lambert_synthesize(entry.inversion.numbers, ell, y.truncation(), y.variable());
    rebuilt[0] += n + 2;
    if (rebuilt != y) throw invariant_error("Lambert resynthesis does not reproduce Y^" + std::to_string(a) + "_" + std::to_string(b));
    table.entries.push_back(std::move(entry));
  };
  for (int j = 1; 2 * j <= n - 1; ++j) add(1, j, couplings.y1(j));
  if (couplings.secondary) add(2, 2, *couplings.secondary);
  return table;
}

ClosedFormCheck yukawa_closed_form_check(int dimension, int truncation) {
  if (dimension != 3) throw precondition_error("closed-form coupling check is implemented for n = 3");
  const int degree = dimension + 2;
  const int order = degree - 1;
  const periods::ThetaOperator op = periods::pf_operator(degree);
  const Polynomial& lead = op.coefficient(order);
  const Polynomial& next = op.coefficient(order - 1);
  auto as_series = [truncation](const Polynomial& p) {
    PowerSeries s(Variable::z, truncation);
    for (size_t i = 0; i < p.size() && static_cast<int>(i) <= truncation; ++i) s[static_cast<int>(i)] = p[i];
    return s;
  };
  // Griffiths transversality for an order-4 operator: theta K = -(1/2) (p_3/p_4) K.
  const PowerSeries g = as_series(next) / as_series(lead) * Rational(-1, 2);
  if (g[0] != 0) throw invariant_error("top coupling equation is singular at z = 0");
  PowerSeries integral(Variable::z, truncation);
  for (int m = 1; m <= truncation; ++m) integral[m] = g[m] / m;
  const PowerSeries unit_solution = exp_series(integral);

  ClosedFormCheck check;
  // c/(1 - N^N z) with c = 1 before normalization.
  PowerSeries closed(Variable::z, truncation);
  const BigInt nn = ipow(degree, static_cast<unsigned long>(degree));
  BigInt power = 1;
  for (int m = 0; m <= truncation; ++m, power *= nn) closed[m] = Rational(power);
  check.closed_form_matches = (closed == unit_solution);

  const periods::FrobeniusBasis basis = periods::frobenius_basis(degree, truncation);
  const MirrorMap map = mirror_map(basis);
  const PowerSeries& e0 = basis.solutions[0].as_power_series();
  const PowerSeries dt = theta(basis.solutions[1] / e0).as_power_series();
  const PowerSeries unnormalized = unit_solution / (e0 * e0 * dt * dt * dt);
  // q -> 0 limit fixes c to the classical triple intersection H^3 = N.
  check.normalization = Rational(degree) / unnormalized[0];
  check.top_coupling = (unnormalized * check.normalization).compose(map.z_of_q);

  const CouplingSet couplings = distinguished_reduction(basis, map);
  check.agrees_with_reduction = (check.top_coupling == couplings.y1(1));
  if (!check.closed_form_matches || !check.agrees_with_reduction) {
    throw invariant_error("closed-form top coupling disagrees with the distinguished reduction");
  }
  return check;
}

int default_order(int dimension) {
  if (dimension == 3) return 12;
  if (dimension == 4) return 8;
  return 6;
}

MirrorRun run_mirror(int dimension, int truncation) {
  if (dimension < 1) throw precondition_error("dimension must be positive");
  if (truncation < 1) throw precondition_error("truncation order must be at least 1");
  MirrorRun run;
  run.dimension = dimension;
  run.order = truncation;
  const auto basis = periods::frobenius_basis(dimension + 2, truncation);
  run.map = mirror_map(basis);
  run.couplings = distinguished_reduction(basis, run.map);
  run.npoint = npoint_function(run.couplings);
  run.instantons = extract_instantons(run.couplings);
  return run;
}

}  // namespace mirror::yukawa
