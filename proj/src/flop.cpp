#include "mirror/flop.hpp"

#include <numeric>

namespace mirror::quantum {

namespace {

long content(const CurveClass& eta) {
  long g = 0;
  for (long x : eta) g = std::gcd(g, x);
  return g;
}

CurveClass negate(CurveClass eta) {
  for (auto& x : eta) x = -x;
  return eta;
}

// Primitive generator with first nonzero entry positive, and the signed
// multiple k with eta = k * generator.
std::pair<CurveClass, long> line_of(const CurveClass& eta) {
  const long g = content(eta);
  CurveClass p = eta;
  for (auto& x : p) x /= g;
  long k = g;
  for (long x : p) {
    if (x == 0) continue;
    if (x < 0) {
      p = negate(p);
      k = -k;
    }
    break;
  }
  return {p, k};
}

Rational dot(const CurveClass& eta, int a) { return Rational(eta.at(static_cast<size_t>(a))); }

}  // namespace

Cy3Data flop_transform(const Cy3Data& data, const CurveClass& gamma, const Rational& n_gamma) {
  if (static_cast<int>(gamma.size()) != data.rank) throw precondition_error("flopping class of the wrong rank");
  if (content(gamma) != 1) throw precondition_error("flopping class " + to_string(gamma) + " is not primitive");
  Cy3Data out = data;
  const int r = data.rank;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        out.kappa[static_cast<size_t>((a * r + b) * r + c)] =
            data.triple(a, b, c) - dot(gamma, a) * dot(gamma, b) * dot(gamma, c) * n_gamma;
      }
  const CurveClass flipped = negate(gamma);
  out.instantons.erase(gamma);
  out.instantons.erase(flipped);
  if (auto it = data.instantons.find(gamma); it != data.instantons.end()) out.instantons[flipped] = it->second;
  if (auto it = data.instantons.find(flipped); it != data.instantons.end()) out.instantons[gamma] = it->second;
  return out;
}

bool flop_identity_holds() {
  const LaurentFraction lhs = LaurentFraction::geometric(1) + LaurentFraction::geometric(-1);
  return lhs == LaurentFraction::constant(-1);
}

std::optional<PowerSeries> expand_at_zero(const LaurentFraction& f, int truncation) {
  const auto& den = f.denominator().terms();
  const auto& num = f.numerator().terms();
  if (den.empty()) return std::nullopt;
  const long shift = den.begin()->first;
  PowerSeries n(Variable::q, truncation);
  PowerSeries d(Variable::q, truncation);
  for (const auto& [e, c] : num) {
    const long k = e - shift;
    if (k < 0) return std::nullopt;
    if (k <= truncation) n[static_cast<int>(k)] = c;
  }
  for (const auto& [e, c] : den) {
    const long k = e - shift;
    if (k <= truncation) d[static_cast<int>(k)] = c;
  }
  return n / d;
}

FlopCheck check_flop_invariance(const Cy3Data& data, const CurveClass& gamma, const Rational& n_gamma, int truncation) {
  const Cy3Data flopped = flop_transform(data, gamma, n_gamma);
  const int r = data.rank;
  FlopCheck check;
  check.truncation = truncation;

  std::map<CurveClass, std::vector<std::pair<long, Rational>>> before;
  std::map<CurveClass, std::vector<std::pair<long, Rational>>> after;
  auto collect = [](const Cy3Data& d, auto& lines) {
    for (const auto& [eta, n] : d.instantons) {
      if (n == 0) continue;
      auto [p, k] = line_of(eta);
      lines[p].emplace_back(k, n);
    }
  };
  collect(data, before);
  collect(flopped, after);
  std::map<CurveClass, int> all_lines;
  for (const auto& [p, v] : before) all_lines[p] = 0;
  for (const auto& [p, v] : after) all_lines[p] = 0;
  check.lines = static_cast<int>(all_lines.size());

  bool symbolic = true;
  bool truncated = true;
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b) {
      for (int c = b; c < r; ++c) {
        ++check.triples_checked;
        Rational constants = 0;
        Rational truncated_constants = 0;
        for (const auto& [p, unused] : all_lines) {
          const Rational weight = dot(p, a) * dot(p, b) * dot(p, c);
          // Term for k p: (k p_a)(k p_b)(k p_c) n x^k/(1 - x^k).
          auto side = [&](const auto& lines) {
            LaurentFraction f = LaurentFraction::constant(0);
            if (auto it = lines.find(p); it != lines.end()) {
              for (const auto& [k, n] : it->second) f = f + LaurentFraction::geometric(k) * (weight * k * k * k * n);
            }
            return f;
          };
          const LaurentFraction diff = side(before) - side(after);
          const auto value = diff.constant_value();
          if (!value) {
            symbolic = false;
          } else {
            constants += *value;
          }
          // Truncated route: expand both sides at x = 0 and compare.
          const auto lhs = expand_at_zero(side(before), truncation);
          const auto rhs = expand_at_zero(side(after), truncation);
          if (!lhs || !rhs) {
            truncated = false;
            continue;
          }
          const PowerSeries d = *lhs - *rhs;
          for (int m = 1; m <= truncation; ++m) truncated = truncated && d[m] == 0;
          truncated_constants += d[0];
        }
        // F - F' = (kappa - kappa') + sum over lines, which must vanish.
        const Rational classical_change = data.triple(a, b, c) - flopped.triple(a, b, c);
        symbolic = symbolic && constants + classical_change == 0;
        truncated = truncated && truncated_constants + classical_change == 0;
      }
    }
  }
  check.symbolic_agrees = symbolic;
  check.truncated_agrees = truncated;
  check.invariant = symbolic && truncated;
  return check;
}

Cy3Data synthetic_flop_instance(long a, long b, long c, const Rational& n_gamma) {
  const CurveClass gamma{a, b, -c};
  if (content(gamma) != 1) throw precondition_error("flopping class " + to_string(gamma) + " is not primitive");
  Cy3Data data;
  data.rank = 3;
  data.kappa.assign(27, 0);
  data.set_triple(0, 0, 0, 3);
  data.set_triple(0, 0, 1, 1);
  data.set_triple(0, 1, 2, 2);
  data.set_triple(1, 1, 2, -1);
  data.set_triple(2, 2, 2, 5);
  data.set_triple(1, 2, 2, 4);
  data.instantons[gamma] = n_gamma;
  data.instantons[{1, 0, 0}] = 12;
  data.instantons[{0, 1, 0}] = -4;
  data.instantons[{1, 1, 0}] = 30;
  data.instantons[{2, 1, 1}] = 7;
  return data;
}

}  // namespace mirror::quantum
