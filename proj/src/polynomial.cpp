#include "mirror/polynomial.hpp"

#include <algorithm>

namespace mirror {

Polynomial trimmed(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const Polynomial& p) { return static_cast<int>(trimmed(p).size()) - 1; }

Polynomial add(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trimmed(std::move(out));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trimmed(std::move(out));
}

Polynomial scale(const Polynomial& p, const Rational& s) {
  Polynomial out = p;
  for (auto& c : out) c *= s;
  return trimmed(std::move(out));
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial taylor_shift(const Polynomial& p, const Rational& shift) {
  // Horner in the shifted variable: p(x + s) = (...((c_d)(x+s) + c_{d-1})(x+s) ...).
  Polynomial acc;
  const Polynomial linear{shift, Rational(1)};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = add(multiply(acc, linear), Polynomial{*it});
  return trimmed(std::move(acc));
}

Polynomial deflate(const Polynomial& p, const Rational& root) {
  Polynomial q = trimmed(p);
  if (q.empty()) throw precondition_error("cannot deflate the zero polynomial");
  // Synthetic division from the top.
  Polynomial out(q.size() - 1, Rational(0));
  Rational carry = 0;
  for (size_t i = q.size(); i-- > 1;) {
    carry = q[i] + carry * root;
    out[i - 1] = carry;
  }
  if (q[0] + carry * root != 0) throw invariant_error("deflation by a non-root");
  return out;
}

Polynomial falling_factorial(int k) {
  Polynomial out{Rational(1)};
  for (int i = 0; i < k; ++i) out = multiply(out, Polynomial{Rational(-i), Rational(1)});
  return out;
}

namespace {

// Positive divisors of |n| (n != 0).
std::vector<BigInt> divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (p > 10000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
        throw invariant_error("indicial polynomial coefficient too large to factor: " + to_string(n));
      }
      break;
    }
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, e] : factors) {
    const size_t base = out.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& input) {
  Polynomial p = trimmed(input);
  if (p.empty()) throw precondition_error("roots of the zero polynomial");
  std::vector<Rational> roots;
  while (p.size() > 1) {
    if (p[0] == 0) {
      roots.push_back(0);
      p = deflate(p, 0);
      continue;
    }
    // Primitive integer multiple: clear denominators.
    BigInt lcm_den = 1;
    for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    const BigInt a0 = Rational(p.front() * lcm_den).get_num();
    const BigInt lead = Rational(p.back() * lcm_den).get_num();
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(lead)) {
        for (int sign : {1, -1}) {
          Rational candidate = make_rational(num * sign, den);
          if (evaluate(p, candidate) == 0) {
            roots.push_back(candidate);
            p = deflate(p, candidate);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw invariant_error("polynomial does not split over the rationals");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace mirror
