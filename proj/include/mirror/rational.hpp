#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mirror {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its domain (bad truncation,
/// mismatched variables, non-invertible leading terms, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object fails one of the structural checks the
/// pipeline asserts on (vanishing entries, log cancellation, integrality).
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced fraction num/den. Throws precondition_error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p" (optional leading sign). The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool is_integer(const Rational& value);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// Largest absolute value in the list; zero for an empty list.
Rational max_abs(const std::vector<Rational>& values);

}  // namespace mirror
