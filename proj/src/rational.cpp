#include "mirror/rational.hpp"

#include <algorithm>
#include <cctype>

namespace mirror {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw precondition_error("malformed rational '" + std::string(whole) + "'");
  }
  std::string buffer(text);
  if (buffer.front() == '+') buffer.erase(0, 1);
  return BigInt(buffer, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw precondition_error("malformed rational '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text, text));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Rational max_abs(const std::vector<Rational>& values) {
  Rational best = 0;
  for (const auto& v : values) {
    Rational a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace mirror
