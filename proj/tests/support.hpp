#pragma once
#include <random>
#include <string>
#include <vector>

#include "mirror/rational.hpp"
#include "mirror/series.hpp"
#include "reference_tables.hpp"

namespace testing_support {

inline mirror::Rational big(const std::string& digits) { return mirror::parse_rational(digits); }

inline std::vector<mirror::Rational> bigs(const reference::Digits& digits) {
  std::vector<mirror::Rational> out;
  for (const auto& d : digits) out.push_back(big(d));
  return out;
}

/// Fixed seed per test so every run sees the same inputs.
class SmallRationals {
 public:
  explicit SmallRationals(unsigned seed) : gen_(seed) {}
  mirror::Rational next() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return mirror::make_rational(num(gen_), den(gen_));
  }
  mirror::PowerSeries series(mirror::Variable var, int truncation) {
    std::vector<mirror::Rational> c;
    for (int k = 0; k <= truncation; ++k) c.push_back(next());
    return mirror::PowerSeries(var, std::move(c));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937 gen_;
};

}  // namespace testing_support
