#include "mirror/json_io.hpp"

#include <string>

namespace mirror::json_io {

Json rational_list(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  throw precondition_error("expected a decimal string or an integer, got " + value.dump());
}

Json to_json(const PowerSeries& series) {
  Json out;
  out["variable"] = std::string(to_string(series.variable()));
  out["truncation"] = series.truncation();
  out["coefficients"] = rational_list(series.coefficients());
  return out;
}

PowerSeries series_from_json(const Json& value) {
  const Variable var = parse_variable(value.at("variable").get<std::string>());
  const int truncation = value.at("truncation").get<int>();
  const Json& coeffs = value.at("coefficients");
  if (static_cast<int>(coeffs.size()) != truncation + 1) {
    throw precondition_error("series has " + std::to_string(coeffs.size()) + " coefficients but truncation " +
                             std::to_string(truncation));
  }
  std::vector<Rational> c;
  for (const auto& item : coeffs) c.push_back(rational_from_json(item));
  return PowerSeries(var, std::move(c));
}

Json to_json(const periods::ThetaOperator& op) {
  Json out;
  out["order"] = op.order();
  Json coeffs = Json::array();
  for (const auto& p : op.coefficients()) coeffs.push_back(rational_list(p));
  out["coefficients"] = std::move(coeffs);
  return out;
}

periods::ThetaOperator operator_from_json(const Json& value) {
  std::vector<Polynomial> coeffs;
  for (const auto& poly : value.at("coefficients")) {
    Polynomial p;
    for (const auto& c : poly) p.push_back(rational_from_json(c));
    coeffs.push_back(std::move(p));
  }
  periods::ThetaOperator op(std::move(coeffs));
  if (value.contains("order") && value.at("order").get<int>() != op.order()) {
    throw precondition_error("declared order does not match the coefficient list");
  }
  return op;
}

}  // namespace mirror::json_io
