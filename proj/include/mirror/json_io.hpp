#pragma once

// JSON encodings for series and operators. Every number is a decimal
// string ("p/q" or "p"); nothing goes through floating point.

#include <json.hpp>

#include "mirror/periods.hpp"
#include "mirror/series.hpp"

namespace mirror::json_io {

using Json = nlohmann::ordered_json;

/// {"variable": "z", "truncation": T, "coefficients": ["p/q", ...]}
Json to_json(const PowerSeries& series);
PowerSeries series_from_json(const Json& value);

/// {"order": k, "coefficients": [[c_0, c_1, ...] per theta power]}
Json to_json(const periods::ThetaOperator& op);
periods::ThetaOperator operator_from_json(const Json& value);

Json rational_list(std::span<const Rational> values);
/// Accepts decimal strings or JSON integers.
Rational rational_from_json(const Json& value);

}  // namespace mirror::json_io
