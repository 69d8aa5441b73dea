#pragma once

#include <json.hpp>

#include "realbetti/series.hpp"

namespace realbetti::json_io {

// Insertion-ordered everywhere so emitted JSON is byte-stable across runs.
using Json = nlohmann::ordered_json;

// {"order": N, "coeffs": ["...", ...]} — coefficients as decimal strings,
// since they exceed native integer widths in general.
Json series_to_json(const series::TruncatedSeries& s);
series::TruncatedSeries series_from_json(const Json& j);

Json coeffs_to_json(const std::vector<Int>& coeffs);
std::vector<Int> coeffs_from_json(const Json& j);

}  // namespace realbetti::json_io
