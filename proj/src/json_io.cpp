#include "realbetti/json_io.hpp"

namespace realbetti::json_io {

Json coeffs_to_json(const std::vector<Int>& coeffs) {
    Json arr = Json::array();
    for (const Int& c : coeffs) arr.push_back(c.str());
    return arr;
}

std::vector<Int> coeffs_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorCode::InvalidInput, "coeffs must be a JSON array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string()) fail(ErrorCode::InvalidInput, "coefficients must be decimal strings");
        out.emplace_back(v.get<std::string>());
    }
    return out;
}

Json series_to_json(const series::TruncatedSeries& s) {
    Json j;
    j["order"] = s.order;
    j["coeffs"] = coeffs_to_json(s.coeffs);
    return j;
}

series::TruncatedSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        fail(ErrorCode::InvalidInput, "series JSON needs {order, coeffs}");
    const int order = j.at("order").get<int>();
    std::vector<Int> coeffs = coeffs_from_json(j.at("coeffs"));
    if (order < 0 || coeffs.size() != static_cast<size_t>(order) + 1)
        fail(ErrorCode::InvalidInput, "series JSON: coeffs length must be order+1");
    series::TruncatedSeries s(order);
    s.coeffs = std::move(coeffs);
    return s;
}

}  // namespace realbetti::json_io
