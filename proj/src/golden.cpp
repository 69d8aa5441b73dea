#include "realbetti/golden.hpp"

#include "golden_data.hpp"
#include "realbetti/json_io.hpp"

namespace realbetti::golden {

const std::vector<GoldenSection>& sections() {
    static const std::vector<GoldenSection> data = [] {
        const json_io::Json j = json_io::Json::parse(detail::kSection7Json);
        std::vector<GoldenSection> out;
        for (const auto& sec : j.at("sections")) {
            GoldenSection s;
            s.name = sec.at("name").get<std::string>();
            s.rank = sec.at("rank").get<int>();
            s.genus = sec.at("genus").get<int>();
            s.degree = sec.at("degree").get<long long>();
            for (const auto& row : sec.at("rows")) {
                s.rows.push_back({row.at("circles").get<int>(),
                                  json_io::coeffs_from_json(row.at("coeffs"))});
            }
            out.push_back(std::move(s));
        }
        return out;
    }();
    return data;
}

const GoldenSection* find_section(const std::string& name) {
    for (const auto& s : sections()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

}  // namespace realbetti::golden
