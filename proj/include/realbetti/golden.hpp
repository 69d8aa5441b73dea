#pragma once

#include <string>
#include <vector>

#include "realbetti/series.hpp"

namespace realbetti::golden {

struct GoldenRow {
    int circles = 0;
    std::vector<Int> coeffs;
};

// One published table: fixed (rank, genus, degree), one row per circle count.
struct GoldenSection {
    std::string name;
    int rank = 0;
    int genus = 0;
    long long degree = 0;
    std::vector<GoldenRow> rows;
};

// The embedded reference polynomials (self-contained: no files read at runtime).
const std::vector<GoldenSection>& sections();

const GoldenSection* find_section(const std::string& name);

}  // namespace realbetti::golden
