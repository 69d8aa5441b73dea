#include "realbetti/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "realbetti/json_io.hpp"

namespace realbetti::cache {

namespace fs = std::filesystem;

std::string cache_key(int g, int a, int r, long long d, int order) {
    return "g" + std::to_string(g) + "a" + std::to_string(a) + "r" + std::to_string(r) + "d" +
           std::to_string(d) + "N" + std::to_string(order) + "v" + std::to_string(kFormatVersion);
}

std::optional<series::TruncatedSeries> load(const fs::path& dir, const std::string& key) {
    std::ifstream in(dir / (key + ".json"));
    if (!in) return std::nullopt;
    try {
        json_io::Json j = json_io::Json::parse(in);
        return json_io::series_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;  // stale/corrupt entries are treated as misses
    }
}

void store(const fs::path& dir, const std::string& key, const series::TruncatedSeries& s) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;  // best effort; the in-memory result is already correct
    const fs::path final_path = dir / (key + ".json");
    const fs::path tmp_path = dir / (key + ".json.tmp");
    {
        std::ofstream out(tmp_path);
        if (!out) return;
        out << json_io::series_to_json(s).dump(2) << '\n';
    }
    fs::rename(tmp_path, final_path, ec);  // atomic within one filesystem
}

Stats stats(const fs::path& dir) {
    Stats st;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        ++st.files;
        st.bytes += entry.file_size(ec);
    }
    return st;
}

std::uintmax_t clear(const fs::path& dir) {
    std::uintmax_t removed = 0;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        if (fs::remove(entry.path(), ec)) ++removed;
    }
    return removed;
}

std::optional<fs::path> resolve_dir(const std::optional<std::string>& flag_value) {
    if (flag_value && !flag_value->empty()) return fs::path(*flag_value);
    if (const char* env = std::getenv("REALBETTI_CACHE_DIR"); env && *env) return fs::path(env);
    return std::nullopt;
}

}  // namespace realbetti::cache
