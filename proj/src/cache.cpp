#include "arccount/cache.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace arccount {

using ordered_json = nlohmann::ordered_json;

std::string cache_line(const TwistedCount& r) {
    ordered_json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["cycle_type"] = r.cycle_type.parts();
    j["raw"] = r.raw_tuples;
    j["count"] = r.count;
    j["method"] = r.method;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

TwistedCount parse_cache_line(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("bad cache line: ") + e.what());
    }
    try {
        TwistedCount r;
        r.n = j.at("n").get<std::uint32_t>();
        r.q = j.at("q").get<std::uint64_t>();
        r.cycle_type = CycleType(j.at("cycle_type").get<std::vector<std::uint32_t>>());
        r.raw_tuples = j.at("raw").get<std::uint64_t>();
        r.count = j.at("count").get<std::uint64_t>();
        r.method = j.at("method").get<std::string>();
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        if (r.cycle_type.n() != r.n) throw std::invalid_argument("cycle type does not sum to n");
        return r;
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("bad cache line: ") + e.what());
    }
}

ResultCache::ResultCache(std::filesystem::path file) : file_(std::move(file)) {
    std::ifstream in(file_);
    if (!in) return;  // first use: file appears on first insert
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TwistedCount r = parse_cache_line(line);
        entries_.emplace(Key{r.n, r.q, r.cycle_type.parts()}, std::move(r));
    }
}

std::optional<TwistedCount> ResultCache::find(std::uint32_t n, const CycleType& c,
                                              std::uint64_t q) const {
    auto it = entries_.find(Key{n, q, c.parts()});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool ResultCache::insert(const TwistedCount& r) {
    Key key{r.n, r.q, r.cycle_type.parts()};
    if (entries_.count(key)) return false;
    std::ofstream out(file_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + file_.string());
    out << cache_line(r) << '\n';
    entries_.emplace(std::move(key), r);
    return true;
}

}  // namespace arccount
