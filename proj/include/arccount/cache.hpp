#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "arccount/twisted.hpp"

namespace arccount {

// One JSON line per twisted count, fixed key order:
//   {"n":6,"q":3,"cycle_type":[2,2,1,1],"raw":...,"count":...,"method":"brute","elapsed_ms":...}
std::string cache_line(const TwistedCount& r);
TwistedCount parse_cache_line(const std::string& line);  // throws std::invalid_argument

// Append-only JSONL store keyed by (n, q, cycle type).  Loading tolerates a
// missing file; malformed lines throw rather than being skipped, since a
// damaged cache should be deleted, not trusted in part.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path file);

    std::optional<TwistedCount> find(std::uint32_t n, const CycleType& c, std::uint64_t q) const;

    // Appends to the file and the in-memory index; returns false (and writes
    // nothing) when the key is already present.
    bool insert(const TwistedCount& r);

    std::size_t size() const { return entries_.size(); }
    const std::filesystem::path& file() const { return file_; }

private:
    using Key = std::tuple<std::uint32_t, std::uint64_t, std::vector<std::uint32_t>>;
    std::filesystem::path file_;
    std::map<Key, TwistedCount> entries_;
};

}  // namespace arccount
