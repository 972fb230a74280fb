#include "arccount/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace arccount {

CycleType::CycleType(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty cycle type");
    for (std::uint32_t p : parts_)
        if (p == 0) throw std::invalid_argument("cycle length must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

CycleType CycleType::identity(std::uint32_t n) {
    return CycleType(std::vector<std::uint32_t>(n, 1));
}

CycleType CycleType::parse(const std::string& text, std::uint32_t n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty cycle type string");
    if (s == "e" || s == "id" || s == "()") return identity(n);

    std::vector<std::uint32_t> parts;
    auto pad_and_build = [&](std::vector<std::uint32_t> ps) {
        std::uint32_t total = std::accumulate(ps.begin(), ps.end(), 0u);
        if (total > n) throw std::invalid_argument("cycle type exceeds n");
        ps.insert(ps.end(), n - total, 1);
        return CycleType(std::move(ps));
    };

    if (s.find(',') != std::string::npos) {
        // comma list of part sizes
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            if (next == pos) throw std::invalid_argument("malformed part list");
            parts.push_back(std::uint32_t(std::stoul(s.substr(pos, next - pos))));
            pos = next + 1;
        }
        std::uint32_t total = std::accumulate(parts.begin(), parts.end(), 0u);
        if (total != n) {
            if (total > n) throw std::invalid_argument("parts do not sum to n");
            parts.insert(parts.end(), n - total, 1);
        }
        return CycleType(std::move(parts));
    }

    // cycle notation; single-digit points, parens optional for one cycle
    std::vector<bool> seen(n + 1, false);
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t start, stop;
        if (s[i] == '(') {
            stop = s.find(')', i);
            if (stop == std::string::npos) throw std::invalid_argument("unbalanced parenthesis");
            start = i + 1;
            i = stop + 1;
        } else {
            start = i;
            stop = s.size();
            i = stop;
        }
        std::uint32_t len = 0;
        for (std::size_t j = start; j < stop; ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw std::invalid_argument("cycle notation expects digits");
            std::uint32_t pt = std::uint32_t(s[j] - '0');
            if (pt < 1 || pt > n) throw std::invalid_argument("cycle entry out of range");
            if (seen[pt]) throw std::invalid_argument("repeated entry in cycle notation");
            seen[pt] = true;
            ++len;
        }
        if (len == 0) throw std::invalid_argument("empty cycle");
        if (len > 1) parts.push_back(len);
    }
    return pad_and_build(std::move(parts));
}

std::uint32_t CycleType::multiplicity(std::uint32_t k) const {
    return std::uint32_t(std::count(parts_.begin(), parts_.end(), k));
}

std::uint64_t factorial(std::uint32_t n) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t CycleType::centralizer_order() const {
    std::uint64_t r = 1;
    std::uint32_t k = 0, run = 0;
    for (std::uint32_t p : parts_) {
        if (p == k) {
            ++run;
        } else {
            r *= factorial(run);
            k = p;
            run = 1;
        }
        r *= p;
    }
    r *= factorial(run);
    return r;
}

std::string CycleType::cycle_notation() const {
    std::string s;
    std::uint32_t next = 1;
    for (std::uint32_t p : parts_) {
        if (p == 1) {
            ++next;
            continue;
        }
        s += '(';
        for (std::uint32_t j = 0; j < p; ++j) s += std::to_string(next++);
        s += ')';
    }
    return s.empty() ? "e" : s;
}

std::string CycleType::parts_string() const {
    std::string s;
    for (std::uint32_t p : parts_) {
        if (!s.empty()) s += ',';
        s += std::to_string(p);
    }
    return s;
}

std::vector<CycleType> partitions_of(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> acc;
    std::vector<std::uint32_t> cur;
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t maxpart) {
        if (rest == 0) {
            acc.push_back(cur);
            return;
        }
        for (std::uint32_t p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(acc.begin(), acc.end());
    std::vector<CycleType> out;
    out.reserve(acc.size());
    for (auto& ps : acc) out.push_back(CycleType(std::move(ps)));
    return out;
}

}  // namespace arccount
