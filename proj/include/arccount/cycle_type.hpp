#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arccount {

// Conjugacy class of S_n, i.e. an integer partition of n, stored weakly
// decreasing.  Comparison is lexicographic on the parts vector, which puts
// the identity class (1,...,1) first and the long cycle (n) last; that is
// the row order used throughout for deterministic output.
class CycleType {
public:
    explicit CycleType(std::vector<std::uint32_t> parts);
    static CycleType identity(std::uint32_t n);

    // Accepts "e" / "id" / "()", cycle notation "(12)(34)" (single-digit
    // entries, fixed points omitted), a bare digit run "123" meaning one
    // cycle, or a comma list of parts "3,2,1".  n fixes the total; parsed
    // cycles are padded with fixed points.  Throws std::invalid_argument.
    static CycleType parse(const std::string& text, std::uint32_t n);

    std::uint32_t n() const { return n_; }
    const std::vector<std::uint32_t>& parts() const { return parts_; }
    // Number of parts equal to k (the fixed-point count for k = 1).
    std::uint32_t multiplicity(std::uint32_t k) const;

    // |centralizer in S_n| = prod_k k^{m_k} m_k!; divides n!.
    std::uint64_t centralizer_order() const;

    // "(12)(34)" with fixed points omitted; "e" for the identity.
    std::string cycle_notation() const;
    // "2,2,1,1"
    std::string parts_string() const;

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const { return parts_ < o.parts_; }

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> parts_;
};

// All partitions of n in the order described above.
std::vector<CycleType> partitions_of(std::uint32_t n);

std::uint64_t factorial(std::uint32_t n);

}  // namespace arccount
