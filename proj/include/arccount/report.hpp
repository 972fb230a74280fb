#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arccount/cohomology.hpp"
#include "arccount/cycle_type.hpp"

namespace arccount {

class ResultCache;

enum class OutputFormat { Text, Json, Csv };
OutputFormat parse_format(const std::string& name);  // "text" | "json" | "csv"

// A generic rectangular result for rendering.  Json output converts cells
// that are plain integers to numbers and leaves everything else as strings.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};
std::string render(const Table& t, OutputFormat f);

// One discrepancy between the published reference material and what the
// derivation, the enumeration, and the solver all agree on.
struct ErratumItem {
    std::string id;          // stable slug
    std::string where;       // which published statement
    std::string printed;     // what it prints
    std::string correction;  // what the evidence supports
    std::string evidence;    // how this was decided
};
const std::vector<ErratumItem>& errata();
std::string format_errata(OutputFormat f);

// verify-tables: brute force vs derived closed form vs published row.
struct VerifyCell {
    std::uint64_t q = 0;
    mpz_class derived;
    mpz_class published;
    std::optional<std::uint64_t> enumerated;  // empty when skipped
    std::string method;  // "brute", "frame_fixed_brute", "cache", or skip reason
    bool ok = true;      // enumerated value (when present) equals the derived one
};
struct VerifyRow {
    CycleType cls = CycleType::identity(1);
    bool symbolic_ok = false;       // derived == published as polynomials
    bool expected_erratum = false;  // the one documented bad published row
    std::vector<VerifyCell> cells;
};
struct VerifyReport {
    std::uint32_t n = 0;
    std::vector<VerifyRow> rows;
    // True when every enumerated cell matches the derived value and every
    // symbolic mismatch with the published table is a documented erratum.
    bool ok = true;
};

VerifyReport run_verify(std::uint32_t n, const std::vector<std::uint64_t>& qs,
                        std::uint64_t budget, int jobs, ResultCache* cache);
std::vector<std::uint64_t> default_verify_qs(std::uint32_t n);
std::string format_verify(const VerifyReport& r, OutputFormat f);

// Cohomology tables: the X_n decomposition with Betti numbers and the
// quotient Betti numbers.  Partition keys within a degree are ordered
// lexicographically descending.
std::string format_cohomology(const CohomologySolution& s, OutputFormat f);

}  // namespace arccount
