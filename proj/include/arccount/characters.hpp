#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "arccount/cycle_type.hpp"

namespace arccount {

// A class function on S_n: one rational value per conjugacy class, indexed
// in the partitions_of(n) order.
struct ClassFunction {
    std::uint32_t n = 0;
    std::vector<mpq_class> values;
};

struct Multiplicity {
    CycleType irrep;       // partition label of the irreducible
    mpq_class value;       // <f, chi>; integral and nonnegative for true characters
};

struct Decomposition {
    std::vector<Multiplicity> terms;   // every irrep, table order
    bool integral = true;
    bool nonnegative = true;
    bool ok() const { return integral && nonnegative; }
    // only the nonzero terms
    std::vector<Multiplicity> support() const;
};

// Character table of S_n, n <= 8, computed by the rim-hook (Murnaghan-
// Nakayama) recursion.  Rows are irreducibles labelled by partitions of n,
// columns are conjugacy classes, both in partitions_of(n) order.
class CharacterTable {
public:
    explicit CharacterTable(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    std::size_t size() const { return classes_.size(); }      // rows = columns
    const std::vector<CycleType>& classes() const { return classes_; }
    std::uint64_t class_size(std::size_t c) const { return class_sizes_[c]; }
    const CycleType& irrep(std::size_t r) const { return classes_[r]; }
    std::size_t index_of(const CycleType& t) const;

    long long value(std::size_t irrep_row, std::size_t class_col) const {
        return values_[irrep_row][class_col];
    }
    long long dimension(std::size_t irrep_row) const { return values_[irrep_row][0]; }

    ClassFunction irreducible(std::size_t r) const;
    // Trivial representation: the one-part partition (n), not the identity class.
    ClassFunction trivial() const { return irreducible(index_of(CycleType({n_}))); }

    // (1/n!) sum_C |C| f(C) g(C); characters of real representations, so no
    // conjugation is involved.
    mpq_class inner_product(const ClassFunction& f, const ClassFunction& g) const;

    // Multiplicity of each irreducible in f.  Non-integral or negative
    // results are reported in the flags, not thrown: they are the designed
    // detector for inconsistent input data.
    Decomposition decompose(const ClassFunction& f) const;

private:
    std::uint32_t n_;
    std::vector<CycleType> classes_;
    std::vector<std::uint64_t> class_sizes_;
    std::vector<std::vector<long long>> values_;
};

// Display name for common irreducibles: U trivial, U' sign, V standard,
// V' = V tensor sign, L2V / L3V exterior powers of V, S_{a,b,..} otherwise.
std::string irrep_display_name(const CycleType& irrep);

// The value of the Murnaghan-Nakayama recursion for one partition pair;
// exposed for direct testing.
long long mn_character_value(const std::vector<std::uint32_t>& irrep_parts,
                             const std::vector<std::uint32_t>& class_parts);

}  // namespace arccount
