#include "arccount/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arccount {

namespace {

using Parts = std::vector<std::uint32_t>;

// Beta-set (first-column hook lengths) of a partition: strictly decreasing
// lambda_i + (len - 1 - i).  Removing a rim hook of size t means moving one
// beta value down by t onto an unoccupied spot; the sign is (-1)^(number of
// occupied values jumped over), i.e. the leg length of the hook.
std::vector<std::int64_t> beta_set(const Parts& lambda) {
    std::vector<std::int64_t> b(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        b[i] = std::int64_t(lambda[i]) + std::int64_t(lambda.size() - 1 - i);
    return b;
}

Parts partition_from_beta(std::vector<std::int64_t> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    Parts out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::int64_t part = b[i] - std::int64_t(b.size() - 1 - i);
        if (part > 0) out.push_back(std::uint32_t(part));
    }
    return out;
}

long long mn_recurse(const Parts& lambda, const Parts& rho, std::map<std::pair<Parts, Parts>, long long>& memo) {
    if (rho.empty()) return 1;  // empty diagram, empty cycle type
    auto key = std::make_pair(lambda, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const std::uint32_t t = rho.front();
    Parts rest(rho.begin() + 1, rho.end());
    std::vector<std::int64_t> b = beta_set(lambda);

    long long total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::int64_t target = b[i] - std::int64_t(t);
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == target) occupied = true;
            if (b[j] > target && b[j] < b[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<std::int64_t> nb = b;
        nb[i] = target;
        long long sub = mn_recurse(partition_from_beta(std::move(nb)), rest, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

long long mn_character_value(const Parts& irrep_parts, const Parts& class_parts) {
    std::map<std::pair<Parts, Parts>, long long> memo;
    return mn_recurse(irrep_parts, class_parts, memo);
}

CharacterTable::CharacterTable(std::uint32_t n) : n_(n) {
    if (n < 1 || n > 8) throw std::invalid_argument("character tables cover S_1..S_8");
    classes_ = partitions_of(n);
    class_sizes_.reserve(classes_.size());
    for (const auto& c : classes_) class_sizes_.push_back(factorial(n) / c.centralizer_order());

    std::map<std::pair<Parts, Parts>, long long> memo;
    values_.resize(classes_.size());
    for (std::size_t r = 0; r < classes_.size(); ++r) {
        values_[r].resize(classes_.size());
        for (std::size_t c = 0; c < classes_.size(); ++c)
            values_[r][c] = mn_recurse(classes_[r].parts(), classes_[c].parts(), memo);
    }
}

std::size_t CharacterTable::index_of(const CycleType& t) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), t);
    if (it == classes_.end() || !(*it == t)) throw std::invalid_argument("not a partition of n");
    return std::size_t(it - classes_.begin());
}

ClassFunction CharacterTable::irreducible(std::size_t r) const {
    ClassFunction f{n_, {}};
    f.values.reserve(size());
    for (std::size_t c = 0; c < size(); ++c) f.values.emplace_back(static_cast<long>(values_[r][c]));
    return f;
}

mpq_class CharacterTable::inner_product(const ClassFunction& f, const ClassFunction& g) const {
    if (f.n != n_ || g.n != n_ || f.values.size() != size() || g.values.size() != size())
        throw std::invalid_argument("class function size mismatch");
    mpq_class acc(0);
    for (std::size_t c = 0; c < size(); ++c)
        acc += mpq_class(static_cast<unsigned long>(class_sizes_[c])) * f.values[c] * g.values[c];
    return acc / mpq_class(static_cast<unsigned long>(factorial(n_)));
}

Decomposition CharacterTable::decompose(const ClassFunction& f) const {
    Decomposition d;
    d.terms.reserve(size());
    for (std::size_t r = 0; r < size(); ++r) {
        mpq_class m = inner_product(f, irreducible(r));
        if (m.get_den() != 1) d.integral = false;
        if (m < 0) d.nonnegative = false;
        d.terms.push_back({classes_[r], m});
    }
    return d;
}

std::vector<Multiplicity> Decomposition::support() const {
    std::vector<Multiplicity> out;
    for (const auto& t : terms)
        if (t.value != 0) out.push_back(t);
    return out;
}

std::string irrep_display_name(const CycleType& irrep) {
    const auto& p = irrep.parts();
    const std::uint32_t n = irrep.n();
    if (p.size() == 1) return "U";                       // trivial
    if (p.front() == 1) return "U'";                     // sign
    if (p.size() == 2 && p[1] == 1) return "V";          // standard (n-1,1)
    if (n >= 4 && p.size() == n - 1 && p[0] == 2) return "V'";  // (2,1^{n-2})
    if (p.size() == 3 && p[0] == n - 2 && p[1] == 1) return "L2V";   // (n-2,1,1)
    if (p.size() == 4 && p[0] == n - 3 && p[1] == 1 && p[2] == 1) return "L3V";  // (n-3,1,1,1)
    std::string s = "S_{";
    s += irrep.parts_string();
    s += "}";
    return s;
}

}  // namespace arccount
