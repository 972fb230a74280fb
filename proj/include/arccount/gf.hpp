#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arccount {

// Element of F_{p^d}, encoded as the packed integer sum c_i * p^i where
// (c_0, ..., c_{d-1}) are the coefficients of its residue polynomial.
// The encoding is canonical and dense: handles are exactly 0 .. p^d - 1,
// equal handles mean equal elements, 0 and 1 are the field's 0 and 1.
using GFElem = std::uint64_t;

// F_{p^d} together with a distinguished base subfield F_q, q = p^m, m | d.
// "Frobenius" always means x -> x^q, so Gal(F_{p^d}/F_q) is cyclic of
// order d/m generated by it.
//
// The modulus is the first monic irreducible of degree d over F_p when
// coefficient vectors are scanned in packed-integer order, so rebuilding
// a context with the same (p, d) is reproducible bit for bit.
//
// Fields with at most kTableLimit elements carry exp/log/Zech/Frobenius/
// degree tables and every operation is a few lookups; larger fields (up to
// the 2^40 handle cap) fall back to coefficient arithmetic.  Instances are
// immutable after construction and safe to share across threads.
class GaloisField {
public:
    static constexpr std::uint64_t kTableLimit = 1u << 20;
    static constexpr std::uint64_t kSizeCap = std::uint64_t(1) << 40;
    static constexpr std::uint32_t kMaxDegree = 12;

    // Builds F_{p^d} with base F_{p^m}.  Throws std::invalid_argument unless
    // p is prime, 1 <= d <= 12, m | d, and p^d <= 2^40.  table_limit caps the
    // field size that gets lookup tables (lower it to bound memory, or to 0
    // to force coefficient arithmetic).
    GaloisField(std::uint64_t p, std::uint32_t d = 1, std::uint32_t m = 1,
                std::uint64_t table_limit = kTableLimit);

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return d_; }          // over the prime field
    std::uint32_t base_power() const { return m_; }      // q = p^m
    std::uint64_t size() const { return size_; }         // p^d
    std::uint64_t base_size() const { return q_; }       // q
    // Order of Frobenius, i.e. [F_{p^d} : F_q].
    std::uint32_t frobenius_order() const { return d_ / m_; }
    bool has_tables() const { return has_tables_; }

    // Monic modulus as coefficients c_0 .. c_d (c_d = 1).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    GFElem zero() const { return 0; }
    GFElem one() const { return 1; }
    // A fixed multiplicative generator (tables only).
    GFElem generator() const;

    GFElem add(GFElem a, GFElem b) const {
        check2(a, b);
        if (char2_) return a ^ b;
        if (has_tables_) {
            if (a == 0) return b;
            if (b == 0) return a;
            std::uint32_t la = log_[a], lb = log_[b];
            std::uint32_t k = lb >= la ? lb - la : lb + go_ - la;
            std::uint32_t z = zech_[k];
            if (z == kNoLog) return 0;      // b = -a
            std::uint32_t s = la + z;
            if (s >= go_) s -= go_;
            return exp_[s];
        }
        return add_generic(a, b);
    }

    GFElem neg(GFElem a) const {
        check1(a);
        if (char2_) return a;
        if (has_tables_) return neg_[a];
        return neg_generic(a);
    }

    GFElem sub(GFElem a, GFElem b) const {
        if (char2_) { check2(a, b); return a ^ b; }
        return add(a, neg(b));
    }

    GFElem mul(GFElem a, GFElem b) const {
        check2(a, b);
        if (has_tables_) {
            if (a == 0 || b == 0) return 0;
            std::uint32_t s = log_[a] + log_[b];
            if (s >= go_) s -= go_;
            return exp_[s];
        }
        return mul_generic(a, b);
    }

    // Throws std::domain_error on a = 0.  Equal to pow(a, p^d - 2).
    GFElem inv(GFElem a) const;
    GFElem div(GFElem a, GFElem b) const { return mul(a, inv(b)); }

    GFElem pow(GFElem a, std::uint64_t e) const;

    // x -> x^q.  A field automorphism fixing exactly F_q.
    GFElem frobenius(GFElem a) const {
        check1(a);
        if (has_tables_) return frob_[a];
        return pow_generic(a, q_);
    }

    // Least k >= 1 with a^{q^k} = a; divides frobenius_order().
    std::uint32_t element_degree(GFElem a) const {
        check1(a);
        if (has_tables_) return deg_[a];
        return degree_generic(a);
    }

    // All elements a with element_degree(a) | k, in increasing handle order:
    // the subfield F_{q^k} (requires k | frobenius_order(); tables only).
    std::vector<GFElem> subfield(std::uint32_t k) const;

    GFElem from_coefficients(const std::vector<std::uint64_t>& c) const;
    std::vector<std::uint64_t> coefficients(GFElem a) const;

    std::string describe() const;   // e.g. "GF(2^6) over GF(2^2)"

private:
    void check1(GFElem a) const {
        if (a >= size_) throw std::out_of_range("element from a different field context");
    }
    void check2(GFElem a, GFElem b) const {
        if (a >= size_ || b >= size_) throw std::out_of_range("element from a different field context");
    }

    GFElem add_generic(GFElem a, GFElem b) const;
    GFElem neg_generic(GFElem a) const;
    GFElem mul_generic(GFElem a, GFElem b) const;
    GFElem pow_generic(GFElem a, std::uint64_t e) const;
    std::uint32_t degree_generic(GFElem a) const;
    void build_tables();

    std::uint64_t p_ = 0;
    std::uint32_t d_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t size_ = 0;
    bool char2_ = false;
    bool has_tables_ = false;
    std::uint32_t go_ = 0;          // group order p^d - 1 when tables exist
    std::vector<std::uint64_t> modulus_;

    static constexpr std::uint32_t kNoLog = 0xffffffffu;
    std::vector<std::uint32_t> exp_;    // exp_[k] = g^k, k < go_
    std::vector<std::uint32_t> log_;    // inverse of exp_ (log_[0] = kNoLog)
    std::vector<std::uint32_t> zech_;   // zech_[k] = log(1 + g^k), kNoLog if zero
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> frob_;
    std::vector<std::uint8_t> deg_;
};

}  // namespace arccount
