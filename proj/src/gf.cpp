#include "arccount/gf.hpp"

#include <algorithm>
#include <numeric>

namespace arccount {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 checked_pow(u64 p, std::uint32_t d, u64 cap) {
    u64 r = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        if (r > cap / p) return 0;
        r *= p;
    }
    return r;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomials over F_p, coefficients low degree first, no leading zeros.
using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
void reduce(Poly& a, const Poly& f, u64 p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        u64 lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead) {
            for (std::size_t i = 0; i < df; ++i) {
                u64 t = mulmod(lead, f[i], p);
                u64& c = a[shift + i];
                c = (c >= t) ? c - t : c + p - t;
            }
        }
        a.pop_back();
    }
    trim(a);
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % p;
    }
    reduce(r, f, p);
    return r;
}

Poly powmod_poly(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = mulmod_poly(r, base, f, p);
        base = mulmod_poly(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a mod b
        u64 li = powmod(b.back(), p - 2, p);
        for (u64& c : b) c = mulmod(c, li, p);
        reduce(a, b, p);
        std::swap(a, b);
    }
    return a;
}

// f monic of degree d is irreducible over F_p iff gcd(f, x^{p^k} - x) is
// constant for every k <= d/2 (any nontrivial factorization contributes an
// irreducible factor of some such degree, which divides x^{p^k} - x).
bool is_irreducible(const Poly& f, u64 p) {
    const std::size_t d = f.size() - 1;
    Poly t{0, 1};  // x
    for (std::size_t k = 1; k <= d / 2; ++k) {
        t = powmod_poly(t, p, f, p);  // x^{p^k} mod f
        Poly g = t;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] >= 1) ? g[1] - 1 : p - 1;  // minus x
        trim(g);
        Poly gc = poly_gcd(f, g, p);
        if (gc.size() > 1) return false;
    }
    return true;
}

u64 pack(const Poly& a, u64 p, std::uint32_t d) {
    u64 v = 0;
    for (std::uint32_t i = d; i-- > 0;) v = v * p + (i < a.size() ? a[i] : 0);
    return v;
}

Poly unpack(u64 v, u64 p, std::uint32_t d) {
    Poly a(d, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        a[i] = v % p;
        v /= p;
    }
    trim(a);
    return a;
}

}  // namespace

GaloisField::GaloisField(std::uint64_t p, std::uint32_t d, std::uint32_t m, std::uint64_t table_limit) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (d < 1 || d > kMaxDegree) throw std::invalid_argument("degree must be in 1..12");
    if (m < 1 || d % m != 0) throw std::invalid_argument("base power must divide the degree");
    u64 size = checked_pow(p, d, kSizeCap);
    if (!size) throw std::invalid_argument("field size exceeds the 2^40 handle cap");
    p_ = p;
    d_ = d;
    m_ = m;
    q_ = checked_pow(p, m, kSizeCap);
    size_ = size;
    char2_ = (p == 2);

    // First irreducible in packed coefficient order.  Density is ~1/d, so the
    // scan terminates quickly; determinism is the point.
    for (u64 c = 0;; ++c) {
        if (c >= size_) throw std::logic_error("no irreducible modulus found");
        Poly f = unpack(c, p_, d_);
        f.resize(d_ + 1, 0);
        f[d_] = 1;
        if (is_irreducible(f, p_)) {
            modulus_ = f;
            break;
        }
    }

    if (size_ <= table_limit) build_tables();
}

void GaloisField::build_tables() {
    has_tables_ = true;
    go_ = std::uint32_t(size_ - 1);

    // Any element of full multiplicative order serves as the table generator;
    // take the first in handle order.
    const auto ord_factors = prime_factors(size_ - 1);
    Poly gen;
    for (u64 v = 1;; ++v) {
        if (v >= size_) throw std::logic_error("no multiplicative generator found");
        Poly cand = unpack(v, p_, d_);
        bool ok = true;
        for (u64 f : ord_factors) {
            Poly r = powmod_poly(cand, (size_ - 1) / f, modulus_, p_);
            if (r.size() == 1 && r[0] == 1) {
                ok = false;  // order divides (size-1)/f
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }

    exp_.assign(go_, 0);
    log_.assign(size_, kNoLog);
    Poly cur{1};
    for (std::uint32_t k = 0; k < go_; ++k) {
        u64 v = pack(cur, p_, d_);
        exp_[k] = std::uint32_t(v);
        log_[v] = k;
        cur = mulmod_poly(cur, gen, modulus_, p_);
    }
    if (pack(cur, p_, d_) != 1) throw std::logic_error("generator order mismatch");

    zech_.assign(go_, kNoLog);
    for (std::uint32_t k = 0; k < go_; ++k) {
        Poly s = unpack(exp_[k], p_, d_);
        if (s.empty()) s.push_back(1);
        else s[0] = (s[0] + 1) % p_;
        trim(s);
        u64 v = pack(s, p_, d_);
        zech_[k] = v ? log_[v] : kNoLog;
    }

    if (!char2_) {
        neg_.assign(size_, 0);
        std::uint32_t half = log_[p_ - 1];  // log(-1); -1 packs as the constant p-1
        for (u64 v = 1; v < size_; ++v) {
            std::uint32_t s = log_[v] + half;
            if (s >= go_) s -= go_;
            neg_[v] = exp_[s];
        }
    }

    frob_.assign(size_, 0);
    u64 qmod = q_ % go_;
    for (std::uint32_t k = 0; k < go_; ++k)
        frob_[exp_[k]] = exp_[std::uint32_t((u64(k) * qmod) % go_)];

    deg_.assign(size_, 1);
    for (u64 v = 0; v < size_; ++v) {
        std::uint32_t k = 1;
        u64 w = frob_[v];
        while (w != v) {
            w = frob_[w];
            ++k;
        }
        deg_[v] = std::uint8_t(k);
    }
}

GFElem GaloisField::generator() const {
    if (!has_tables_) throw std::logic_error("generator requires table mode");
    return exp_[1 % go_];
}

GFElem GaloisField::inv(GFElem a) const {
    check1(a);
    if (a == 0) throw std::domain_error("division by zero");
    if (has_tables_) {
        std::uint32_t l = log_[a];
        return exp_[l ? go_ - l : 0];
    }
    return pow_generic(a, size_ - 2);
}

GFElem GaloisField::pow(GFElem a, std::uint64_t e) const {
    check1(a);
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables_) {
        u64 l = (u64(log_[a]) * (e % go_)) % go_;
        return exp_[l];
    }
    return pow_generic(a, e);
}

GFElem GaloisField::add_generic(GFElem a, GFElem b) const {
    u64 r = 0, mult = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        u64 s = (a % p_ + b % p_) % p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

GFElem GaloisField::neg_generic(GFElem a) const {
    u64 r = 0, mult = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        u64 c = a % p_;
        r += (c ? p_ - c : 0) * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

GFElem GaloisField::mul_generic(GFElem a, GFElem b) const {
    Poly r = mulmod_poly(unpack(a, p_, d_), unpack(b, p_, d_), modulus_, p_);
    return pack(r, p_, d_);
}

GFElem GaloisField::pow_generic(GFElem a, std::uint64_t e) const {
    Poly r = powmod_poly(unpack(a, p_, d_), e, modulus_, p_);
    return pack(r, p_, d_);
}

std::uint32_t GaloisField::degree_generic(GFElem a) const {
    std::uint32_t k = 1;
    GFElem w = frobenius(a);
    while (w != a) {
        w = frobenius(w);
        ++k;
    }
    return k;
}

std::vector<GFElem> GaloisField::subfield(std::uint32_t k) const {
    if (!has_tables_) throw std::logic_error("subfield enumeration requires table mode");
    if (k < 1 || frobenius_order() % k != 0)
        throw std::invalid_argument("subfield degree must divide the Frobenius order");
    std::vector<GFElem> out;
    for (u64 v = 0; v < size_; ++v)
        if (k % deg_[v] == 0) out.push_back(v);
    return out;
}

GFElem GaloisField::from_coefficients(const std::vector<std::uint64_t>& c) const {
    if (c.size() > d_) throw std::invalid_argument("too many coefficients");
    u64 v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        v = v * p_ + c[i];
    }
    return v;
}

std::vector<std::uint64_t> GaloisField::coefficients(GFElem a) const {
    check1(a);
    std::vector<u64> c(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

std::string GaloisField::describe() const {
    std::string s = "GF(" + std::to_string(p_);
    if (d_ > 1) s += "^" + std::to_string(d_);
    s += ")";
    if (m_ > 1) s += " over GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
    return s;
}

}  // namespace arccount
