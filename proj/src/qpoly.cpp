#include "arccount/qpoly.hpp"

#include <stdexcept>

namespace arccount {

namespace {
const mpq_class kZero(0);
}

void QPoly::normalize() {
    // Raw mpq_class(num, den) values are not reduced; equality needs
    // canonical form, so enforce it on everything that enters a QPoly.
    for (auto& c : coeffs_) mpq_canonicalize(c.get_mpq_t());
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::of(std::initializer_list<long> coeffs) {
    std::vector<mpq_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly QPoly::variable() { return monomial(1); }

QPoly QPoly::monomial(unsigned deg, const mpq_class& c) {
    std::vector<mpq_class> v(deg + 1, kZero);
    v[deg] = c;
    return QPoly(std::move(v));
}

const mpq_class& QPoly::coeff(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

bool QPoly::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

QPoly QPoly::operator-() const {
    std::vector<mpq_class> c(coeffs_);
    for (auto& x : c) x = -x;
    return QPoly(std::move(c));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> c(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpq_class> c(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> c(coeffs_);
    for (auto& x : c) x *= s;
    return QPoly(std::move(c));
}

QPoly QPoly::pow(unsigned e) const {
    QPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

mpq_class QPoly::eval(const mpq_class& q) const {
    mpq_class r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * q + coeffs_[i];
    return r;
}

mpz_class QPoly::eval_int(std::uint64_t q) const {
    mpq_class v = eval(mpq_class(mpz_class(static_cast<unsigned long>(q))));
    if (v.get_den() != 1) throw std::domain_error("polynomial value is not an integer at " + std::to_string(q));
    return v.get_num();
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) s += a.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

QPoly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("repeated interpolation abscissa");
    // Lagrange basis, exact arithmetic.
    QPoly acc;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        QPoly basis(1);
        mpq_class denom(1);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            basis *= QPoly(std::vector<mpq_class>{-samples[j].first, 1});
            denom *= samples[i].first - samples[j].first;
        }
        acc += basis.scaled(samples[i].second / denom);
    }
    return acc;
}

}  // namespace arccount
