#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace arccount {

// Univariate polynomial in q with exact rational coefficients.  Coefficients
// are stored lowest degree first with no trailing zeros, so representation
// equality is value equality.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c) { coeffs_.assign(1, mpq_class(c)); normalize(); }
    QPoly(const mpq_class& c) { coeffs_.assign(1, c); normalize(); }
    explicit QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    // Integer coefficients, lowest degree first: QPoly::of({-1, 0, 1}) = q^2 - 1.
    static QPoly of(std::initializer_list<long> coeffs);
    static QPoly variable();                 // q
    static QPoly monomial(unsigned deg, const mpq_class& c = 1);

    int degree() const { return int(coeffs_.size()) - 1; }  // -1 for the zero poly
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of q^i (zero outside the stored range).
    const mpq_class& coeff(unsigned i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool has_integer_coeffs() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly scaled(const mpq_class& c) const;
    QPoly pow(unsigned e) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return coeffs_ != o.coeffs_; }

    mpq_class eval(const mpq_class& q) const;        // Horner
    mpq_class operator()(long q) const { return eval(mpq_class(q)); }
    // eval at an integer point for a polynomial known to take integer values there
    mpz_class eval_int(std::uint64_t q) const;

    // Human form, highest degree first: "q^2 - 5*q + 6".
    std::string str(const std::string& var = "q") const;

private:
    void normalize();
    std::vector<mpq_class> coeffs_;
};

// Unique interpolating polynomial of degree < #samples through the given
// (abscissa, value) pairs.  Throws std::invalid_argument on repeated abscissae.
QPoly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& samples);

}  // namespace arccount
