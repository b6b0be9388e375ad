#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternop/bigint.hpp"

namespace ternop {

/// Thrown when a polynomial division that must be exact leaves a remainder.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Univariate polynomial over the integers, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial constant(const BigInt &c);
    static IntPolynomial monomial(const BigInt &c, std::size_t degree);
    /// x^d - c
    static IntPolynomial binomial(std::size_t d, const BigInt &c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt> &coeffs() const noexcept { return coeffs_; }
    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    const BigInt &leading() const;

    /// p(-x)
    IntPolynomial negate_variable() const;
    IntPolynomial pow(unsigned long long k) const;

    std::string to_string() const;

    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;
    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// p / q over the integers; throws InexactDivision unless q divides p exactly.
IntPolynomial exact_div(const IntPolynomial &p, const IntPolynomial &q);

} // namespace ternop
