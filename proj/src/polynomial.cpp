#include "ternop/polynomial.hpp"

namespace ternop {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    for (long long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt &c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt &c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial(std::size_t d, const BigInt &c)
{
    std::vector<BigInt> v(d + 1);
    v[d] = 1;
    v[0] -= c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const BigInt &IntPolynomial::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::negate_variable() const
{
    IntPolynomial r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2)
        r.coeffs_[k] = -r.coeffs_[k];
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned long long k) const
{
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt &c = coeffs_[k];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const BigInt a = neg ? BigInt(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (a != 1 || k == 0)
            out += a.str();
        if (k >= 1)
            out += "x";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto &c : r.coeffs_)
        c = -c;
    return r;
}

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b)
{
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        v[k] += b.coeffs_[k];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial exact_div(const IntPolynomial &p, const IntPolynomial &q)
{
    if (q.is_zero())
        throw std::domain_error("exact_div: division by the zero polynomial");
    if (p.is_zero())
        return {};
    if (p.degree() < q.degree())
        throw InexactDivision("exact_div: divisor degree exceeds dividend degree");
    std::vector<BigInt> rem = p.coeffs();
    const auto &qc = q.coeffs();
    const std::size_t dq = qc.size() - 1;
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < dq; ++k)
        if (qc[k] != 0)
            support.push_back(k);
    const BigInt &lead = qc[dq];
    std::vector<BigInt> quot(rem.size() - dq);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt &top = rem[k + dq];
        if (top == 0)
            continue;
        if (top % lead != 0)
            throw InexactDivision("exact_div: leading coefficient " + top.str() + " not divisible by " + lead.str());
        const BigInt c = top / lead;
        quot[k] = c;
        top = 0;
        for (std::size_t s : support)
            rem[k + s] -= c * qc[s];
    }
    for (std::size_t k = 0; k < dq; ++k)
        if (rem[k] != 0)
            throw InexactDivision("exact_div: nonzero remainder, degree " + std::to_string(k) + " coefficient " +
                                  rem[k].str());
    return IntPolynomial(std::move(quot));
}

} // namespace ternop
