#pragma once

#include <limits>
#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ternop {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt numerator(const Rational &q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational &q) { return boost::multiprecision::denominator(q); }

inline bool fits_int64(const BigInt &v)
{
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

inline std::string to_string(const BigInt &v) { return v.str(); }

/// (-1)^k as an int.
constexpr int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace ternop
