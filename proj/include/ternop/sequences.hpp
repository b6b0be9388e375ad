#pragma once

#include <stdexcept>
#include <vector>

#include "ternop/bigint.hpp"

namespace ternop {

/// Raised when a quantity that must be an integer is not.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Positive divisors of n in ascending order.
std::vector<long> divisors(long n);
long euler_phi(long n);
int mobius_mu(long n);
BigInt binomial(long n, long k);

/// C(2n, n) / (n + 1).
BigInt catalan(long n);

/// lambda(n) = (-1)^{C(n,2)} C(n-1, floor((n-1)/2)), n >= 1.
BigInt lambda_seq(long n);

/// b_n = (1/n) sum_{d|n} mu(d) lambda(n/d), n >= 1. Throws IntegralityError
/// if the sum is not divisible by n.
BigInt b_seq(long n);

} // namespace ternop
