#include "ternop/sequences.hpp"

#include <string>

namespace ternop {

std::vector<long> divisors(long n)
{
    if (n < 1)
        throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long euler_phi(long n)
{
    if (n < 1)
        throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    if (n > 1)
        result -= result / n;
    return result;
}

int mobius_mu(long n)
{
    if (n < 1)
        throw std::invalid_argument("mobius_mu: n must be positive");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            mu = -mu;
        }
    if (n > 1)
        mu = -mu;
    return mu;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

BigInt catalan(long n)
{
    if (n < 0)
        throw std::invalid_argument("catalan: n must be nonnegative");
    return binomial(2 * n, n) / (n + 1);
}

BigInt lambda_seq(long n)
{
    if (n < 1)
        throw std::invalid_argument("lambda: n must be positive");
    const long c2 = n * (n - 1) / 2;
    const BigInt v = binomial(n - 1, (n - 1) / 2);
    return c2 % 2 == 0 ? v : BigInt(-v);
}

BigInt b_seq(long n)
{
    if (n < 1)
        throw std::invalid_argument("b: n must be positive");
    BigInt sum = 0;
    for (long d : divisors(n))
        sum += mobius_mu(d) * lambda_seq(n / d);
    if (sum % n != 0)
        throw IntegralityError("b_" + std::to_string(n) + " is not an integer: " + sum.str() + "/" + std::to_string(n));
    return sum / n;
}

} // namespace ternop
