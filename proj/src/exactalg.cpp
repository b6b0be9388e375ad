#include "ternop/exactalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "ternop/sequences.hpp"

namespace ternop {

namespace {

using u64 = std::uint64_t;

bool is_prime(u64 p)
{
    if (p < 2)
        return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// Primes just below 2^31, largest first; products of two residues fit in u64.
std::vector<u64> crt_primes(std::size_t count)
{
    static std::vector<u64> primes;
    static std::mutex mu;
    std::lock_guard lock(mu);
    u64 candidate = primes.empty() ? (u64{1} << 31) - 1 : primes.back() - 2;
    while (primes.size() < count) {
        if (is_prime(candidate))
            primes.push_back(candidate);
        candidate -= 2;
    }
    return {primes.begin(), primes.begin() + static_cast<long>(count)};
}

u64 pow_mod(u64 b, u64 e, u64 p)
{
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1U)
            r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

std::vector<u64> reduce(const IntMatrix &m, u64 p)
{
    std::vector<u64> out(m.rows() * m.cols());
    const BigInt bp = p;
    for (std::size_t k = 0; k < out.size(); ++k) {
        BigInt r = m.data()[k] % bp;
        if (r < 0)
            r += bp;
        out[k] = r.convert_to<u64>();
    }
    return out;
}

// Hessenberg reduction followed by the standard recurrence. Returns the
// ascending coefficients of det(xI - H) mod p, length d + 1.
std::vector<u64> charpoly_mod(std::vector<u64> h, std::size_t d, u64 p)
{
    auto at = [&](std::size_t i, std::size_t j) -> u64 & { return h[i * d + j]; };
    for (std::size_t m = 1; m + 1 < d; ++m) {
        std::size_t piv = m;
        while (piv < d && at(piv, m - 1) == 0)
            ++piv;
        if (piv == d)
            continue;
        if (piv != m) {
            for (std::size_t j = 0; j < d; ++j)
                std::swap(at(piv, j), at(m, j));
            for (std::size_t i = 0; i < d; ++i)
                std::swap(at(i, piv), at(i, m));
        }
        const u64 inv = inv_mod(at(m, m - 1), p);
        for (std::size_t i = m + 1; i < d; ++i) {
            const u64 u = at(i, m - 1) * inv % p;
            if (u == 0)
                continue;
            // row_i -= u row_m
            for (std::size_t j = 0; j < d; ++j)
                at(i, j) = (at(i, j) + (p - u) * at(m, j)) % p;
            // col_m += u col_i
            for (std::size_t k = 0; k < d; ++k)
                at(k, m) = (at(k, m) + u * at(k, i)) % p;
        }
    }
    // polys[m] = charpoly of the leading m x m block
    std::vector<std::vector<u64>> polys(d + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= d; ++m) {
        std::vector<u64> pm(m + 1, 0);
        const auto &prev = polys[m - 1];
        const u64 hmm = at(m - 1, m - 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            pm[k + 1] = (pm[k + 1] + prev[k]) % p;
            pm[k] = (pm[k] + (p - hmm) * prev[k]) % p;
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = t * at(m - i, m - i - 1) % p;
            const u64 coef = t * at(m - i - 1, m - 1) % p;
            if (coef == 0)
                continue;
            const auto &q = polys[m - i - 1];
            for (std::size_t k = 0; k < q.size(); ++k)
                pm[k] = (pm[k] + (p - coef) * q[k]) % p;
        }
        polys[m] = std::move(pm);
    }
    return polys[d];
}

u64 det_mod(std::vector<u64> a, std::size_t d, u64 p)
{
    u64 det = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && a[piv * d + c] == 0)
            ++piv;
        if (piv == d)
            return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < d; ++j)
                std::swap(a[piv * d + j], a[c * d + j]);
            det = (p - det) % p;
        }
        det = det * a[c * d + c] % p;
        const u64 inv = inv_mod(a[c * d + c], p);
        for (std::size_t i = c + 1; i < d; ++i) {
            const u64 u = a[i * d + c] * inv % p;
            if (u == 0)
                continue;
            for (std::size_t j = c; j < d; ++j)
                a[i * d + j] = (a[i * d + j] + (p - u) * a[c * d + j]) % p;
        }
    }
    return det;
}

// log2 of prod_i (1 + |v_i|_2) over the rows (or columns), rounded up generously.
double log2_norm_bound(const IntMatrix &m, bool by_rows)
{
    const std::size_t outer = by_rows ? m.rows() : m.cols();
    const std::size_t inner = by_rows ? m.cols() : m.rows();
    double total = 0;
    for (std::size_t i = 0; i < outer; ++i) {
        BigInt sq = 0;
        for (std::size_t j = 0; j < inner; ++j) {
            const BigInt &v = by_rows ? m(i, j) : m(j, i);
            sq += v * v;
        }
        if (sq == 0)
            continue;
        const std::size_t bits = msb(sq);
        if (bits < 1000)
            total += std::log2(1.0 + std::sqrt(sq.convert_to<double>())) + 1e-9;
        else
            total += 1.0 + 0.5 * static_cast<double>(bits + 1);
    }
    return total;
}

std::size_t primes_needed(const IntMatrix &m)
{
    // CRT range must exceed 2B to recover signed values; each prime adds > 30 bits
    const double bits = std::min(log2_norm_bound(m, true), log2_norm_bound(m, false)) + 2.0;
    return static_cast<std::size_t>(std::ceil(bits / 30.0)) + 1;
}

// Garner-style incremental CRT over all primes, symmetric representative.
class CrtAccumulator {
public:
    void add(const std::vector<u64> &residues, u64 p)
    {
        if (values_.empty()) {
            values_.resize(residues.size());
            for (std::size_t k = 0; k < residues.size(); ++k)
                values_[k] = residues[k];
            modulus_ = p;
            return;
        }
        const BigInt bp = p;
        const u64 minv = inv_mod(BigInt(modulus_ % bp).convert_to<u64>(), p);
        for (std::size_t k = 0; k < residues.size(); ++k) {
            BigInt cur = values_[k] % bp;
            if (cur < 0)
                cur += bp;
            const u64 diff = (residues[k] + p - cur.convert_to<u64>()) % p;
            const u64 t = diff * minv % p;
            values_[k] += modulus_ * t;
        }
        modulus_ *= p;
    }

    std::vector<BigInt> symmetric() const
    {
        std::vector<BigInt> out = values_;
        const BigInt half = modulus_ / 2;
        for (auto &v : out)
            if (v > half)
                v -= modulus_;
        return out;
    }

private:
    std::vector<BigInt> values_;
    BigInt modulus_ = 1;
};

template <typename Fn>
std::vector<std::vector<u64>> per_prime(const std::vector<u64> &primes, Fn fn)
{
    std::vector<std::vector<u64>> results(primes.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(primes.size(), std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < primes.size(); i = next++) {
                try {
                    results[i] = fn(primes[i]);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    failure = std::current_exception();
                }
            }
        });
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace

std::size_t charpoly_prime_count(const IntMatrix &m) { return primes_needed(m); }

BigInt determinant(const IntMatrix &m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t d = m.rows();
    if (d == 0)
        return 1;
    const std::vector<u64> used = crt_primes(primes_needed(m));
    const auto residues = per_prime(used, [&](u64 p) { return std::vector<u64>{det_mod(reduce(m, p), d, p)}; });
    CrtAccumulator acc;
    for (std::size_t i = 0; i < used.size(); ++i)
        acc.add(residues[i], used[i]);
    return acc.symmetric()[0];
}

IntPolynomial charpoly(const IntMatrix &m)
{
    if (!m.is_square())
        throw std::invalid_argument("charpoly: non-square matrix");
    const std::size_t d = m.rows();
    if (d == 0)
        return IntPolynomial{1};
    const std::size_t count = primes_needed(m);
    const std::vector<u64> used = crt_primes(count);
    const auto residues = per_prime(used, [&](u64 p) { return charpoly_mod(reduce(m, p), d, p); });
    CrtAccumulator acc;
    for (std::size_t i = 0; i < used.size(); ++i)
        acc.add(residues[i], used[i]);
    IntPolynomial result(acc.symmetric());

    if (result.degree() != static_cast<long>(d) || result.leading() != 1)
        throw std::logic_error("charpoly: result is not monic of degree " + std::to_string(d));
    if (result.coeff(d - 1) != -m.trace())
        throw std::logic_error("charpoly: x^{d-1} coefficient does not match -trace");
    const BigInt det = determinant(m);
    if (result.coeff(0) != (d % 2 == 0 ? det : BigInt(-det)))
        throw std::logic_error("charpoly: constant term does not match (-1)^d det");
    return result;
}

IntPolynomial cyclotomic_quotient(const std::map<long, BigInt> &exponents)
{
    IntPolynomial num{1}, den{1};
    for (const auto &[d, e] : exponents) {
        if (e == 0)
            continue;
        const IntPolynomial f = IntPolynomial::binomial(static_cast<std::size_t>(d), 1);
        const auto k = abs(e).convert_to<unsigned long long>();
        if (e > 0)
            num = num * f.pow(k);
        else
            den = den * f.pow(k);
    }
    return exact_div(num, den);
}

std::map<long, BigInt> presubstitution_exponents(long n)
{
    if (n < 1)
        throw std::invalid_argument("closed charpoly requires n >= 1");
    const long period = 2 * n + 2;
    const int s = sign_pow(n + 1);
    std::map<long, BigInt> e;
    e[period] += catalan(n);
    for (long d : divisors(period))
        e[d] -= s * b_seq(d);
    return e;
}

IntPolynomial closed_charpoly_presubstitution(long n) { return cyclotomic_quotient(presubstitution_exponents(n)); }

IntPolynomial substitute_sign(const IntPolynomial &p, int s)
{
    if (s == 1)
        return p;
    IntPolynomial q = p.negate_variable();
    return p.degree() % 2 == 0 ? q : -q;
}

IntPolynomial closed_charpoly(long n)
{
    return substitute_sign(closed_charpoly_presubstitution(n), sign_pow(n + 1));
}

IntPolynomial closed_charpoly_direct(long n)
{
    if (n < 1)
        throw std::invalid_argument("closed charpoly requires n >= 1");
    const long period = 2 * n + 2;
    const int s = sign_pow(n + 1);
    IntPolynomial num = IntPolynomial::binomial(period, 1).pow(catalan(n).convert_to<unsigned long long>());
    IntPolynomial den{1};
    for (long d : divisors(period)) {
        const BigInt b = b_seq(d);
        // factor exponent in the final quotient is -s * b_d
        const BigInt e = -s * b;
        if (e == 0)
            continue;
        const IntPolynomial f = IntPolynomial::binomial(d, sign_pow(d * (n + 1)));
        const auto k = abs(e).convert_to<unsigned long long>();
        if (e > 0)
            num = num * f.pow(k);
        else
            den = den * f.pow(k);
    }
    return exact_div(num, den);
}

} // namespace ternop
