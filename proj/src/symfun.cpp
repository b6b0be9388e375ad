#include "ternop/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ternop/sequences.hpp"

namespace ternop {

int degree(const Partition &lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

SymFun::SymFun(int N) : N_(N)
{
    if (N < 0)
        throw std::invalid_argument("SymFun: negative truncation");
}

SymFun SymFun::p(int k, int N) { return monomial({k}, 1, N); }

SymFun SymFun::constant(const Rational &c, int N) { return monomial({}, c, N); }

SymFun SymFun::monomial(Partition lambda, const Rational &c, int N)
{
    SymFun f(N);
    f.add(std::move(lambda), c);
    return f;
}

Rational SymFun::coeff(const Partition &lambda) const
{
    Partition key = lambda;
    std::sort(key.begin(), key.end(), std::greater<>());
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFun::add(Partition lambda, const Rational &c)
{
    for (int part : lambda)
        if (part <= 0)
            throw std::invalid_argument("SymFun: partition parts must be positive");
    if (c == 0 || degree(lambda) > N_)
        return;
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    auto [it, inserted] = terms_.try_emplace(std::move(lambda), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymFun SymFun::degree_part(int d) const
{
    SymFun out(N_);
    for (const auto &[lambda, c] : terms_)
        if (degree(lambda) == d)
            out.terms_.emplace(lambda, c);
    return out;
}

SymFun SymFun::truncate(int N) const
{
    SymFun out(N);
    for (const auto &[lambda, c] : terms_)
        if (degree(lambda) <= N)
            out.terms_.emplace(lambda, c);
    return out;
}

int SymFun::min_degree() const
{
    int best = -1;
    for (const auto &[lambda, c] : terms_) {
        const int d = degree(lambda);
        if (best < 0 || d < best)
            best = d;
    }
    return best;
}

std::string SymFun::to_string() const
{
    if (terms_.empty())
        return "0";
    // by degree, then partition
    std::vector<const Terms::value_type *> order;
    for (const auto &term : terms_)
        order.push_back(&term);
    std::stable_sort(order.begin(), order.end(),
                     [](auto *a, auto *b) { return degree(a->first) < degree(b->first); });
    std::ostringstream out;
    bool first = true;
    for (const auto *term : order) {
        const Rational &c = term->second;
        const bool neg = c < 0;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const Rational a = neg ? Rational(-c) : c;
        const bool unit = a == 1 && !term->first.empty();
        if (!unit)
            out << a.str();
        // group equal parts as powers
        const Partition &lambda = term->first;
        for (std::size_t i = 0; i < lambda.size();) {
            std::size_t j = i;
            while (j < lambda.size() && lambda[j] == lambda[i])
                ++j;
            out << (unit && i == 0 ? "" : "*") << "p" << lambda[i];
            if (j - i > 1)
                out << "^" << (j - i);
            i = j;
        }
    }
    return out.str();
}

SymFun SymFun::operator-() const
{
    SymFun r = *this;
    for (auto &[lambda, c] : r.terms_)
        c = -c;
    return r;
}

SymFun &SymFun::operator+=(const SymFun &o)
{
    N_ = std::min(N_, o.N_);
    std::erase_if(terms_, [&](const auto &t) { return degree(t.first) > N_; });
    for (const auto &[lambda, c] : o.terms_)
        add(lambda, c);
    return *this;
}

SymFun &SymFun::operator-=(const SymFun &o) { return *this += -o; }

SymFun operator*(const Rational &c, SymFun f)
{
    if (c == 0)
        return SymFun(f.N_);
    for (auto &[lambda, v] : f.terms_)
        v *= c;
    return f;
}

SymFun mul(const SymFun &f, const SymFun &g, int N)
{
    SymFun out(N);
    for (const auto &[a, ca] : f.terms()) {
        const int da = degree(a);
        if (da > N)
            continue;
        for (const auto &[b, cb] : g.terms()) {
            if (da + degree(b) > N)
                continue;
            Partition merged(a.size() + b.size());
            std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin(), std::greater<>());
            out.add(std::move(merged), ca * cb);
        }
    }
    return out;
}

SymFun operator*(const SymFun &f, const SymFun &g) { return mul(f, g, std::min(f.truncation(), g.truncation())); }

SymFun derivative_p1(const SymFun &f)
{
    SymFun out(f.truncation());
    for (const auto &[lambda, c] : f.terms()) {
        const auto ones = std::count(lambda.begin(), lambda.end(), 1);
        if (ones == 0)
            continue;
        Partition rest = lambda;
        rest.pop_back(); // parts are descending, so a 1 sits last
        out.add(std::move(rest), c * ones);
    }
    return out;
}

SymFun adams(const SymFun &g, int k, int N)
{
    SymFun out(N);
    for (const auto &[lambda, c] : g.terms()) {
        Partition scaled = lambda;
        for (int &part : scaled)
            part *= k;
        out.add(std::move(scaled), c);
    }
    return out;
}

SymFun plethysm(const SymFun &f, const SymFun &g, int N)
{
    if (g.coeff({}) != 0)
        throw std::invalid_argument("plethysm: inner function has a constant term");
    const int low = std::max(g.min_degree(), 1);
    std::map<int, SymFun> adams_cache;
    auto pk = [&](int k) -> const SymFun & {
        auto it = adams_cache.find(k);
        if (it == adams_cache.end())
            it = adams_cache.emplace(k, adams(g, k, N)).first;
        return it->second;
    };
    // products of p_k ∘ g over partition prefixes
    std::map<Partition, SymFun> prefix;
    prefix.emplace(Partition{}, SymFun::constant(1, N));
    std::function<const SymFun &(const Partition &)> power = [&](const Partition &lambda) -> const SymFun & {
        auto it = prefix.find(lambda);
        if (it != prefix.end())
            return it->second;
        Partition head(lambda.begin(), lambda.end() - 1);
        SymFun value = mul(power(head), pk(lambda.back()), N);
        return prefix.emplace(lambda, std::move(value)).first->second;
    };
    SymFun out(N);
    for (const auto &[lambda, c] : f.terms()) {
        if (low * degree(lambda) > N)
            continue;
        if (g.is_zero() && !lambda.empty())
            continue;
        out += c * power(lambda);
    }
    return out;
}

SymFun suspend(const SymFun &f)
{
    SymFun out(f.truncation());
    for (const auto &[lambda, c] : f.terms())
        out.add(lambda, lambda.size() % 2 == 0 ? Rational(-c) : c);
    return out;
}

SymFun omega(const SymFun &f)
{
    SymFun out(f.truncation());
    for (const auto &[lambda, c] : f.terms()) {
        const auto even_parts = std::count_if(lambda.begin(), lambda.end(), [](int p) { return p % 2 == 0; });
        out.add(lambda, even_parts % 2 == 0 ? c : Rational(-c));
    }
    return out;
}

namespace {

Partition repeated(int part, long count) { return Partition(static_cast<std::size_t>(count), part); }

} // namespace

SymFun ch_w(int N)
{
    SymFun out(N);
    for (long n = 1; 2 * n <= N; ++n)
        for (long j : divisors(2 * n)) {
            const long k = 2 * n / j;
            out.add(repeated(static_cast<int>(k), j), Rational(sign_pow(j * (n - 1)) * euler_phi(k), 2 * n));
        }
    return out;
}

SymFun ch_v(int N)
{
    SymFun out(N);
    for (long n = 1; 2 * n <= N; ++n) {
        out.add(repeated(1, 2 * n), Rational(sign_pow(n - 1) * catalan(n - 1)));
        for (long j : divisors(2 * n)) {
            const Rational c = Rational(lambda_seq(2 * n / j) * euler_phi(j) * sign_pow(2 * n * (n - 1) / j)) / (2 * n);
            out.add(repeated(static_cast<int>(j), 2 * n / j), c);
        }
    }
    return out;
}

SymFun legendre_dual_series(int N)
{
    SymFun out(N);
    for (long n = 1; 2 * n <= N; ++n)
        for (long j : divisors(2 * n))
            out.add(repeated(static_cast<int>(j), 2 * n / j), Rational(sign_pow(2 * n * n / j) * euler_phi(j), 2 * n));
    return out;
}

ClassFunction ClassFunction::trivial(std::size_t n) { return sign_character(n, 1); }

ClassFunction ClassFunction::sign_character(std::size_t n, int s)
{
    if (n == 0)
        throw std::invalid_argument("ClassFunction: group order must be positive");
    ClassFunction chi{n, {}};
    for (std::size_t i = 0; i < n; ++i)
        chi.values.emplace_back(s == 1 || i % 2 == 0 ? 1 : -1);
    return chi;
}

ClassFunction ClassFunction::twisted() const
{
    ClassFunction out = *this;
    for (std::size_t i = 1; i < n; i += 2)
        out.values[i] = -out.values[i];
    return out;
}

SymFun induce_cyclic(const ClassFunction &chi)
{
    if (chi.values.size() != chi.n || chi.n == 0)
        throw std::invalid_argument("induce_cyclic: class function length differs from the group order");
    const long n = static_cast<long>(chi.n);
    SymFun out(static_cast<int>(n));
    for (long j : divisors(n)) {
        const long order = n / j;
        Rational sum = 0;
        for (long i = 1; i <= order; ++i)
            if (std::gcd(i, order) == 1)
                sum += chi.values[static_cast<std::size_t>((j * i) % n)];
        out.add(repeated(static_cast<int>(order), j), sum / n);
    }
    return out;
}

SymFun induced_module_char(long n, long d)
{
    if (n <= 0 || d <= 0 || n % d != 0)
        throw std::invalid_argument("induced_module_char: " + std::to_string(d) + " does not divide " + std::to_string(n));
    SymFun out(static_cast<int>(n));
    for (long l : divisors(n / d))
        out.add(repeated(static_cast<int>(l), n / l), Rational(d * euler_phi(l), n));
    return out;
}

SymFun plethystic_inverse(const SymFun &F, int N)
{
    if (F.coeff({}) != 0)
        throw std::invalid_argument("plethystic_inverse: constant term present");
    const Rational a = F.coeff({1});
    if (a == 0)
        throw std::invalid_argument("plethystic_inverse: no p_1 term");
    SymFun G = SymFun::monomial({1}, 1 / a, N);
    const SymFun p1 = SymFun::p(1, N);
    for (int d = 2; d <= N; ++d) {
        // F∘(G + delta) = F∘G + a delta in degree d
        const SymFun error = (plethysm(F, G.truncate(d), d) - p1.truncate(d)).degree_part(d).truncate(N);
        G -= (1 / a) * error;
    }
    return G;
}

SymFun legendre_transform(const SymFun &B, int N)
{
    for (const auto &[lambda, c] : B.terms())
        if (degree(lambda) <= 1)
            throw std::invalid_argument("legendre_transform: terms of degree <= 1 present");
    const SymFun F = derivative_p1(B.truncate(N + 1));
    if (F.coeff({1}) == 0)
        throw std::invalid_argument("legendre_transform: derivative has no p_1 term");
    const SymFun G = plethystic_inverse(F, N);
    const SymFun inner = mul(SymFun::p(1, N), F, N) - B.truncate(N);
    return plethysm(inner, G, N);
}

namespace {

using Series = std::vector<Rational>;

Series series_mul(const Series &a, const Series &b)
{
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t k = 0; i + k < a.size(); ++k)
                out[i + k] += a[i] * b[k];
    return out;
}

} // namespace

bool series_identity_check(int j, int N)
{
    if (j < 1 || N < 0)
        throw std::invalid_argument("series_identity_check: need j >= 1 and N >= 0");
    const auto len = static_cast<std::size_t>(N) + 1;
    Series lhs(len, 0), rhs(len, 0);
    Series y(len, 0); // x / (1 - x^2)
    for (std::size_t k = 1; k < len; k += 2)
        y[k] = 1;
    Series y_pow(len, 0);
    y_pow[0] = 1;
    // K = 2n/j ranges over K >= 1 with jK even; y^K has valuation K.
    for (long K = 1; K <= N; ++K) {
        y_pow = series_mul(y_pow, y);
        if ((j * K) % 2 != 0)
            continue;
        const long n = j * K / 2;
        const Rational w(1, K); // j / (2n)
        lhs[static_cast<std::size_t>(K)] -= w * sign_pow(2 * n * n / j);
        const Rational scale = w * Rational(lambda_seq(K)) * sign_pow(2 * n * (n - 1) / j);
        for (std::size_t i = 0; i < len; ++i)
            rhs[i] += scale * y_pow[i];
    }
    return lhs == rhs;
}

bool involution_square_check(const ClassFunction &chi)
{
    return omega(induce_cyclic(chi)) == induce_cyclic(chi.twisted());
}

SymFun coxeter_action_char(long n, const SymFun &chv)
{
    const long m = 2 * n + 2;
    if (chv.truncation() < m)
        throw std::invalid_argument("coxeter_action_char: series truncated below degree " + std::to_string(m));
    SymFun part = Rational(sign_pow(n)) * chv.degree_part(static_cast<int>(m)).truncate(static_cast<int>(m));
    if (n % 2 == 1)
        part = omega(part);
    return part;
}

SymFun virtual_module_char(long n)
{
    const long m = 2 * n + 2;
    SymFun out = Rational(catalan(n)) * induced_module_char(m, m);
    for (long d : divisors(m))
        out -= Rational(sign_pow(n + 1) * b_seq(d)) * induced_module_char(m, d);
    return out;
}

std::map<long, BigInt> cyclic_module_decomposition(const SymFun &chi, long m)
{
    // M'_{m,d} is the only module among those with d' | d that reaches p_{m/d}^d
    // with d' = d; solve for d ascending.
    std::map<long, Rational> coeffs;
    SymFun rest = chi;
    for (long d : divisors(m)) {
        const Partition key = repeated(static_cast<int>(m / d), d);
        const SymFun module = induced_module_char(m, d);
        const Rational e = rest.coeff(key) / module.coeff(key);
        coeffs[d] = e;
        rest -= e * module;
    }
    if (!rest.is_zero())
        throw std::invalid_argument("cyclic_module_decomposition: not a combination of cyclic modules: " +
                                    rest.to_string());
    std::map<long, BigInt> out;
    for (const auto &[d, e] : coeffs) {
        if (denominator(e) != 1)
            throw std::invalid_argument("cyclic_module_decomposition: non-integral multiplicity " + e.str());
        if (e != 0)
            out[d] = numerator(e);
    }
    return out;
}

} // namespace ternop
