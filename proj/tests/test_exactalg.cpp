#include <doctest.h>

#include <random>

#include "ternop/exactalg.hpp"
#include "ternop/sequences.hpp"

using namespace ternop;

namespace {

// det(xI - M) by cofactor expansion along the first row, over polynomials.
IntPolynomial cofactor_charpoly(const std::vector<std::vector<IntPolynomial>> &a)
{
    const std::size_t d = a.size();
    if (d == 0)
        return IntPolynomial{1};
    if (d == 1)
        return a[0][0];
    IntPolynomial total;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<IntPolynomial>> minor;
        for (std::size_t r = 1; r < d; ++r) {
            std::vector<IntPolynomial> row;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j)
                    row.push_back(a[r][c]);
            minor.push_back(row);
        }
        const auto term = a[0][j] * cofactor_charpoly(minor);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

IntPolynomial oracle(const IntMatrix &m)
{
    std::vector<std::vector<IntPolynomial>> a(m.rows(), std::vector<IntPolynomial>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = (i == j ? IntPolynomial{0, 1} : IntPolynomial{}) - IntPolynomial::constant(m(i, j));
    return cofactor_charpoly(a);
}

} // namespace

TEST_CASE("charpoly examples")
{
    CHECK(charpoly(IntMatrix{{-1}}) == IntPolynomial{1, 1});
    CHECK(charpoly(IntMatrix{{0, 1}, {-1, -1}}) == IntPolynomial{1, 1, 1});
    for (std::size_t k = 1; k <= 5; ++k)
        CHECK(charpoly(IntMatrix::identity(k)) == IntPolynomial{-1, 1}.pow(k));
}

TEST_CASE("charpoly matches cofactor expansion on random matrices")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
    for (int s = 0; s < 100; ++s) {
        const std::size_t d = dim(rng);
        IntMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) = entry(rng);
        const auto p = oracle(m);
        CHECK(charpoly(m) == p);
        CHECK(determinant(m) == (d % 2 ? -p.coeff(0) : p.coeff(0)));
    }
}

TEST_CASE("charpoly handles large entries")
{
    IntMatrix m{{1, 0}, {0, 1}};
    m(0, 1) = BigInt("123456789012345678901234567890");
    m(1, 0) = BigInt("-98765432109876543210");
    CHECK(charpoly(m) == oracle(m));
}

TEST_CASE("exact division")
{
    CHECK(exact_div(IntPolynomial{-1, 0, 0, 0, 1}, IntPolynomial{-1, 0, 1}) == IntPolynomial{1, 0, 1});
    CHECK(exact_div(IntPolynomial{-1, 0, 0, 0, 0, 0, 1}, IntPolynomial{-1, 1} * IntPolynomial{1, 0, 0, 1}) ==
          IntPolynomial{1, 1, 1});
    CHECK_THROWS_AS(exact_div(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), InexactDivision);
    CHECK_THROWS_AS(exact_div(IntPolynomial{1}, IntPolynomial{}), std::domain_error);
}

TEST_CASE("polynomial substitution")
{
    CHECK(IntPolynomial{1, 2, 3}.negate_variable() == IntPolynomial{1, -2, 3});
    CHECK(substitute_sign(IntPolynomial{1, 1}, -1) == IntPolynomial{-1, 1});
    CHECK(substitute_sign(IntPolynomial{1, 1, 1}, -1) == IntPolynomial{1, -1, 1});
    CHECK(substitute_sign(IntPolynomial{1, 1, 1}, 1) == IntPolynomial{1, 1, 1});
}

TEST_CASE("closed charpoly")
{
    const auto e1 = presubstitution_exponents(1);
    CHECK(e1.at(1) == -1);
    CHECK(e1.at(2) == 1);
    CHECK((!e1.count(4) || e1.at(4) == 0));
    CHECK(closed_charpoly(1) == IntPolynomial{1, 1});
    CHECK(closed_charpoly(2) == IntPolynomial{1, 1, 1});
    for (long n = 1; n <= 7; ++n) {
        const auto p = closed_charpoly(n);
        CHECK(p.degree() == catalan(n));
        CHECK(p.leading() == 1);
        CHECK(abs(p.coeff(0)) == 1);
        CHECK(p == closed_charpoly_direct(n));
        CHECK(p == substitute_sign(closed_charpoly_presubstitution(n), sign_pow(n + 1)));
    }
    CHECK_THROWS_AS(closed_charpoly(0), std::invalid_argument);
}

TEST_CASE("arithmetic sequences")
{
    const long ns[] = {1, 2, 3, 4, 6};
    const long lambdas[] = {1, -1, -2, 3, -10};
    const long bs[] = {1, -1, -1, 1, -1};
    for (int i = 0; i < 5; ++i) {
        CHECK(lambda_seq(ns[i]) == lambdas[i]);
        CHECK(b_seq(ns[i]) == bs[i]);
    }
    for (long n = 1; n <= 24; ++n) {
        BigInt s = 0;
        for (long d : divisors(n))
            s += d * b_seq(d);
        CHECK(s == lambda_seq(n));
    }
    CHECK(catalan(7) == 429);
    CHECK(euler_phi(12) == 4);
    CHECK(mobius_mu(30) == -1);
    CHECK(mobius_mu(12) == 0);
}
