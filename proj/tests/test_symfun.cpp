#include <doctest.h>

#include <random>

#include "ternop/sequences.hpp"
#include "ternop/symfun.hpp"

using namespace ternop;

namespace {

constexpr int N = 12;

SymFun pl(Partition lambda, Rational c = 1, int n = N) { return SymFun::monomial(std::move(lambda), c, n); }

SymFun random_symfun(std::mt19937_64 &rng, int max_deg, int n)
{
    std::uniform_int_distribution<int> c(-3, 3);
    SymFun f(n);
    const std::vector<Partition> parts{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (const auto &p : parts)
        if (degree(p) <= max_deg)
            f.add(p, Rational(c(rng), 1 + (c(rng) + 3) % 3));
    return f;
}

ClassFunction random_class_function(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_int_distribution<int> c(-5, 5);
    ClassFunction chi{n, {}};
    for (std::size_t i = 0; i < n; ++i)
        chi.values.push_back(Rational(c(rng), 1 + (c(rng) + 5) % 4));
    return chi;
}

} // namespace

TEST_CASE("arithmetic")
{
    CHECK(derivative_p1(pl({1, 1})) == pl({1}, 2));
    CHECK(mul(SymFun::p(1, 3), SymFun::p(2, 3), 3) == pl({2, 1}, 1, 3));
    CHECK(mul(SymFun::p(2, 3), SymFun::p(2, 3), 3).is_zero());
    auto f = pl({1}) - pl({1});
    CHECK(f.is_zero());
    CHECK(pl({1, 2}) == pl({2, 1}));
    CHECK(pl({2, 2}).min_degree() == 4);
}

TEST_CASE("plethysm")
{
    std::mt19937_64 rng(7);
    const auto g = random_symfun(rng, 3, 6);
    CHECK(plethysm(SymFun::p(1, 6), g, 6) == g);
    CHECK(plethysm(SymFun::p(2, 6), pl({1, 1}, 1, 6), 6) == pl({2, 2}, 1, 6));
    const auto h = SymFun::p(1, 4) + SymFun::p(2, 4);
    CHECK(plethysm(pl({1, 1}, 1, 4), h, 4) == pl({1, 1}, 1, 4) + pl({2, 1}, 2, 4) + pl({2, 2}, 1, 4));
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
            CHECK(plethysm(SymFun::p(k, 9), SymFun::p(l, 9), 9) == SymFun::p(k * l, 9));
    CHECK_THROWS_AS(plethysm(SymFun::p(1, 4), SymFun::constant(1, 4), 4), std::invalid_argument);

    for (int s = 0; s < 10; ++s) {
        const auto a = random_symfun(rng, 3, 6), b = random_symfun(rng, 2, 6), c = random_symfun(rng, 2, 6);
        CHECK(plethysm(a, plethysm(b, c, 6), 6) == plethysm(plethysm(a, b, 6), c, 6));
    }
}

TEST_CASE("suspension and omega")
{
    CHECK(suspend(SymFun::p(2, N)) == SymFun::p(2, N));
    CHECK(suspend(SymFun::p(1, N)) == SymFun::p(1, N));
    CHECK(suspend(pl({1, 1})) == -pl({1, 1}));
    CHECK(omega(SymFun::p(2, N)) == -SymFun::p(2, N));
    CHECK(omega(SymFun::p(1, N)) == SymFun::p(1, N));
    std::mt19937_64 rng(11);
    for (int s = 0; s < 5; ++s) {
        const auto f = random_symfun(rng, 3, N);
        CHECK(omega(omega(f)) == f);
        CHECK(suspend(suspend(f)) == f);
    }
}

TEST_CASE("characteristic series low degrees")
{
    const Rational half(1, 2), quarter(1, 4);
    CHECK(ch_w(N).degree_part(2) == half * (pl({1, 1}) + pl({2})));
    CHECK(ch_w(N).degree_part(4) == quarter * (pl({1, 1, 1, 1}) + pl({2, 2}) - pl({4}, 2)));
    CHECK(ch_v(N).degree_part(2) == half * (pl({1, 1}) + pl({2})));
    CHECK(-suspend(ch_w(N)) == legendre_dual_series(N));
}

TEST_CASE("p1 derivative of ch_v")
{
    const auto chv = ch_v(N);
    SymFun first(N), derivative(N);
    for (long n = 1; 2 * n <= N; ++n) {
        const Rational c = sign_pow(n - 1) * Rational(catalan(n - 1));
        first.add(Partition(2 * n, 1), c);
        derivative.add(Partition(2 * n - 1, 1), c);
    }
    CHECK(derivative_p1(chv) == derivative);
    CHECK(mul(SymFun::p(1, N), derivative_p1(chv), N) == first);
}

TEST_CASE("cyclic induction")
{
    CHECK(induce_cyclic(ClassFunction::trivial(2)) == Rational(1, 2) * (pl({1, 1}) + pl({2})));

    SymFun sum(10);
    for (std::size_t n = 1; 2 * n <= 10; ++n)
        sum += induce_cyclic(ClassFunction::sign_character(2 * n, sign_pow(n - 1))).truncate(10);
    CHECK(sum == ch_w(10));

    std::mt19937_64 rng(5);
    for (std::size_t n : {2u, 4u, 6u}) {
        const auto a = random_class_function(rng, n), b = random_class_function(rng, n);
        ClassFunction combo{n, {}};
        for (std::size_t i = 0; i < n; ++i)
            combo.values.push_back(3 * a.values[i] - b.values[i]);
        CHECK(induce_cyclic(combo) == Rational(3) * induce_cyclic(a) - induce_cyclic(b));
    }
}

TEST_CASE("involution square")
{
    const auto trivial = ClassFunction::trivial(2);
    CHECK(omega(induce_cyclic(trivial)) == Rational(1, 2) * (pl({1, 1}) - pl({2})));
    CHECK(involution_square_check(trivial));
    std::mt19937_64 rng(13);
    for (std::size_t order = 2; order <= 10; order += 2)
        for (int s = 0; s < 20; ++s) {
            const auto chi = random_class_function(rng, order);
            CHECK(involution_square_check(chi));
            CHECK(chi.twisted().twisted() == chi);
        }
}

TEST_CASE("induced module characters")
{
    for (long n = 1; n <= 6; ++n)
        CHECK(induced_module_char(n, n) == SymFun::monomial(Partition(n, 1), 1, std::max<int>(N, n)));
    CHECK(induced_module_char(2, 1) == Rational(1, 2) * (pl({1, 1}) + pl({2})));
    CHECK(induced_module_char(4, 2) == Rational(1, 2) * (pl({1, 1, 1, 1}) + pl({2, 2})));
    CHECK_THROWS_AS(induced_module_char(4, 3), std::invalid_argument);
}

TEST_CASE("legendre transform")
{
    SymFun b(N);
    for (int k = 2; k <= N; k += 2)
        b.add(Partition(k, 1), Rational(1, k));
    SymFun db(N);
    for (int k = 1; k < N; k += 2)
        db.add(Partition(k, 1), 1);
    CHECK(derivative_p1(b) == db);

    CHECK(legendre_transform(-suspend(ch_w(N)), N) == ch_v(N));

    const int M = 10;
    const auto B = -suspend(ch_w(M));
    const auto A = legendre_transform(B, M);
    CHECK(legendre_transform(A, M) == B);
    CHECK(plethysm(derivative_p1(A), derivative_p1(B), M) == SymFun::p(1, M));

    CHECK_THROWS_AS(legendre_transform(SymFun::p(1, N), N), std::invalid_argument);
    CHECK_THROWS_AS(plethystic_inverse(SymFun::p(2, N), N), std::invalid_argument);
}

TEST_CASE("plethystic inverse")
{
    const auto f = SymFun::p(1, 8) + pl({1, 1}, 1, 8) + pl({2}, Rational(1, 3), 8);
    const auto g = plethystic_inverse(f, 8);
    CHECK(plethysm(f, g, 8) == SymFun::p(1, 8));
    CHECK(plethysm(g, f, 8) == SymFun::p(1, 8));
}

TEST_CASE("series identity")
{
    for (int j = 1; j <= 6; ++j)
        CHECK(series_identity_check(j, 24));
}

TEST_CASE("virtual module decomposition")
{
    for (long n = 1; n <= 4; ++n) {
        const auto chi = virtual_module_char(n);
        const auto e = cyclic_module_decomposition(chi, 2 * n + 2);
        SymFun rebuilt(chi.truncation());
        for (const auto &[d, c] : e)
            rebuilt += Rational(c) * induced_module_char(2 * n + 2, d);
        CHECK(rebuilt == chi);
        CHECK(coxeter_action_char(n, ch_v(2 * n + 2)) == chi);
    }
    CHECK_THROWS_AS(cyclic_module_decomposition(SymFun::p(2, 4), 4), std::invalid_argument);
}
