#include <doctest.h>

#include <memory>
#include <random>

#include "ternop/operad.hpp"

using namespace ternop;

namespace {

const OperadConfig V = config_V();
const OperadConfig W = config_W();
const OperadElement g = OperadElement::generator();
const OperadElement one = OperadElement::unit();

OperadElement m(const char *text) { return OperadElement(Monomial::parse(text)); }

// Labelled ternary tree used to compute grafting signs by counting inversions.
struct T {
    int label = -1; // -1 for a leaf
    std::vector<std::shared_ptr<T>> kids;
};

std::shared_ptr<T> build(const std::string &code, std::size_t &pos, int &next)
{
    auto t = std::make_shared<T>();
    if (code[pos++] == '*')
        return t;
    t->label = next++;
    for (int k = 0; k < 3; ++k)
        t->kids.push_back(build(code, pos, next));
    return t;
}

void leaves(const std::shared_ptr<T> &t, std::vector<std::shared_ptr<T>> &out)
{
    if (t->label < 0) {
        out.push_back(t);
        return;
    }
    for (auto &k : t->kids)
        leaves(k, out);
}

void preorder(const std::shared_ptr<T> &t, std::string &code, std::vector<int> &labels)
{
    if (t->label < 0) {
        code += '*';
        return;
    }
    code += 'm';
    labels.push_back(t->label);
    for (auto &k : t->kids)
        preorder(k, code, labels);
}

// Grafts b into leaf i of a; returns the code and the parity of the label permutation.
std::pair<std::string, int> graft_with_sign(const std::string &a, std::size_t i, const std::string &b)
{
    std::size_t pos = 0;
    int next = 0;
    auto ta = build(a, pos, next);
    pos = 0;
    auto tb = build(b, pos, next);
    std::vector<std::shared_ptr<T>> ls;
    leaves(ta, ls);
    *ls[i - 1] = *tb;
    std::string code;
    std::vector<int> labels;
    preorder(ta, code, labels);
    int inversions = 0;
    for (std::size_t x = 0; x < labels.size(); ++x)
        for (std::size_t y = x + 1; y < labels.size(); ++y)
            inversions += labels[x] > labels[y];
    return {code, inversions % 2 ? -1 : 1};
}

} // namespace

TEST_CASE("monomial text formats")
{
    const auto t = Monomial::parse("m[*,*,m[*,*,*]]");
    CHECK(t.code() == "m**m***");
    CHECK(t.to_string() == "m[*,*,m[*,*,*]]");
    CHECK(t.vertices() == 2);
    CHECK(t.arity() == 5);
    CHECK(Monomial::unit().to_string() == "*");
    CHECK_THROWS_AS(Monomial::parse("m[*,*]"), ParseError);
    CHECK_THROWS_AS(Monomial::from_code("m**"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::from_code("m***x"), std::invalid_argument);
}

TEST_CASE("element arithmetic never stores zeros")
{
    auto e = g + g;
    CHECK(e.coeff(Monomial::generator()) == 2);
    e -= BigInt(2) * g;
    CHECK(e.is_zero());
    CHECK_THROWS_AS(g + one, std::invalid_argument);
}

TEST_CASE("composition units and range")
{
    for (const auto &a : all_monomials(2)) {
        const OperadElement e(a);
        CHECK(compose(one, 1, e, V) == e);
        for (std::size_t i = 1; i <= e.arity(); ++i)
            CHECK(compose(e, i, one, V) == e);
    }
    CHECK_THROWS_AS(compose(g, 0, g, V), std::out_of_range);
    CHECK_THROWS_AS(compose(g, 4, g, V), std::out_of_range);
}

TEST_CASE("composition sign is the parity of the vertex reordering")
{
    for (std::size_t ka = 1; ka <= 3; ++ka)
        for (const auto &a : all_monomials(ka))
            for (std::size_t kb = 0; kb <= 2; ++kb)
                for (const auto &b : all_monomials(kb))
                    for (std::size_t i = 1; i <= a.arity(); ++i) {
                        const auto [code, sign] = graft_with_sign(a.code(), i, b.code());
                        const auto mono = Monomial::from_code(code);
                        CHECK(compose(OperadElement(a), i, OperadElement(b), V) == OperadElement(mono, sign));
                        CHECK(compose(OperadElement(a), i, OperadElement(b), W) == OperadElement(mono, 1));
                    }
}

TEST_CASE("displayed composition instances")
{
    CHECK(compose(compose(g, 1, g, V), 4, g, V) == -compose(compose(g, 2, g, V), 1, g, V));
    CHECK(compose(compose(g, 1, g, W), 4, g, W) == compose(compose(g, 2, g, W), 1, g, W));
    CHECK(compose(g, 3, g, V) == m("m[*,*,m[*,*,*]]"));
}

TEST_CASE("normal forms")
{
    CHECK(normal_form(compose(g, 2, g, V), V) == compose(g, 1, g, V) + compose(g, 3, g, V));
    const auto lhs = normal_form(compose(compose(g, 2, g, V), 3, g, V), V);
    CHECK(lhs == compose(g, 1, compose(g, 3, g, V), V) + compose(g, 3, compose(g, 1, g, V), V));
    CHECK(normal_form(compose(g, 2, g, W), W) == -compose(g, 1, g, W));
    CHECK(normal_form(compose(g, 3, g, W), W) == compose(g, 1, g, W));

    const auto w3 = compose(compose(g, 1, g, W), 1, g, W);
    for (const auto &t : all_monomials(3)) {
        const auto r = normal_form(OperadElement(t), W);
        CHECK((r == w3 || r == -w3));
    }
}

TEST_CASE("rewrite steps lower the termination measure")
{
    for (const OperadConfig &c : {V, W})
        for (std::size_t k = 2; k <= 4; ++k)
            for (const auto &t : all_monomials(k)) {
                const auto mu = termination_measure(t, c);
                for (auto pos : redexes(t, c)) {
                    const auto step = rewrite_at(t, pos, c);
                    for (const auto &[u, coeff] : step.terms())
                        CHECK(termination_measure(u, c) < mu);
                }
            }
    CHECK_THROWS_AS(rewrite_at(Monomial::parse("m[m[*,*,*],*,*]"), 0, V), std::invalid_argument);
}

TEST_CASE("reduction strategies agree")
{
    std::mt19937_64 rng(3);
    for (std::size_t k = 2; k <= 4; ++k)
        for (const auto &t : all_monomials(k)) {
            const OperadElement e(t);
            ReductionOptions random{Strategy::Random, &rng, nullptr, true};
            ReductionOptions right{Strategy::Rightmost, nullptr, nullptr, true};
            const auto base = normal_form(e, V);
            CHECK(normal_form(e, V, random) == base);
            CHECK(normal_form(e, V, right) == base);
            CHECK(is_normal(base, V));
        }
    CHECK_THROWS_AS(normal_form(g, V, ReductionOptions{Strategy::Random, nullptr, nullptr, false}), std::invalid_argument);
}

TEST_CASE("normal monomials are counted by Catalan numbers")
{
    const std::size_t expected[] = {1, 1, 2, 5, 14, 42, 132};
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(normal_monomials(n, V).size() == expected[n]);
        CHECK(normal_monomials(n, W).size() == 1);
    }
}

TEST_CASE("critical pair")
{
    const auto r = critical_pair_check();
    CHECK(r.agree);
    CHECK(r.left_trace.size() == 1);
    CHECK(r.right_trace.size() == 7);
    CHECK(r.overlap == Monomial::parse("m[*,m[*,m[*,*,*],*],*]"));
    CHECK(r.right_trace.back().result == r.expected);
}

TEST_CASE("Q basis")
{
    CHECK(q_element(parse_tree("(..)")) == g);
    CHECK(q_element(BinaryTree::leaf()) == one);
    CHECK(q_element(parse_tree("((..)((..).))")) == compose(compose(g, 3, compose(g, 1, g, V), V), 1, g, V));
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto &x : enumerate(n)) {
            const auto q = q_element(x);
            REQUIRE(q.terms().size() == 1);
            const auto &[mono, c] = *q.terms().begin();
            CHECK(abs(c) == 1);
            CHECK(is_normal(mono, V));
            CHECK(shape_of(mono) == x);
        }
    CHECK_THROWS_AS(shape_of(Monomial::parse("m[*,m[*,*,*],*]")), std::invalid_argument);
}

TEST_CASE("psi")
{
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto &x : enumerate(n)) {
            CHECK(psi(q_element(x)) == K0Vector::unit(Basis::P, x));
            CHECK(psi_inverse(K0Vector::unit(Basis::P, x)) == q_element(x));
        }
    CHECK(psi(OperadElement(5)).is_zero());
    const auto two = parse_tree("((..).)");
    const auto q = q_element(two);
    CHECK(psi(-q) == -K0Vector::unit(Basis::P, two));
    CHECK_THROWS_AS(psi(compose(g, 2, g, V)), std::invalid_argument);
}

TEST_CASE("cyclic transport")
{
    CHECK(cyclic_transport(g, V) == -g);
    CHECK(cyclic_transport(one, V) == -one);
    CHECK(cyclic_transport(g, config_V_cyclic()) == g);
    CHECK(cyclic_transport(one, W) == one);

    OperadElement w = g;
    for (long n = 1; n <= 5; ++n) {
        CHECK(cyclic_transport(w, W) == BigInt(sign_pow(n)) * w);
        w = compose(w, 1, g, W);
    }

    const auto rel = compose(g, 1, g, V) - compose(g, 2, g, V) + compose(g, 3, g, V);
    const auto image = cyclic_transport_free(rel, V);
    CHECK((image == rel || image == -rel));

    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto &t : normal_monomials(n, V)) {
            OperadElement e(t);
            for (std::size_t k = 0; k < 2 * n + 2; ++k)
                e = cyclic_transport(e, V);
            CHECK(e == OperadElement(t));
            CHECK(cyclic_transport(OperadElement(t), config_V_cyclic()) == -cyclic_transport(OperadElement(t), V));
        }
}
