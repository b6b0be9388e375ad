#include <doctest.h>
#include <set>

#include "ternop/trees.hpp"

using namespace ternop;

namespace {

// Catalan numbers from the convolution recurrence, independent of the library.
std::vector<std::size_t> catalan_table(std::size_t n)
{
    std::vector<std::size_t> c{1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < k; ++i)
            s += c[i] * c[k - 1 - i];
        c.push_back(s);
    }
    return c;
}

std::vector<BinaryTree> all_up_to(std::size_t n)
{
    std::vector<BinaryTree> out;
    for (std::size_t k = 0; k <= n; ++k)
        out.insert(out.end(), enumerate(k).begin(), enumerate(k).end());
    return out;
}

} // namespace

TEST_CASE("enumerate sizes match Catalan numbers")
{
    const auto c = catalan_table(12);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(enumerate(n).size() == c[n]);
        CHECK(catalan_count(n) == c[n]);
    }
}

TEST_CASE("enumerate small cases")
{
    REQUIRE(enumerate(0).size() == 1);
    CHECK(enumerate(0)[0].is_leaf());
    CHECK(enumerate(3).size() == 5);
    REQUIRE(enumerate(2).size() == 2);
    CHECK(serialize(enumerate(2)[0]) == "((..).)");
    CHECK(serialize(enumerate(2)[1]) == "(.(..))");
}

TEST_CASE("enumerate lists distinct trees of the right size, combs at the ends")
{
    for (std::size_t n = 0; n <= 7; ++n) {
        const auto &trees = enumerate(n);
        std::set<std::string> seen;
        for (const auto &t : trees) {
            CHECK(t.size() == n);
            seen.insert(serialize(t));
        }
        CHECK(seen.size() == trees.size());
        CHECK(trees.front() == BinaryTree::left_comb(n));
        CHECK(trees.back() == BinaryTree::right_comb(n));
        for (std::size_t i = 1; i < trees.size(); ++i)
            CHECK(trees[i - 1] < trees[i]);
    }
}

TEST_CASE("enumerate refuses sizes beyond the bound")
{
    CHECK_THROWS_AS(enumerate(16), std::length_error);
}

TEST_CASE("rank and unrank are inverse")
{
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto &trees = enumerate(n);
        for (std::size_t r = 0; r < trees.size(); ++r) {
            CHECK(rank(trees[r]) == r);
            CHECK(unrank(n, r) == trees[r]);
        }
    }
    CHECK_THROWS_AS(unrank(3, 5), std::out_of_range);
}

TEST_CASE("grafting examples")
{
    const auto dot = parse_tree("(..)");
    const auto leaf = BinaryTree::leaf();
    CHECK(serialize(graft_over(dot, dot)) == "((..).)");
    CHECK(serialize(graft_under(dot, dot)) == "(.(..))");
    CHECK(graft_over(graft_over(dot, dot), dot) == BinaryTree::node(graft_over(dot, dot), leaf));
    CHECK(graft_under(graft_over(dot, dot), dot) == graft_over(dot, graft_under(dot, dot)));
    for (const auto &y : all_up_to(4)) {
        CHECK(graft_over(leaf, y) == y);
        CHECK(graft_over(y, leaf) == y);
        CHECK(graft_under(y, leaf) == y);
        CHECK(graft_under(leaf, y) == y);
        CHECK(graft_over(y, dot) == BinaryTree::node(y, leaf));
    }
}

TEST_CASE("over/under mixed associativity for nontrivial middle tree")
{
    const auto trees = all_up_to(4);
    for (const auto &x : trees)
        for (const auto &y : trees) {
            if (y.is_leaf())
                continue;
            for (const auto &z : trees) {
                CHECK(graft_under(graft_over(x, y), z) == graft_over(x, graft_under(y, z)));
                CHECK(graft_over(x, y).size() == x.size() + y.size());
                CHECK(graft_under(x, y).size() == x.size() + y.size());
            }
        }
}

TEST_CASE("mixed associativity fails when the middle tree is the leaf")
{
    // (x∕|)\z = x\z while x∕(|\z) = x∕z
    const auto dot = parse_tree("(..)");
    CHECK(graft_under(graft_over(dot, BinaryTree::leaf()), dot) != graft_over(dot, graft_under(BinaryTree::leaf(), dot)));
}

TEST_CASE("decompose")
{
    CHECK_FALSE(decompose(BinaryTree::leaf()).has_value());
    auto d = decompose(parse_tree("((..).)"));
    REQUIRE(d.has_value());
    CHECK(serialize(d->first) == "(..)");
    CHECK(serialize(d->second) == ".");
    d = decompose(parse_tree("(.(..))"));
    REQUIRE(d.has_value());
    CHECK(serialize(d->first) == ".");
    CHECK(serialize(d->second) == "(..)");
    for (const auto &t : all_up_to(5))
        if (auto p = decompose(t))
            CHECK(BinaryTree::node(p->first, p->second) == t);
}

TEST_CASE("serialize and parse")
{
    CHECK(serialize(BinaryTree::leaf()) == ".");
    CHECK(parse_tree("((..).)") == BinaryTree::node(BinaryTree::node({}, {}), {}));
    for (const auto &t : all_up_to(6))
        CHECK(parse_tree(serialize(t)) == t);
    for (const auto &s : {"((..).)", "(.(.(..)))", "."})
        CHECK(serialize(parse_tree(s)) == s);
}

TEST_CASE("parse errors report the offset")
{
    try {
        parse_tree("((.)");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_tree(""), ParseError);
    CHECK_THROWS_AS(parse_tree("(..)."), ParseError);
    CHECK_THROWS_AS(parse_tree("(.x)"), ParseError);
}

TEST_CASE("mirror is an involution and swaps the combs")
{
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(mirror(BinaryTree::left_comb(n)) == BinaryTree::right_comb(n));
        for (const auto &t : enumerate(n))
            CHECK(mirror(mirror(t)) == t);
    }
}

TEST_CASE("hash agrees with equality")
{
    const auto a = parse_tree("((..)(..))");
    const auto b = BinaryTree::node(parse_tree("(..)"), parse_tree("(..)"));
    CHECK(a == b);
    CHECK(std::hash<BinaryTree>{}(a) == std::hash<BinaryTree>{}(b));
}
