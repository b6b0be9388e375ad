#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <functional>
#include <set>

#include "ternop/tamari.hpp"

using namespace ternop;

namespace {

// Everything reachable from y by repeated rotations, found by graph search.
std::set<std::string> below(const BinaryTree &y)
{
    std::set<std::string> seen{serialize(y)};
    std::vector<BinaryTree> stack{y};
    while (!stack.empty()) {
        const auto t = stack.back();
        stack.pop_back();
        for (const auto &s : lower_covers(t))
            if (seen.insert(serialize(s)).second)
                stack.push_back(s);
    }
    return seen;
}

std::vector<std::string> strings(const std::vector<BinaryTree> &ts)
{
    std::vector<std::string> out;
    for (const auto &t : ts)
        out.push_back(serialize(t));
    return out;
}

} // namespace

TEST_CASE("lower covers examples")
{
    CHECK(lower_covers(BinaryTree::leaf()).empty());
    CHECK(strings(lower_covers(parse_tree("(.(..))"))) == std::vector<std::string>{"((..).)"});
    CHECK(strings(lower_covers(parse_tree("(.(.(..)))"))) == std::vector<std::string>{"((..)(..))", "(.((..).))"});
}

TEST_CASE("leq examples")
{
    const auto a = parse_tree("((..)(..))"), b = parse_tree("((.(..)).)");
    CHECK(tamari_leq(a, a));
    CHECK_FALSE(tamari_leq(a, b));
    CHECK_FALSE(tamari_leq(b, a));
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto &t : enumerate(n))
            CHECK(tamari_leq(BinaryTree::left_comb(n), t));
    CHECK_THROWS_AS(tamari_leq(parse_tree("(..)"), parse_tree("((..).)")), std::invalid_argument);
}

TEST_CASE("leq matches a reachability search")
{
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto &poset = tamari_poset(n);
        for (std::size_t j = 0; j < poset.size(); ++j) {
            const auto reach = below(poset.element(j));
            for (std::size_t i = 0; i < poset.size(); ++i)
                CHECK(poset.leq(i, j) == (reach.count(serialize(poset.element(i))) == 1));
        }
    }
}

TEST_CASE("small posets")
{
    const auto &p0 = tamari_poset(0);
    CHECK(p0.size() == 1);
    CHECK(p0.zeta() == IntMatrix{{1}});

    const auto &p2 = tamari_poset(2);
    REQUIRE(p2.covers().size() == 1);
    CHECK(p2.covers()[0] == TamariPoset::Edge{1, 0});
    CHECK(p2.zeta() == IntMatrix{{1, 0}, {1, 1}});

    const auto &p3 = tamari_poset(3);
    CHECK(p3.size() == 5);
    CHECK(p3.covers().size() == 5);
    // maximal chains from the maximum down to the minimum have 2 and 3 edges
    std::set<std::size_t> lengths;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t len) {
        if (v == p3.minimum()) {
            lengths.insert(len);
            return;
        }
        for (auto w : p3.lower_covers_of(v))
            walk(w, len + 1);
    };
    walk(p3.maximum(), 0);
    CHECK(lengths == std::set<std::size_t>{2, 3});
}

TEST_CASE("order axioms, extremes and zeta * mobius = id")
{
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto &p = tamari_poset(n);
        const auto sz = p.size();
        if (n <= 5)
            for (std::size_t a = 0; a < sz; ++a)
                for (std::size_t b = 0; b < sz; ++b) {
                    if (a != b)
                        CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
                    for (std::size_t c = 0; c < sz; ++c)
                        if (p.leq(a, b) && p.leq(b, c))
                            CHECK(p.leq(a, c));
                }
        for (std::size_t a = 0; a < sz; ++a) {
            CHECK(p.leq(a, a));
            CHECK(p.leq(p.minimum(), a));
            CHECK(p.leq(a, p.maximum()));
        }
        CHECK(p.element(p.minimum()) == BinaryTree::left_comb(n));
        CHECK(p.element(p.maximum()) == BinaryTree::right_comb(n));
        CHECK(p.zeta() * p.mobius() == IntMatrix::identity(sz));
    }
}

TEST_CASE("every lower cover has a smaller rank")
{
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto &[hi, lo] : tamari_poset(n).covers())
            CHECK(lo < hi);
}

TEST_CASE("mirror is an anti-automorphism and x over y <= x under y")
{
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto &p = tamari_poset(n);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                CHECK(p.leq(i, j) == p.leq(mirror(p.element(j)), mirror(p.element(i))));
    }
    for (std::size_t t = 0; t <= 6; ++t)
        for (std::size_t a = 0; a <= t; ++a)
            for (const auto &x : enumerate(a))
                for (const auto &y : enumerate(t - a))
                    CHECK(tamari_leq(graft_over(x, y), graft_under(x, y)));
}

TEST_CASE("down sets, up sets and intervals")
{
    const auto &p = tamari_poset(4);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (auto j : p.down_set(i))
            CHECK(p.leq(j, i));
        for (auto j : p.up_set(i))
            CHECK(p.leq(i, j));
    }
    CHECK(p.interval(p.minimum(), p.maximum()).size() == p.size());
    CHECK(p.interval(p.maximum(), p.minimum()).empty());
}

TEST_CASE("resource bound")
{
    CHECK_THROWS_AS(TamariPoset::build(max_poset_n + 1), ResourceLimitError);
}

TEST_CASE("cover cache round trip")
{
    const auto dir = std::filesystem::temp_directory_path() /
                     ("ternop-cache-test-" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(dir);
    const PosetCache cache(dir);
    CHECK_FALSE(cache.load(4).has_value());
    const auto built = cache.load_or_build(4);
    REQUIRE(std::filesystem::exists(cache.file_for(4)));
    const auto loaded = cache.load(4);
    REQUIRE(loaded.has_value());
    CHECK(loaded->covers() == built.covers());
    CHECK(loaded->zeta() == tamari_poset(4).zeta());

    // a corrupted file is ignored and rebuilt
    { std::ofstream(cache.file_for(4)) << "{\"version\": 99}"; }
    CHECK_FALSE(cache.load(4).has_value());
    CHECK(cache.load_or_build(4).covers() == built.covers());
    CHECK(cache.load(4).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory from the environment")
{
    ::setenv("TERNOP_CACHE_DIR", "/tmp/ternop-env-dir", 1);
    CHECK(PosetCache::from_environment().directory() == std::filesystem::path("/tmp/ternop-env-dir"));
    ::unsetenv("TERNOP_CACHE_DIR");
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(PosetCache::from_environment().directory() == std::filesystem::path("/tmp/xdg/ternop"));
    ::unsetenv("XDG_CACHE_HOME");
}
