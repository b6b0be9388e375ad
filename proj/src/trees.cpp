#include "ternop/trees.hpp"

#include <deque>
#include <mutex>

namespace ternop {

namespace {

std::size_t mix(std::size_t h, std::size_t v)
{
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

int compare(const BinaryTree &a, const BinaryTree &b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    if (a.is_leaf())
        return 0;
    if (a.right().size() != b.right().size())
        return a.right().size() < b.right().size() ? -1 : 1;
    if (int c = compare(a.left(), b.left()); c != 0)
        return c;
    return compare(a.right(), b.right());
}

constexpr std::size_t max_enumerable = 15;

} // namespace

BinaryTree::BinaryTree(BinaryTree left, BinaryTree right)
{
    const std::size_t sz = 1 + left.size() + right.size();
    const std::size_t h = mix(mix(0x51ed27, left.hash()), right.hash() * 31 + 7);
    node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), sz, h});
}

BinaryTree BinaryTree::left_comb(std::size_t n)
{
    BinaryTree t;
    for (std::size_t i = 0; i < n; ++i)
        t = node(t, leaf());
    return t;
}

BinaryTree BinaryTree::right_comb(std::size_t n)
{
    BinaryTree t;
    for (std::size_t i = 0; i < n; ++i)
        t = node(leaf(), t);
    return t;
}

const BinaryTree &BinaryTree::left() const
{
    if (!node_)
        throw std::logic_error("left() of a leaf");
    return node_->left;
}

const BinaryTree &BinaryTree::right() const
{
    if (!node_)
        throw std::logic_error("right() of a leaf");
    return node_->right;
}

bool operator==(const BinaryTree &a, const BinaryTree &b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.size() != b.size() || a.hash() != b.hash())
        return false;
    return a.left() == b.left() && a.right() == b.right();
}

bool operator<(const BinaryTree &a, const BinaryTree &b) { return compare(a, b) < 0; }

ParseError::ParseError(const std::string &what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset)
{
}

std::size_t catalan_count(std::size_t n)
{
    std::size_t c = 1;
    for (std::size_t k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

const std::vector<BinaryTree> &enumerate(std::size_t n)
{
    if (n > max_enumerable)
        throw std::length_error("enumerate: n=" + std::to_string(n) + " exceeds " + std::to_string(max_enumerable));
    static std::mutex mu;
    static std::deque<std::vector<BinaryTree>> table{std::vector<BinaryTree>{BinaryTree::leaf()}};
    std::lock_guard lock(mu);
    while (table.size() <= n) {
        const std::size_t m = table.size();
        std::vector<BinaryTree> level;
        level.reserve(catalan_count(m));
        for (std::size_t r = 0; r < m; ++r)
            for (const auto &l : table[m - 1 - r])
                for (const auto &rt : table[r])
                    level.emplace_back(l, rt);
        table.push_back(std::move(level));
    }
    return table[n];
}

std::size_t rank(const BinaryTree &t)
{
    if (t.is_leaf())
        return 0;
    const std::size_t n = t.size();
    const std::size_t r = t.right().size();
    std::size_t offset = 0;
    for (std::size_t k = 0; k < r; ++k)
        offset += catalan_count(n - 1 - k) * catalan_count(k);
    return offset + rank(t.left()) * catalan_count(r) + rank(t.right());
}

BinaryTree unrank(std::size_t n, std::size_t r)
{
    if (r >= catalan_count(n))
        throw std::out_of_range("unrank: rank out of range");
    if (n == 0)
        return BinaryTree::leaf();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t cl = catalan_count(n - 1 - k), cr = catalan_count(k);
        if (r < cl * cr)
            return BinaryTree::node(unrank(n - 1 - k, r / cr), unrank(k, r % cr));
        r -= cl * cr;
    }
    throw std::logic_error("unrank: unreachable");
}

BinaryTree graft_over(const BinaryTree &x, const BinaryTree &y)
{
    if (y.is_leaf())
        return x;
    return BinaryTree::node(graft_over(x, y.left()), y.right());
}

BinaryTree graft_under(const BinaryTree &x, const BinaryTree &y)
{
    if (x.is_leaf())
        return y;
    return BinaryTree::node(x.left(), graft_under(x.right(), y));
}

std::optional<std::pair<BinaryTree, BinaryTree>> decompose(const BinaryTree &z)
{
    if (z.is_leaf())
        return std::nullopt;
    return std::pair{z.left(), z.right()};
}

BinaryTree mirror(const BinaryTree &t)
{
    if (t.is_leaf())
        return t;
    return BinaryTree::node(mirror(t.right()), mirror(t.left()));
}

namespace {

void serialize_into(const BinaryTree &t, std::string &out)
{
    if (t.is_leaf()) {
        out += '.';
        return;
    }
    out += '(';
    serialize_into(t.left(), out);
    serialize_into(t.right(), out);
    out += ')';
}

BinaryTree parse_at(std::string_view s, std::size_t &pos)
{
    if (pos >= s.size())
        throw ParseError("unexpected end of input", pos);
    if (s[pos] == '.') {
        ++pos;
        return BinaryTree::leaf();
    }
    if (s[pos] != '(')
        throw ParseError(std::string("unexpected character '") + s[pos] + "'", pos);
    ++pos;
    BinaryTree l = parse_at(s, pos);
    BinaryTree r = parse_at(s, pos);
    if (pos >= s.size())
        throw ParseError("unexpected end of input, expected ')'", pos);
    if (s[pos] != ')')
        throw ParseError(std::string("expected ')' but found '") + s[pos] + "'", pos);
    ++pos;
    return BinaryTree::node(std::move(l), std::move(r));
}

} // namespace

std::string serialize(const BinaryTree &t)
{
    std::string out;
    out.reserve(3 * t.size() + 1);
    serialize_into(t, out);
    return out;
}

BinaryTree parse_tree(std::string_view s)
{
    std::size_t pos = 0;
    BinaryTree t = parse_at(s, pos);
    if (pos != s.size())
        throw ParseError("trailing characters", pos);
    return t;
}

} // namespace ternop
