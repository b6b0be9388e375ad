#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ternop {

/// Planar binary tree: either the leaf or a node with an ordered pair of
/// subtrees. Immutable; subtrees are shared between values, and equality is
/// structural.
class BinaryTree {
public:
    BinaryTree() = default; // the leaf
    BinaryTree(BinaryTree left, BinaryTree right);

    static BinaryTree leaf() { return {}; }
    static BinaryTree node(BinaryTree left, BinaryTree right) { return {std::move(left), std::move(right)}; }
    static BinaryTree left_comb(std::size_t n);
    static BinaryTree right_comb(std::size_t n);

    bool is_leaf() const noexcept { return !node_; }
    std::size_t size() const noexcept;

    /// Left and right subtrees; precondition: not a leaf.
    const BinaryTree &left() const;
    const BinaryTree &right() const;

    friend bool operator==(const BinaryTree &a, const BinaryTree &b);
    /// Canonical order, see enumerate().
    friend bool operator<(const BinaryTree &a, const BinaryTree &b);

    std::size_t hash() const noexcept;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
    std::size_t size;
    std::size_t hash;
};

inline std::size_t BinaryTree::size() const noexcept { return node_ ? node_->size : 0; }
inline std::size_t BinaryTree::hash() const noexcept { return node_ ? node_->hash : 0x9e3779b97f4a7c15ULL; }

struct BinaryTreeHash {
    std::size_t operator()(const BinaryTree &t) const noexcept { return t.hash(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

std::size_t catalan_count(std::size_t n);

/// All trees with n internal nodes in canonical order: by size of the right
/// subtree ascending, then rank of the left subtree, then rank of the right
/// subtree. The left comb is first and the right comb is last, and the order
/// is a linear extension of the Tamari order.
const std::vector<BinaryTree> &enumerate(std::size_t n);

/// Position of t in enumerate(t.size()).
std::size_t rank(const BinaryTree &t);
BinaryTree unrank(std::size_t n, std::size_t r);

/// x∕y: x grafted on the leftmost leaf of y.
BinaryTree graft_over(const BinaryTree &x, const BinaryTree &y);
/// x\y: y grafted on the rightmost leaf of x.
BinaryTree graft_under(const BinaryTree &x, const BinaryTree &y);

std::optional<std::pair<BinaryTree, BinaryTree>> decompose(const BinaryTree &z);

BinaryTree mirror(const BinaryTree &t);

std::string serialize(const BinaryTree &t);
BinaryTree parse_tree(std::string_view s);

} // namespace ternop

template <>
struct std::hash<ternop::BinaryTree> {
    std::size_t operator()(const ternop::BinaryTree &t) const noexcept { return t.hash(); }
};
