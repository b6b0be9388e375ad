#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ternop/matrix.hpp"
#include "ternop/trees.hpp"

namespace ternop {

/// Thrown when a request exceeds the sizes this library is willing to build.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t max_poset_n = 10;

/// Trees obtained from t by one right rotation Node(A, Node(B, C)) ->
/// Node(Node(A, B), C), one per rotatable node in preorder. Each result is
/// covered by t in the Tamari order.
std::vector<BinaryTree> lower_covers(const BinaryTree &t);

/// The Tamari poset on Y_n, with the elements indexed by canonical rank.
class TamariPoset {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    /// Builds the poset from scratch. Throws ResourceLimitError for n > max_poset_n.
    static TamariPoset build(std::size_t n);
    /// Rebuilds the derived data from a stored cover list.
    static TamariPoset from_covers(std::size_t n, std::vector<Edge> covers);

    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_->size(); }
    const std::vector<BinaryTree> &elements() const noexcept { return *elements_; }
    const BinaryTree &element(std::size_t i) const { return (*elements_)[i]; }
    std::size_t index_of(const BinaryTree &t) const;

    /// Hasse diagram edges (upper, lower), lower being covered by upper.
    const std::vector<Edge> &covers() const noexcept { return covers_; }
    const std::vector<std::size_t> &lower_covers_of(std::size_t i) const { return down_[i]; }

    /// i <= j in the Tamari order.
    bool leq(std::size_t i, std::size_t j) const
    {
        return (leq_[j * words_ + i / 64] >> (i % 64)) & 1U;
    }
    bool leq(const BinaryTree &x, const BinaryTree &y) const;

    /// Indices below (resp. above) i, including i, in ascending order.
    std::vector<std::size_t> down_set(std::size_t i) const;
    std::vector<std::size_t> up_set(std::size_t i) const;
    /// Closed interval [lo, hi], empty when lo is not below hi.
    std::vector<std::size_t> interval(std::size_t lo, std::size_t hi) const;

    /// zeta[x][y] = 1 iff y <= x.
    IntMatrix zeta() const;
    /// Exact inverse of zeta.
    const IntMatrix &mobius() const;

    std::size_t minimum() const { return 0; }
    std::size_t maximum() const { return size() - 1; }

private:
    TamariPoset() = default;
    void close();

    std::size_t n_ = 0;
    std::shared_ptr<const std::vector<BinaryTree>> elements_;
    std::vector<Edge> covers_;
    std::vector<std::vector<std::size_t>> down_;
    std::size_t words_ = 0;
    // row j holds the bitset of {i : i <= j}
    std::vector<std::uint64_t> leq_;
    struct LazyMobius;
    std::shared_ptr<LazyMobius> mobius_;
};

/// leq(x, y) for trees of equal size; throws std::invalid_argument otherwise.
bool tamari_leq(const BinaryTree &x, const BinaryTree &y);

/// Process-wide shared poset for Y_n, built on first use.
const TamariPoset &tamari_poset(std::size_t n);

/// On-disk cache of cover relations, one versioned JSON file per n.
class PosetCache {
public:
    static constexpr int format_version = 1;

    explicit PosetCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
    /// Directory from TERNOP_CACHE_DIR, else $XDG_CACHE_HOME/ternop, else ~/.cache/ternop.
    static PosetCache from_environment();

    const std::filesystem::path &directory() const noexcept { return dir_; }
    std::filesystem::path file_for(std::size_t n) const;

    /// Loads the poset if a valid cache file exists, else builds and stores it.
    TamariPoset load_or_build(std::size_t n) const;
    std::optional<TamariPoset> load(std::size_t n) const;
    void store(const TamariPoset &poset) const;

private:
    std::filesystem::path dir_;
};

} // namespace ternop
