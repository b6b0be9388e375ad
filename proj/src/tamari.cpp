#include "ternop/tamari.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

namespace ternop {

// Computed on first use: quadratic in Catalan(n), and most callers only need
// the order relation.
struct TamariPoset::LazyMobius {
    std::once_flag once;
    IntMatrix value;
};

namespace {

void collect_rotations(const BinaryTree &t, const std::function<BinaryTree(BinaryTree)> &wrap,
                       std::vector<BinaryTree> &out)
{
    if (t.is_leaf())
        return;
    const BinaryTree &a = t.left();
    const BinaryTree &right = t.right();
    if (!right.is_leaf())
        out.push_back(wrap(BinaryTree::node(BinaryTree::node(a, right.left()), right.right())));
    collect_rotations(a, [&](BinaryTree sub) { return wrap(BinaryTree::node(std::move(sub), right)); }, out);
    collect_rotations(right, [&](BinaryTree sub) { return wrap(BinaryTree::node(a, std::move(sub))); }, out);
}

} // namespace

std::vector<BinaryTree> lower_covers(const BinaryTree &t)
{
    std::vector<BinaryTree> out;
    collect_rotations(t, [](BinaryTree s) { return s; }, out);
    return out;
}

TamariPoset TamariPoset::build(std::size_t n)
{
    if (n > max_poset_n)
        throw ResourceLimitError("Tamari poset for n=" + std::to_string(n) + " exceeds the supported bound n <= " +
                                 std::to_string(max_poset_n));
    const auto &elems = enumerate(n);
    std::vector<TamariPoset::Edge> covers;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto &c : lower_covers(elems[i]))
            covers.emplace_back(i, rank(c));
    return from_covers(n, std::move(covers));
}

TamariPoset TamariPoset::from_covers(std::size_t n, std::vector<Edge> covers)
{
    if (n > max_poset_n)
        throw ResourceLimitError("Tamari poset for n=" + std::to_string(n) + " exceeds the supported bound n <= " +
                                 std::to_string(max_poset_n));
    TamariPoset p;
    p.n_ = n;
    p.elements_ = std::shared_ptr<const std::vector<BinaryTree>>(&enumerate(n), [](auto *) {});
    p.covers_ = std::move(covers);
    p.close();
    return p;
}

void TamariPoset::close()
{
    const std::size_t d = size();
    down_.assign(d, {});
    for (const auto &[hi, lo] : covers_) {
        if (hi >= d || lo >= d)
            throw std::invalid_argument("cover index out of range");
        // canonical order is a linear extension: lower covers come first
        if (lo >= hi)
            throw std::logic_error("cover relation violates the canonical linear extension");
        down_[hi].push_back(lo);
    }
    words_ = (d + 63) / 64;
    leq_.assign(d * words_, 0);
    for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t *row = &leq_[j * words_];
        row[j / 64] |= std::uint64_t{1} << (j % 64);
        for (std::size_t k : down_[j]) {
            const std::uint64_t *sub = &leq_[k * words_];
            for (std::size_t w = 0; w < words_; ++w)
                row[w] |= sub[w];
        }
    }
    mobius_ = std::make_shared<LazyMobius>();
}

std::size_t TamariPoset::index_of(const BinaryTree &t) const
{
    if (t.size() != n_)
        throw std::invalid_argument("tree of size " + std::to_string(t.size()) + " is not in Y_" + std::to_string(n_));
    return rank(t);
}

bool TamariPoset::leq(const BinaryTree &x, const BinaryTree &y) const { return leq(index_of(x), index_of(y)); }

std::vector<std::size_t> TamariPoset::down_set(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j <= i; ++j)
        if (leq(j, i))
            out.push_back(j);
    return out;
}

std::vector<std::size_t> TamariPoset::up_set(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (std::size_t j = i; j < size(); ++j)
        if (leq(i, j))
            out.push_back(j);
    return out;
}

std::vector<std::size_t> TamariPoset::interval(std::size_t lo, std::size_t hi) const
{
    std::vector<std::size_t> out;
    if (!leq(lo, hi))
        return out;
    for (std::size_t z = lo; z <= hi; ++z)
        if (leq(lo, z) && leq(z, hi))
            out.push_back(z);
    return out;
}

IntMatrix TamariPoset::zeta() const
{
    const std::size_t d = size();
    IntMatrix z(d, d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y <= x; ++y)
            if (leq(y, x))
                z(x, y) = 1;
    return z;
}

const IntMatrix &TamariPoset::mobius() const
{
    LazyMobius *holder = mobius_.get();
    std::call_once(holder->once, [&] {
        // zeta is lower unitriangular: row_i = e_i - sum over strict lower k of row_k
        const std::size_t d = size();
        std::vector<std::int64_t> m(d * d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            std::int64_t *row = &m[i * d];
            row[i] = 1;
            for (std::size_t k = 0; k < i; ++k) {
                if (!leq(k, i))
                    continue;
                const std::int64_t *sub = &m[k * d];
                for (std::size_t j = 0; j <= k; ++j)
                    if (sub[j] != 0 && __builtin_sub_overflow(row[j], sub[j], &row[j]))
                        throw std::overflow_error("Möbius entry overflow");
            }
        }
        IntMatrix result(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (m[i * d + j] != 0)
                    result(i, j) = m[i * d + j];
        holder->value = std::move(result);
    });
    return holder->value;
}

bool tamari_leq(const BinaryTree &x, const BinaryTree &y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("leq: trees of different sizes " + std::to_string(x.size()) + " and " +
                                    std::to_string(y.size()));
    return tamari_poset(x.size()).leq(x, y);
}

const TamariPoset &tamari_poset(std::size_t n)
{
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<TamariPoset>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[n];
    if (!slot)
        slot = std::make_unique<TamariPoset>(TamariPoset::build(n));
    return *slot;
}

PosetCache PosetCache::from_environment()
{
    if (const char *dir = std::getenv("TERNOP_CACHE_DIR"); dir && *dir)
        return PosetCache(dir);
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return PosetCache(std::filesystem::path(xdg) / "ternop");
    if (const char *home = std::getenv("HOME"); home && *home)
        return PosetCache(std::filesystem::path(home) / ".cache" / "ternop");
    return PosetCache(std::filesystem::temp_directory_path() / "ternop-cache");
}

std::filesystem::path PosetCache::file_for(std::size_t n) const
{
    return dir_ / ("tamari-v" + std::to_string(format_version) + "-n" + std::to_string(n) + ".json");
}

std::optional<TamariPoset> PosetCache::load(std::size_t n) const
{
    std::ifstream in(file_for(n));
    if (!in)
        return std::nullopt;
    try {
        const auto doc = nlohmann::json::parse(in);
        if (doc.at("version").get<int>() != format_version || doc.at("n").get<std::size_t>() != n)
            return std::nullopt;
        const auto &elems = enumerate(n);
        const auto &stored = doc.at("elements");
        if (stored.size() != elems.size())
            return std::nullopt;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (stored[i].get<std::string>() != serialize(elems[i]))
                return std::nullopt;
        std::vector<TamariPoset::Edge> covers;
        for (const auto &e : doc.at("covers"))
            covers.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        return TamariPoset::from_covers(n, std::move(covers));
    } catch (const nlohmann::json::exception &) {
        return std::nullopt;
    } catch (const std::invalid_argument &) {
        return std::nullopt;
    } catch (const std::logic_error &) {
        return std::nullopt;
    }
}

void PosetCache::store(const TamariPoset &poset) const
{
    nlohmann::json doc;
    doc["version"] = format_version;
    doc["n"] = poset.n();
    auto &elems = doc["elements"] = nlohmann::json::array();
    for (const auto &t : poset.elements())
        elems.push_back(serialize(t));
    auto &covers = doc["covers"] = nlohmann::json::array();
    for (const auto &[hi, lo] : poset.covers())
        covers.push_back({hi, lo});
    std::filesystem::create_directories(dir_);
    const auto target = file_for(poset.n());
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp);
        out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
}

TamariPoset PosetCache::load_or_build(std::size_t n) const
{
    if (auto cached = load(n))
        return std::move(*cached);
    TamariPoset p = TamariPoset::build(n);
    store(p);
    return p;
}

} // namespace ternop
