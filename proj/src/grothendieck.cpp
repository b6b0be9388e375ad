#include "ternop/grothendieck.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ternop {

std::string to_string(Basis b)
{
    switch (b) {
    case Basis::S:
        return "S";
    case Basis::P:
        return "P";
    case Basis::I:
        return "I";
    }
    throw std::logic_error("bad basis tag");
}

Basis parse_basis(const std::string &s)
{
    if (s == "S")
        return Basis::S;
    if (s == "P")
        return Basis::P;
    if (s == "I")
        return Basis::I;
    throw std::invalid_argument("unknown basis '" + s + "' (expected S, P or I)");
}

K0Vector::K0Vector(std::size_t grade, Basis b) : n(grade), basis(b), coords(catalan_count(grade)) {}

K0Vector::K0Vector(std::size_t grade, Basis b, std::vector<BigInt> c) : n(grade), basis(b), coords(std::move(c))
{
    if (coords.size() != catalan_count(grade))
        throw std::invalid_argument("K0Vector: " + std::to_string(coords.size()) + " coordinates for grade " +
                                    std::to_string(grade));
}

K0Vector K0Vector::unit(Basis b, const BinaryTree &t)
{
    K0Vector v(t.size(), b);
    v.coords[rank(t)] = 1;
    return v;
}

bool K0Vector::is_zero() const
{
    for (const auto &c : coords)
        if (c != 0)
            return false;
    return true;
}

K0Vector K0Vector::operator-() const
{
    K0Vector r = *this;
    for (auto &c : r.coords)
        c = -c;
    return r;
}

namespace {

void check_compatible(const K0Vector &a, const K0Vector &b)
{
    if (a.n != b.n || a.basis != b.basis)
        throw std::invalid_argument("K0Vector: incompatible grades or bases");
}

} // namespace

K0Vector &K0Vector::operator+=(const K0Vector &o)
{
    check_compatible(*this, o);
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] += o.coords[i];
    return *this;
}

K0Vector &K0Vector::operator-=(const K0Vector &o)
{
    check_compatible(*this, o);
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] -= o.coords[i];
    return *this;
}

K0Vector operator*(const BigInt &c, K0Vector v)
{
    for (auto &x : v.coords)
        x *= c;
    return v;
}

namespace {

K0Vector to_S(const K0Vector &v)
{
    if (v.basis == Basis::S)
        return v;
    const auto &poset = tamari_poset(v.n);
    K0Vector out(v.n, Basis::S);
    const std::size_t d = poset.size();
    for (std::size_t x = 0; x < d; ++x) {
        if (v.coords[x] == 0)
            continue;
        if (v.basis == Basis::P) {
            for (std::size_t y = 0; y <= x; ++y)
                if (poset.leq(y, x))
                    out.coords[y] += v.coords[x];
        } else {
            for (std::size_t y = x; y < d; ++y)
                if (poset.leq(x, y))
                    out.coords[y] += v.coords[x];
        }
    }
    return out;
}

K0Vector from_S(const K0Vector &v, Basis to)
{
    if (to == Basis::S)
        return v;
    const auto &mu = tamari_poset(v.n).mobius();
    K0Vector out(v.n, to);
    const std::size_t d = mu.rows();
    // P: c = mobius^T v ; I: c = mobius v
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const BigInt &m = mu(i, j);
            if (m == 0)
                continue;
            if (to == Basis::P)
                out.coords[j] += m * v.coords[i];
            else
                out.coords[i] += m * v.coords[j];
        }
    return out;
}

template <typename PairProduct>
K0Vector bilinear(const K0Vector &a, const K0Vector &b, PairProduct pair)
{
    const K0Vector as = to_S(a), bs = to_S(b);
    K0Vector out(a.n + b.n, Basis::S);
    const auto &xs = enumerate(a.n);
    const auto &ys = enumerate(b.n);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (as.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (bs.coords[j] == 0)
                continue;
            const BigInt c = as.coords[i] * bs.coords[j];
            pair(xs[i], ys[j], c, out);
        }
    }
    return out;
}

} // namespace

K0Vector change_basis(const K0Vector &v, Basis to)
{
    if (v.basis == to)
        return v;
    return from_S(to_S(v), to);
}

K0Vector over_S(const BinaryTree &x, const BinaryTree &y) { return K0Vector::unit(Basis::S, graft_over(x, y)); }

K0Vector under_S(const BinaryTree &x, const BinaryTree &y) { return K0Vector::unit(Basis::S, graft_under(x, y)); }

K0Vector star_interval(const BinaryTree &x, const BinaryTree &y)
{
    const auto &poset = tamari_poset(x.size() + y.size());
    K0Vector out(poset.n(), Basis::S);
    for (std::size_t z : poset.interval(rank(graft_over(x, y)), rank(graft_under(x, y))))
        out.coords[z] = 1;
    return out;
}

namespace {

using TreeCombination = std::map<BinaryTree, BigInt>;

struct PairHash {
    std::size_t operator()(const std::pair<BinaryTree, BinaryTree> &p) const noexcept
    {
        return p.first.hash() * 1000003U ^ p.second.hash();
    }
};

const TreeCombination &shuffle(const BinaryTree &x, const BinaryTree &y,
                               std::unordered_map<std::pair<BinaryTree, BinaryTree>, TreeCombination, PairHash> &memo)
{
    const auto key = std::pair{x, y};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    TreeCombination out;
    if (x.is_leaf())
        out[y] = 1;
    else if (y.is_leaf())
        out[x] = 1;
    else {
        for (const auto &[t, c] : shuffle(x.right(), y, memo))
            out[BinaryTree::node(x.left(), t)] += c;
        for (const auto &[t, c] : shuffle(x, y.left(), memo))
            out[BinaryTree::node(t, y.right())] += c;
    }
    return memo.emplace(key, std::move(out)).first->second;
}

} // namespace

K0Vector star_shuffle(const BinaryTree &x, const BinaryTree &y)
{
    std::unordered_map<std::pair<BinaryTree, BinaryTree>, TreeCombination, PairHash> memo;
    K0Vector out(x.size() + y.size(), Basis::S);
    for (const auto &[t, c] : shuffle(x, y, memo))
        out.coords[rank(t)] += c;
    return out;
}

K0Vector over(const K0Vector &a, const K0Vector &b)
{
    return bilinear(a, b, [](const BinaryTree &x, const BinaryTree &y, const BigInt &c, K0Vector &out) {
        out.coords[rank(graft_over(x, y))] += c;
    });
}

K0Vector under(const K0Vector &a, const K0Vector &b)
{
    return bilinear(a, b, [](const BinaryTree &x, const BinaryTree &y, const BigInt &c, K0Vector &out) {
        out.coords[rank(graft_under(x, y))] += c;
    });
}

K0Vector star(const K0Vector &a, const K0Vector &b)
{
    const auto &poset = tamari_poset(a.n + b.n);
    return bilinear(a, b, [&](const BinaryTree &x, const BinaryTree &y, const BigInt &c, K0Vector &out) {
        for (std::size_t z : poset.interval(rank(graft_over(x, y)), rank(graft_under(x, y))))
            out.coords[z] += c;
    });
}

IntMatrix theta_matrix(std::size_t n)
{
    const auto &poset = tamari_poset(n);
    // column x: P-coordinates of -I_x, i.e. -mobius^T * (column x of zeta)
    return -(poset.mobius().transpose() * poset.zeta());
}

K0Vector theta(const K0Vector &v)
{
    const K0Vector p = change_basis(v, Basis::P);
    return K0Vector(v.n, Basis::P, theta_matrix(v.n) * p.coords);
}

namespace {

class ThetaRecursion {
public:
    // theta(P_x) in the S basis
    const K0Vector &of(const BinaryTree &x)
    {
        if (auto it = memo_.find(x); it != memo_.end())
            return it->second;
        K0Vector value = compute(x);
        return memo_.emplace(x, std::move(value)).first->second;
    }

private:
    K0Vector compute(const BinaryTree &x)
    {
        const BinaryTree dot = BinaryTree::node({}, {});
        if (x.is_leaf() || x == dot)
            return -to_S(K0Vector::unit(Basis::P, x));
        if (!x.left().is_leaf()) {
            // x = x_l ∕ (•\x_r)
            const BinaryTree z = BinaryTree::node({}, x.right());
            return -star(of(x.left()), of(z));
        }
        // x = •\z with z = v∕(•\w) nontrivial
        const BinaryTree &z = x.right();
        const K0Vector ta = of(BinaryTree::node({}, z.left()));
        const K0Vector tb = of(BinaryTree::node({}, z.right()));
        return over(ta, tb) - star(ta, tb);
    }

    std::unordered_map<BinaryTree, K0Vector, BinaryTreeHash> memo_;
};

} // namespace

IntMatrix theta_recursive(std::size_t n)
{
    ThetaRecursion rec;
    const auto &elems = enumerate(n);
    IntMatrix m(elems.size(), elems.size());
    for (std::size_t x = 0; x < elems.size(); ++x)
        m.set_column(x, change_basis(rec.of(elems[x]), Basis::P).coords);
    return m;
}

} // namespace ternop
