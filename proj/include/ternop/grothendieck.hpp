#pragma once

#include <string>
#include <vector>

#include "ternop/bigint.hpp"
#include "ternop/matrix.hpp"
#include "ternop/tamari.hpp"
#include "ternop/trees.hpp"

namespace ternop {

/// Bases of K_0 over Y_n: simples, projectives, injectives.
enum class Basis { S, P, I };

std::string to_string(Basis b);
Basis parse_basis(const std::string &s);

/// Integer vector over Y_n in one of the three bases, indexed by canonical rank.
struct K0Vector {
    std::size_t n = 0;
    Basis basis = Basis::S;
    std::vector<BigInt> coords;

    K0Vector() : coords(1) {}
    K0Vector(std::size_t grade, Basis b);
    K0Vector(std::size_t grade, Basis b, std::vector<BigInt> c);

    /// The basis vector of the given basis indexed by t.
    static K0Vector unit(Basis b, const BinaryTree &t);

    bool is_zero() const;

    friend bool operator==(const K0Vector &, const K0Vector &) = default;
    K0Vector operator-() const;
    K0Vector &operator+=(const K0Vector &o);
    K0Vector &operator-=(const K0Vector &o);
    friend K0Vector operator+(K0Vector a, const K0Vector &b) { return a += b; }
    friend K0Vector operator-(K0Vector a, const K0Vector &b) { return a -= b; }
    friend K0Vector operator*(const BigInt &c, K0Vector v);
};

/// Exact change of basis; P_x = sum_{y<=x} S_y and I_x = sum_{y>=x} S_y.
K0Vector change_basis(const K0Vector &v, Basis to);

/// S_x ∕ S_y = S_{x∕y}
K0Vector over_S(const BinaryTree &x, const BinaryTree &y);
/// S_x \ S_y = S_{x\y}
K0Vector under_S(const BinaryTree &x, const BinaryTree &y);
/// S_x * S_y as the sum of S_z over the Tamari interval [x∕y, x\y].
K0Vector star_interval(const BinaryTree &x, const BinaryTree &y);
/// S_x * S_y by the recursive splitting
/// x*y = Node(x_l, x_r * y) + Node(x * y_l, y_r). Independent of the order.
K0Vector star_shuffle(const BinaryTree &x, const BinaryTree &y);

/// Bilinear extensions; inputs in any basis, results in the S basis.
K0Vector over(const K0Vector &a, const K0Vector &b);
K0Vector under(const K0Vector &a, const K0Vector &b);
K0Vector star(const K0Vector &a, const K0Vector &b);

/// Matrix of the Coxeter transformation theta(P_x) = -I_x in the P basis;
/// column x holds the P-coordinates of -I_x.
IntMatrix theta_matrix(std::size_t n);

/// theta applied to a vector of any basis; result in the P basis.
K0Vector theta(const K0Vector &v);

/// Matrix of theta in the P basis, rebuilt from the two product identities
/// theta(a∕b) = -theta(a)*theta(b) and
/// theta(P_•*(a∕(P_•*b))) = theta(P_•*a)∕theta(P_•*b) - theta(P_•*a)*theta(P_•*b)
/// together with theta(P_|) = -P_| and theta(P_•) = -P_•.
IntMatrix theta_recursive(std::size_t n);

} // namespace ternop
