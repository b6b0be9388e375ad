#pragma once

#include <map>
#include <string>
#include <vector>

#include "ternop/bigint.hpp"

namespace ternop {

/// Parts in descending order; the empty partition indexes the constant term.
using Partition = std::vector<int>;

int degree(const Partition &lambda);

/// Symmetric function in the power-sum basis, truncated above total degree N.
class SymFun {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymFun(int N = 12);
    /// p_k
    static SymFun p(int k, int N);
    static SymFun constant(const Rational &c, int N);
    static SymFun monomial(Partition lambda, const Rational &c, int N);

    int truncation() const noexcept { return N_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Partition &lambda) const;

    /// Adds c p_lambda; terms above the truncation are dropped. lambda is sorted.
    void add(Partition lambda, const Rational &c);

    /// Homogeneous component of degree d.
    SymFun degree_part(int d) const;
    /// Same terms under a smaller truncation.
    SymFun truncate(int N) const;
    /// Lowest degree carrying a term; -1 for zero.
    int min_degree() const;

    std::string to_string() const;

    friend bool operator==(const SymFun &a, const SymFun &b) { return a.terms_ == b.terms_; }
    SymFun operator-() const;
    SymFun &operator+=(const SymFun &o);
    SymFun &operator-=(const SymFun &o);
    friend SymFun operator+(SymFun a, const SymFun &b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun &b) { return a -= b; }
    friend SymFun operator*(const Rational &c, SymFun f);

private:
    int N_;
    Terms terms_;
};

/// Product truncated at N.
SymFun mul(const SymFun &f, const SymFun &g, int N);
/// Product truncated at the smaller of the two truncations.
SymFun operator*(const SymFun &f, const SymFun &g);

/// Partial derivative with respect to p_1.
SymFun derivative_p1(const SymFun &f);

/// p_k ∘ g: every p_i of g replaced by p_{ik}.
SymFun adams(const SymFun &g, int k, int N);

/// f ∘ g, truncated at N. Throws std::invalid_argument if g has a constant term.
SymFun plethysm(const SymFun &f, const SymFun &g, int N);

/// f -> -f(-p_1, -p_2, ...)
SymFun suspend(const SymFun &f);
/// p_i -> (-1)^{i-1} p_i
SymFun omega(const SymFun &f);

/// Characteristic series of the cyclic operad W through degree N.
SymFun ch_w(int N);
/// Characteristic series of the cyclic operad V through degree N.
SymFun ch_v(int N);
/// sum_n 1/(2n) sum_{j|2n} (-1)^{2n n/j} phi(j) p_j^{2n/j}; equals -suspend(ch_w(N)).
SymFun legendre_dual_series(int N);

/// Rational class function on the cyclic group Z/n: values[i] is the value on g^i.
struct ClassFunction {
    std::size_t n = 1;
    std::vector<Rational> values;

    static ClassFunction trivial(std::size_t n);
    /// The one-dimensional character sending the generator to s = +-1.
    static ClassFunction sign_character(std::size_t n, int s);
    /// Generator action multiplied by -1: values[i] -> (-1)^i values[i].
    ClassFunction twisted() const;

    friend bool operator==(const ClassFunction &, const ClassFunction &) = default;
};

/// Induction from Z/n to S_n:
/// (1/n) sum_{j|n} sum_{1<=i<=n/j, gcd(i,n/j)=1} chi(g^{ji}) p_{n/j}^j.
SymFun induce_cyclic(const ClassFunction &chi);

/// Character of the induced module of Q[t]/(t^d - 1):
/// (d/n) sum_{l | n/d} phi(l) p_l^{n/l}. Throws std::invalid_argument unless d | n.
SymFun induced_module_char(long n, long d);

/// G with F ∘ G = p_1 through degree N, solved degree by degree.
/// Throws std::invalid_argument if F has a constant term or no p_1 term.
SymFun plethystic_inverse(const SymFun &F, int N);

/// A with A ∘ ∂B + B = p_1 ∂B, i.e. A = (p_1 ∂B - B) ∘ (∂B)^{<-1>}.
/// Throws std::invalid_argument if B has terms of degree <= 1 or ∂B has no p_1 term.
SymFun legendre_transform(const SymFun &B, int N);

/// Compares, as exact truncated univariate series to degree N,
///   -sum_{n: j|2n} j/(2n) (-1)^{2n n/j} x^{2n/j}
/// and
///   sum_{n: j|2n} j/(2n) lambda(2n/j) (-1)^{2n(n-1)/j} (x/(1-x^2))^{2n/j}.
bool series_identity_check(int j, int N);

/// omega(Ind chi) == Ind(twisted chi).
bool involution_square_check(const ClassFunction &chi);

/// Character of the cyclic group generated by (-1)^{n+1} theta on V(2n+1),
/// read off the degree 2n+2 part of ch_v: sign (-1)^n, then omega^n.
SymFun coxeter_action_char(long n, const SymFun &chv);

/// c_n M'_{2n+2,2n+2} - (-1)^{n+1} sum_{d|2n+2} b_d M'_{2n+2,d}
SymFun virtual_module_char(long n);

/// Writes a homogeneous degree-m character as sum_{d|m} e_d M'_{m,d}.
/// Throws std::invalid_argument if it is not such a combination with integer e_d.
std::map<long, BigInt> cyclic_module_decomposition(const SymFun &chi, long m);

} // namespace ternop
