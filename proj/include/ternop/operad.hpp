#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ternop/bigint.hpp"
#include "ternop/grothendieck.hpp"
#include "ternop/trees.hpp"

namespace ternop {

/// Planar tree whose internal vertices all carry the ternary generator.
/// Stored as its preorder code: 'm' for a vertex (followed by its three
/// subtrees), '*' for a leaf. The unit is "*". The implicit generator order of
/// a monomial is the preorder of its vertices; every sign below is relative
/// to it.
class Monomial {
public:
    Monomial() : code_("*") {}
    /// From a preorder code; throws std::invalid_argument if malformed.
    static Monomial from_code(std::string code);
    /// From the bracket notation, e.g. "m[*,*,m[*,*,*]]".
    static Monomial parse(std::string_view text);
    static Monomial unit() { return {}; }
    static Monomial generator() { return from_code("m***"); }
    /// Vertex with the three given subtrees.
    static Monomial vertex(const Monomial &a, const Monomial &b, const Monomial &c);

    const std::string &code() const noexcept { return code_; }
    std::size_t vertices() const noexcept;
    std::size_t arity() const noexcept { return 2 * vertices() + 1; }
    bool is_unit() const noexcept { return code_.size() == 1; }

    /// Subtrees of the root; precondition: not the unit.
    std::array<Monomial, 3> children() const;

    std::string to_string() const;

    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    std::string code_;
};

/// End (one past) of the subtree starting at code position pos.
std::size_t subtree_end(std::string_view code, std::size_t pos);

/// Rewrite rule on a two-vertex pattern: the pattern whose inner vertex hangs
/// at `slot` of the outer one rewrites to the combination of patterns with the
/// inner vertex at the given slots. The five hanging subtrees keep their order.
struct RewriteRule {
    int slot;
    std::vector<std::pair<int, int>> rhs; // (slot, coefficient)
};

enum class TransportKind { Anticyclic, Cyclic };

struct OperadConfig {
    std::string name;
    /// Parity of the generator weight: odd for V, even for W.
    bool odd_generator = true;
    std::vector<RewriteRule> rules;
    TransportKind transport = TransportKind::Anticyclic;
    /// theta(generator) = generator_transport * generator.
    int generator_transport = -1;
    /// Per-slot weights of termination_measure().
    std::array<int, 3> measure_weights{0, 1, 0};
};

/// V with its anticyclic structure theta_V(m) = -m.
OperadConfig config_V();
/// V with the cyclic structure gamma_V(m) = m.
OperadConfig config_V_cyclic();
/// The dual W: even generator, relations w∘1w + w∘2w = 0 = w∘2w + w∘3w, gamma(w) = -w.
OperadConfig config_W();

/// Integer combination of monomials of one arity; zero coefficients are never stored.
class OperadElement {
public:
    using Terms = std::map<Monomial, BigInt>;

    OperadElement() = default;
    explicit OperadElement(std::size_t arity) : arity_(arity) {}
    OperadElement(const Monomial &m, BigInt coeff = 1);

    static OperadElement unit() { return OperadElement(Monomial::unit()); }
    static OperadElement generator() { return OperadElement(Monomial::generator()); }

    std::size_t arity() const noexcept { return arity_; }
    /// Number of generators, i.e. the weight for an odd generator.
    std::size_t vertices() const noexcept { return (arity_ - 1) / 2; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coeff(const Monomial &m) const;

    void add(const Monomial &m, const BigInt &c);

    std::string to_string() const;

    friend bool operator==(const OperadElement &, const OperadElement &) = default;
    OperadElement operator-() const;
    OperadElement &operator+=(const OperadElement &o);
    OperadElement &operator-=(const OperadElement &o);
    friend OperadElement operator+(OperadElement a, const OperadElement &b) { return a += b; }
    friend OperadElement operator-(OperadElement a, const OperadElement &b) { return a -= b; }
    friend OperadElement operator*(const BigInt &c, OperadElement e);

private:
    std::size_t arity_ = 1;
    Terms terms_;
};

/// a ∘_i b in the free operad. The sign is the Koszul sign of moving the
/// vertices of b past the vertices of a that follow leaf i in preorder
/// (always +1 for an even generator). Throws std::out_of_range unless
/// 1 <= i <= arity(a).
OperadElement compose(const OperadElement &a, std::size_t i, const OperadElement &b, const OperadConfig &config);
/// a ∘_max b
OperadElement compose_max(const OperadElement &a, const OperadElement &b, const OperadConfig &config);

/// a ∕ b = (-1)^{ab} b ∘_1 a
OperadElement operad_over(const OperadElement &a, const OperadElement &b, const OperadConfig &config);
/// a * b = a ∘_max b
OperadElement operad_star(const OperadElement &a, const OperadElement &b, const OperadConfig &config);

enum class Strategy {
    Leftmost,  ///< first redex in preorder
    Rightmost, ///< last redex in preorder
    Random,    ///< uniformly chosen redex, needs an rng
};

struct RewriteStep {
    Monomial monomial;       ///< term being rewritten
    std::size_t position;    ///< code offset of the outer vertex of the redex
    OperadElement result;    ///< whole element after the step
};

struct ReductionOptions {
    Strategy strategy = Strategy::Leftmost;
    std::mt19937_64 *rng = nullptr;
    std::vector<RewriteStep> *trace = nullptr;
    /// Verify that every step strictly decreases termination_measure().
    bool check_measure = false;
};

/// Code offsets of the vertices at which some rule applies.
std::vector<std::size_t> redexes(const Monomial &m, const OperadConfig &config);
bool is_normal(const Monomial &m, const OperadConfig &config);
bool is_normal(const OperadElement &e, const OperadConfig &config);

/// Sum over vertices of the rule-slot weights along the path from the root:
/// for V the number of middle-child steps, for W the sum of (slot - 1).
/// Each rewrite step strictly decreases it.
std::uint64_t termination_measure(const Monomial &m, const OperadConfig &config);

/// Applies the rule at the vertex at code offset `position` of m.
OperadElement rewrite_at(const Monomial &m, std::size_t position, const OperadConfig &config);

/// Rewrites to a fixed point. With check_measure, a non-decreasing step throws
/// std::logic_error.
OperadElement normal_form(const OperadElement &e, const OperadConfig &config, const ReductionOptions &options = {});

/// All monomials with k vertices, in code order.
std::vector<Monomial> all_monomials(std::size_t k);
/// Monomials with k vertices that admit no rewrite.
std::vector<Monomial> normal_monomials(std::size_t k, const OperadConfig &config);

/// theta (or gamma) in the free operad, computed from the unit and
/// generator values through the two axioms
///   theta(a ∘_i b) = theta(a) ∘_{i-1} b          (i > 1)
///   theta(a ∘_1 b) = ∓(-1)^{ab} theta(b) ∘_max theta(a)
/// with the leading minus for anticyclic structures only.
OperadElement cyclic_transport_free(const OperadElement &e, const OperadConfig &config);
/// cyclic_transport_free followed by normal_form.
OperadElement cyclic_transport(const OperadElement &e, const OperadConfig &config);

/// Q_| = 1, Q_{(x,y)} = (-1)^{|x|} (m ∘_1 Q_x) ∘_max Q_y, in the V configuration.
OperadElement q_element(const BinaryTree &x);
/// Binary tree of a normal V monomial: vertex -> node with (first, third) subtrees.
BinaryTree shape_of(const Monomial &m);

/// psi(Q_x) = P_x. Throws std::invalid_argument on a non-normal term.
K0Vector psi(const OperadElement &e);
/// sum_x c_x P_x -> sum_x c_x Q_x
OperadElement psi_inverse(const K0Vector &v);

struct CriticalPairReport {
    Monomial overlap;
    OperadElement expected;
    OperadElement left;
    OperadElement right;
    std::vector<RewriteStep> left_trace;
    std::vector<RewriteStep> right_trace;
    bool agree = false;
};

/// Reduces the overlap (m∘2m)∘3m = m∘2(m∘2m) starting from the outer redex
/// (leftmost strategy) and from the inner redex (rightmost strategy) and
/// compares both with m∘1(m∘3m) + m∘3(m∘1m). Throws std::logic_error if the
/// reductions disagree.
CriticalPairReport critical_pair_check();

} // namespace ternop
