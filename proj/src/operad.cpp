#include "ternop/operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternop {

// ---------------------------------------------------------------- monomials

std::size_t subtree_end(std::string_view code, std::size_t pos)
{
    std::size_t open = 1;
    while (open > 0) {
        if (pos >= code.size())
            throw std::invalid_argument("truncated monomial code");
        open += (code[pos] == 'm') ? 2 : -1;
        ++pos;
    }
    return pos;
}

Monomial Monomial::from_code(std::string code)
{
    for (char c : code)
        if (c != 'm' && c != '*')
            throw std::invalid_argument("monomial code may only contain 'm' and '*'");
    if (code.empty() || subtree_end(code, 0) != code.size())
        throw std::invalid_argument("malformed monomial code '" + code + "'");
    Monomial m;
    m.code_ = std::move(code);
    return m;
}

namespace {

void parse_bracket(std::string_view s, std::size_t &pos, std::string &out)
{
    auto fail = [&](const std::string &what) { throw ParseError(what, pos); };
    if (pos >= s.size())
        fail("unexpected end of input");
    if (s[pos] == '*') {
        out += '*';
        ++pos;
        return;
    }
    if (s[pos] != 'm')
        fail(std::string("unexpected character '") + s[pos] + "'");
    ++pos;
    if (pos >= s.size() || s[pos] != '[')
        fail("expected '['");
    ++pos;
    out += 'm';
    for (int child = 0; child < 3; ++child) {
        parse_bracket(s, pos, out);
        const char expected = child < 2 ? ',' : ']';
        if (pos >= s.size() || s[pos] != expected)
            fail(std::string("expected '") + expected + "'");
        ++pos;
    }
}

void bracket_text(std::string_view code, std::size_t &pos, std::string &out)
{
    if (code[pos++] == '*') {
        out += '*';
        return;
    }
    out += "m[";
    for (int child = 0; child < 3; ++child) {
        if (child > 0)
            out += ',';
        bracket_text(code, pos, out);
    }
    out += ']';
}

} // namespace

Monomial Monomial::parse(std::string_view text)
{
    std::string code;
    std::size_t pos = 0;
    parse_bracket(text, pos, code);
    if (pos != text.size())
        throw ParseError("trailing characters", pos);
    return from_code(std::move(code));
}

Monomial Monomial::vertex(const Monomial &a, const Monomial &b, const Monomial &c)
{
    Monomial m;
    m.code_ = "m" + a.code_ + b.code_ + c.code_;
    return m;
}

std::size_t Monomial::vertices() const noexcept
{
    return static_cast<std::size_t>(std::count(code_.begin(), code_.end(), 'm'));
}

std::array<Monomial, 3> Monomial::children() const
{
    if (is_unit())
        throw std::logic_error("the unit has no children");
    std::array<Monomial, 3> out;
    std::size_t pos = 1;
    for (auto &child : out) {
        const std::size_t end = subtree_end(code_, pos);
        child.code_ = code_.substr(pos, end - pos);
        pos = end;
    }
    return out;
}

std::string Monomial::to_string() const
{
    std::string out;
    std::size_t pos = 0;
    bracket_text(code_, pos, out);
    return out;
}

// ------------------------------------------------------------------ configs

OperadConfig config_V()
{
    OperadConfig c;
    c.name = "V";
    c.odd_generator = true;
    c.rules = {RewriteRule{2, {{1, 1}, {3, 1}}}};
    c.transport = TransportKind::Anticyclic;
    c.generator_transport = -1;
    c.measure_weights = {0, 1, 0};
    return c;
}

OperadConfig config_V_cyclic()
{
    OperadConfig c = config_V();
    c.name = "V-cyclic";
    c.transport = TransportKind::Cyclic;
    c.generator_transport = 1;
    return c;
}

OperadConfig config_W()
{
    OperadConfig c;
    c.name = "W";
    c.odd_generator = false;
    c.rules = {RewriteRule{2, {{1, -1}}}, RewriteRule{3, {{1, 1}}}};
    c.transport = TransportKind::Cyclic;
    c.generator_transport = -1;
    c.measure_weights = {0, 1, 2};
    return c;
}

// ----------------------------------------------------------------- elements

OperadElement::OperadElement(const Monomial &m, BigInt coeff) : arity_(m.arity())
{
    if (coeff != 0)
        terms_.emplace(m, std::move(coeff));
}

BigInt OperadElement::coeff(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void OperadElement::add(const Monomial &m, const BigInt &c)
{
    if (m.arity() != arity_) {
        if (!terms_.empty())
            throw std::invalid_argument("OperadElement: mixed arities " + std::to_string(arity_) + " and " +
                                        std::to_string(m.arity()));
        arity_ = m.arity();
    }
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::string OperadElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &[m, c] : terms_) {
        const bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const BigInt a = neg ? BigInt(-c) : c;
        if (a != 1)
            out += a.str() + " ";
        out += m.to_string();
    }
    return out;
}

OperadElement OperadElement::operator-() const
{
    OperadElement r = *this;
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

OperadElement &OperadElement::operator+=(const OperadElement &o)
{
    if (terms_.empty() && !o.terms_.empty())
        arity_ = o.arity_;
    for (const auto &[m, c] : o.terms_)
        add(m, c);
    return *this;
}

OperadElement &OperadElement::operator-=(const OperadElement &o) { return *this += -o; }

OperadElement operator*(const BigInt &c, OperadElement e)
{
    if (c == 0)
        return OperadElement(e.arity());
    for (auto &[m, v] : e.terms_)
        v *= c;
    return e;
}

// -------------------------------------------------------------- composition

namespace {

int koszul(bool odd, std::size_t a, std::size_t b) { return (odd && (a * b) % 2 == 1) ? -1 : 1; }

std::size_t weight(const OperadElement &e, const OperadConfig &config)
{
    return config.odd_generator ? e.vertices() : 0;
}

} // namespace

OperadElement compose(const OperadElement &a, std::size_t i, const OperadElement &b, const OperadConfig &config)
{
    if (i < 1 || i > a.arity())
        throw std::out_of_range("compose: position " + std::to_string(i) + " outside 1.." + std::to_string(a.arity()));
    OperadElement out(a.arity() + b.arity() - 1);
    for (const auto &[ma, ca] : a.terms()) {
        const std::string &code = ma.code();
        std::size_t leaf = 0, pos = 0;
        for (; pos < code.size(); ++pos)
            if (code[pos] == '*' && ++leaf == i)
                break;
        const auto after = static_cast<std::size_t>(std::count(code.begin() + static_cast<long>(pos), code.end(), 'm'));
        for (const auto &[mb, cb] : b.terms()) {
            std::string grafted = code.substr(0, pos) + mb.code() + code.substr(pos + 1);
            const int sign = koszul(config.odd_generator, mb.vertices(), after);
            out.add(Monomial::from_code(std::move(grafted)), sign * ca * cb);
        }
    }
    return out;
}

OperadElement compose_max(const OperadElement &a, const OperadElement &b, const OperadConfig &config)
{
    return compose(a, a.arity(), b, config);
}

OperadElement operad_over(const OperadElement &a, const OperadElement &b, const OperadConfig &config)
{
    return koszul(true, weight(a, config), weight(b, config)) * compose(b, 1, a, config);
}

OperadElement operad_star(const OperadElement &a, const OperadElement &b, const OperadConfig &config)
{
    return compose_max(a, b, config);
}

// ---------------------------------------------------------------- rewriting

namespace {

struct VertexView {
    std::size_t begin;
    std::size_t end;
    std::array<std::size_t, 4> child_bounds; // child k spans [child_bounds[k], child_bounds[k+1])
};

VertexView view_vertex(std::string_view code, std::size_t pos)
{
    VertexView v{pos, 0, {}};
    std::size_t p = pos + 1;
    v.child_bounds[0] = p;
    for (int k = 0; k < 3; ++k) {
        p = subtree_end(code, p);
        v.child_bounds[k + 1] = p;
    }
    v.end = p;
    return v;
}

const RewriteRule *rule_at(std::string_view code, const VertexView &v, const OperadConfig &config)
{
    for (const auto &rule : config.rules)
        if (code[v.child_bounds[rule.slot - 1]] == 'm')
            return &rule;
    return nullptr;
}

std::uint64_t measure_walk(std::string_view code, std::size_t &pos, std::uint64_t acc, const OperadConfig &config)
{
    if (code[pos++] == '*')
        return 0;
    std::uint64_t total = acc;
    for (int k = 0; k < 3; ++k)
        total += measure_walk(code, pos, acc + static_cast<std::uint64_t>(config.measure_weights[k]), config);
    return total;
}

} // namespace

std::vector<std::size_t> redexes(const Monomial &m, const OperadConfig &config)
{
    std::vector<std::size_t> out;
    const std::string &code = m.code();
    for (std::size_t pos = 0; pos < code.size(); ++pos)
        if (code[pos] == 'm' && rule_at(code, view_vertex(code, pos), config))
            out.push_back(pos);
    return out;
}

bool is_normal(const Monomial &m, const OperadConfig &config) { return redexes(m, config).empty(); }

bool is_normal(const OperadElement &e, const OperadConfig &config)
{
    return std::all_of(e.terms().begin(), e.terms().end(),
                       [&](const auto &term) { return is_normal(term.first, config); });
}

std::uint64_t termination_measure(const Monomial &m, const OperadConfig &config)
{
    std::size_t pos = 0;
    return measure_walk(m.code(), pos, 0, config);
}

OperadElement rewrite_at(const Monomial &m, std::size_t position, const OperadConfig &config)
{
    const std::string &code = m.code();
    if (position >= code.size() || code[position] != 'm')
        throw std::invalid_argument("rewrite_at: no vertex at offset " + std::to_string(position));
    const VertexView outer = view_vertex(code, position);
    const RewriteRule *rule = rule_at(code, outer, config);
    if (!rule)
        throw std::invalid_argument("rewrite_at: no rule applies at offset " + std::to_string(position));

    // the five hanging subtrees, left to right
    const VertexView inner = view_vertex(code, outer.child_bounds[rule->slot - 1]);
    std::vector<std::string_view> hanging;
    const std::string_view sv(code);
    for (int k = 0; k < 3; ++k) {
        if (k == rule->slot - 1) {
            for (int j = 0; j < 3; ++j)
                hanging.push_back(sv.substr(inner.child_bounds[j], inner.child_bounds[j + 1] - inner.child_bounds[j]));
        } else {
            hanging.push_back(sv.substr(outer.child_bounds[k], outer.child_bounds[k + 1] - outer.child_bounds[k]));
        }
    }
    std::array<std::size_t, 6> prefix{};
    for (int k = 0; k < 5; ++k)
        prefix[k + 1] = prefix[k] + static_cast<std::size_t>(std::count(hanging[k].begin(), hanging[k].end(), 'm'));

    const std::string head = code.substr(0, position);
    const std::string tail = code.substr(outer.end);
    OperadElement out(m.arity());
    for (const auto &[slot, coeff] : rule->rhs) {
        std::string pattern = "m";
        for (int k = 0; k < 3; ++k) {
            if (k == slot - 1) {
                pattern += 'm';
                for (int j = 0; j < 3; ++j)
                    pattern += hanging[k + j];
            } else {
                pattern += hanging[k < slot - 1 ? k : k + 2];
            }
        }
        // inner vertex moves from behind A_1..A_{s-1} to behind A_1..A_{t-1}
        const int sign = koszul(config.odd_generator, 1, prefix[rule->slot - 1] + prefix[slot - 1]);
        out.add(Monomial::from_code(head + pattern + tail), sign * coeff);
    }
    return out;
}

OperadElement normal_form(const OperadElement &e, const OperadConfig &config, const ReductionOptions &options)
{
    if (options.strategy == Strategy::Random && !options.rng)
        throw std::invalid_argument("normal_form: random strategy needs an rng");
    OperadElement current = e;
    for (;;) {
        const Monomial *target = nullptr;
        std::vector<std::size_t> sites;
        for (const auto &[m, c] : current.terms()) {
            sites = redexes(m, config);
            if (!sites.empty()) {
                target = &m;
                break;
            }
        }
        if (!target)
            return current;
        std::size_t site = sites.front();
        if (options.strategy == Strategy::Rightmost)
            site = sites.back();
        else if (options.strategy == Strategy::Random)
            site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(*options.rng)];

        const Monomial mono = *target;
        const BigInt coeff = current.coeff(mono);
        const OperadElement replaced = rewrite_at(mono, site, config);
        if (options.check_measure) {
            const auto before = termination_measure(mono, config);
            for (const auto &[m, c] : replaced.terms())
                if (termination_measure(m, config) >= before)
                    throw std::logic_error("termination measure did not decrease rewriting " + mono.to_string());
        }
        current.add(mono, -coeff);
        current += coeff * replaced;
        if (options.trace)
            options.trace->push_back(RewriteStep{mono, site, current});
    }
}

std::vector<Monomial> all_monomials(std::size_t k)
{
    // codes[j] = all codes with j vertices
    std::vector<std::vector<std::string>> codes{{"*"}};
    for (std::size_t j = 1; j <= k; ++j) {
        std::vector<std::string> level;
        for (std::size_t a = 0; a < j; ++a)
            for (std::size_t b = 0; a + b < j; ++b) {
                const std::size_t c = j - 1 - a - b;
                for (const auto &ca : codes[a])
                    for (const auto &cb : codes[b])
                        for (const auto &cc : codes[c])
                            level.push_back("m" + ca + cb + cc);
            }
        codes.push_back(std::move(level));
    }
    std::sort(codes[k].begin(), codes[k].end());
    std::vector<Monomial> out;
    out.reserve(codes[k].size());
    for (auto &code : codes[k])
        out.push_back(Monomial::from_code(std::move(code)));
    return out;
}

std::vector<Monomial> normal_monomials(std::size_t k, const OperadConfig &config)
{
    std::vector<Monomial> out;
    for (auto &m : all_monomials(k))
        if (is_normal(m, config))
            out.push_back(std::move(m));
    return out;
}

// ------------------------------------------------------ cyclic transport

namespace {

OperadElement transport_monomial(const Monomial &t, const OperadConfig &config)
{
    const int unit_sign = config.transport == TransportKind::Anticyclic ? -1 : 1;
    if (t.is_unit())
        return OperadElement(t, unit_sign);
    if (t == Monomial::generator())
        return OperadElement(t, config.generator_transport);

    const bool odd = config.odd_generator;
    const auto kids = t.children();
    const Monomial leaf;
    if (!kids[0].is_unit()) {
        // t = sigma * (u ∘_1 b) with u = t pruned at its first subtree
        const Monomial &b = kids[0];
        const Monomial u = Monomial::vertex(leaf, kids[1], kids[2]);
        const int sigma = koszul(odd, b.vertices(), u.vertices() - 1);
        const int axiom = unit_sign * koszul(odd, u.vertices(), b.vertices());
        const OperadElement tb = transport_monomial(b, config);
        const OperadElement tu = transport_monomial(u, config);
        return BigInt(sigma * axiom) * compose_max(tb, tu, config);
    }
    // first subtree is a leaf: t = sigma * (v ∘_k b) for the leftmost nontrivial slot k > 1
    const std::size_t k = kids[1].is_unit() ? 3 : 2;
    const Monomial &b = kids[k - 1];
    const Monomial v = k == 2 ? Monomial::vertex(leaf, leaf, kids[2]) : Monomial::vertex(leaf, leaf, leaf);
    const std::size_t after = k == 2 ? kids[2].vertices() : 0;
    const int sigma = koszul(odd, b.vertices(), after);
    return BigInt(sigma) * compose(transport_monomial(v, config), k - 1, OperadElement(b), config);
}

} // namespace

OperadElement cyclic_transport_free(const OperadElement &e, const OperadConfig &config)
{
    OperadElement out(e.arity());
    for (const auto &[m, c] : e.terms())
        out += c * transport_monomial(m, config);
    return out;
}

OperadElement cyclic_transport(const OperadElement &e, const OperadConfig &config)
{
    return normal_form(cyclic_transport_free(e, config), config);
}

// ------------------------------------------------------------- Q basis, psi

OperadElement q_element(const BinaryTree &x)
{
    if (x.is_leaf())
        return OperadElement::unit();
    const OperadConfig v = config_V();
    const OperadElement qx = q_element(x.left());
    const OperadElement qy = q_element(x.right());
    const OperadElement inner = compose(OperadElement::generator(), 1, qx, v);
    return BigInt(sign_pow(static_cast<long long>(x.left().size()))) * compose_max(inner, qy, v);
}

BinaryTree shape_of(const Monomial &m)
{
    if (m.is_unit())
        return BinaryTree::leaf();
    const auto kids = m.children();
    if (!kids[1].is_unit())
        throw std::invalid_argument("shape_of: monomial " + m.to_string() + " has an internal middle child");
    return BinaryTree::node(shape_of(kids[0]), shape_of(kids[2]));
}

K0Vector psi(const OperadElement &e)
{
    const OperadConfig v = config_V();
    K0Vector out(e.vertices(), Basis::P);
    for (const auto &[m, c] : e.terms()) {
        if (!is_normal(m, v))
            throw std::invalid_argument("psi: term " + m.to_string() + " is not in normal form");
        const BinaryTree x = shape_of(m);
        const BigInt sign = q_element(x).coeff(m);
        out.coords[rank(x)] += c * sign;
    }
    return out;
}

OperadElement psi_inverse(const K0Vector &v)
{
    const K0Vector p = change_basis(v, Basis::P);
    const auto &elems = enumerate(p.n);
    OperadElement out(2 * p.n + 1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (p.coords[i] != 0)
            out += p.coords[i] * q_element(elems[i]);
    return out;
}

CriticalPairReport critical_pair_check()
{
    const OperadConfig v = config_V();
    const OperadElement g = OperadElement::generator();
    CriticalPairReport report;
    const OperadElement overlap = compose(compose(g, 2, g, v), 3, g, v);
    if (overlap != compose(g, 2, compose(g, 2, g, v), v))
        throw std::logic_error("critical pair: the two overlap expressions differ");
    report.overlap = overlap.terms().begin()->first;
    report.expected = compose(g, 1, compose(g, 3, g, v), v) + compose(g, 3, compose(g, 1, g, v), v);

    ReductionOptions left{Strategy::Leftmost, nullptr, &report.left_trace, true};
    ReductionOptions right{Strategy::Rightmost, nullptr, &report.right_trace, true};
    report.left = normal_form(overlap, v, left);
    report.right = normal_form(overlap, v, right);
    report.agree = report.left == report.right && report.left == report.expected;
    if (!report.agree)
        throw std::logic_error("critical pair reductions disagree: " + report.left.to_string() + " vs " +
                               report.right.to_string());
    return report;
}

} // namespace ternop
