#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "ternop/exactalg.hpp"
#include "ternop/grothendieck.hpp"
#include "ternop/json_io.hpp"
#include "ternop/operad.hpp"
#include "ternop/symfun.hpp"
#include "ternop/tamari.hpp"
#include "ternop/trees.hpp"
#include "ternop/verify.hpp"

using namespace ternop;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

// Largest n for which theta and its characteristic polynomial are computed.
constexpr std::size_t max_theta_n = 8;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "json";
    bool text() const { return format == "text"; }
};

void emit(const Output &out, const Json &doc, const std::string &text)
{
    if (out.text())
        std::cout << text;
    else
        std::cout << doc.dump(2) << "\n";
}

std::string matrix_text(const IntMatrix &m)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            s << (j ? " " : "") << m(i, j);
        s << "\n";
    }
    return s.str();
}

void require_poset_size(std::size_t n)
{
    if (n > max_poset_n)
        throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the supported bound " + std::to_string(max_poset_n));
}

int cmd_trees(const Output &out, std::size_t n)
{
    const auto &trees = enumerate(n);
    Json list = Json::array();
    std::ostringstream text;
    for (std::size_t r = 0; r < trees.size(); ++r) {
        list.push_back(serialize(trees[r]));
        text << r << "\t" << serialize(trees[r]) << "\n";
    }
    emit(out, Json{{"n", n}, {"count", trees.size()}, {"trees", list}}, text.str());
    return exit_pass;
}

int cmd_tamari(const Output &out, std::size_t n, bool covers, bool leq, bool mobius)
{
    require_poset_size(n);
    const TamariPoset poset = PosetCache::from_environment().load_or_build(n);
    Json doc{{"n", n}, {"elements", Json::array()}};
    std::ostringstream text;
    for (const auto &t : poset.elements())
        doc["elements"].push_back(serialize(t));
    if (covers || (!leq && !mobius)) {
        Json edges = Json::array();
        for (const auto &[hi, lo] : poset.covers()) {
            edges.push_back(Json::array({hi, lo}));
            text << serialize(poset.element(hi)) << " > " << serialize(poset.element(lo)) << "\n";
        }
        doc["covers"] = edges;
    }
    if (leq) {
        IntMatrix m(poset.size(), poset.size());
        for (std::size_t i = 0; i < poset.size(); ++i)
            for (std::size_t j = 0; j < poset.size(); ++j)
                m(i, j) = poset.leq(i, j) ? 1 : 0;
        doc["leq"] = to_json(m);
        text << "leq[i][j] = 1 iff element i <= element j\n" << matrix_text(m);
    }
    if (mobius) {
        doc["mobius"] = to_json(poset.mobius());
        text << "mobius\n" << matrix_text(poset.mobius());
    }
    emit(out, doc, text.str());
    return exit_pass;
}

int cmd_product(const Output &out, const std::string &op, const std::string &basis_name, const std::string &xs,
                const std::string &ys)
{
    const Basis basis = parse_basis(basis_name);
    const BinaryTree x = parse_tree(xs), y = parse_tree(ys);
    require_poset_size(x.size() + y.size());
    const K0Vector a = K0Vector::unit(basis, x), b = K0Vector::unit(basis, y);
    K0Vector r;
    if (op == "star")
        r = star(a, b);
    else if (op == "over")
        r = over(a, b);
    else if (op == "under")
        r = under(a, b);
    else
        throw UsageError("unknown product '" + op + "'");
    r = change_basis(r, basis);
    Json terms = Json::array();
    std::ostringstream text;
    const auto &elems = enumerate(r.n);
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        if (r.coords[i] != 0) {
            terms.push_back(Json{{"tree", serialize(elems[i])}, {"coeff", bigint_to_json(r.coords[i])}});
            text << r.coords[i] << "\t" << basis_name << "_" << serialize(elems[i]) << "\n";
        }
    Json doc = to_json(r);
    doc["terms"] = terms;
    emit(out, doc, text.str());
    return exit_pass;
}

int cmd_theta(const Output &out, std::size_t n, bool charpoly_flag, bool closed)
{
    if (closed) {
        if (n < 1)
            throw UsageError("--closed needs n >= 1");
        const auto p = closed_charpoly(static_cast<long>(n));
        emit(out, to_json(p), p.to_string() + "\n");
        return exit_pass;
    }
    if (n > max_theta_n)
        throw ResourceLimitError("theta: n=" + std::to_string(n) + " exceeds the supported bound " +
                                 std::to_string(max_theta_n));
    const auto m = theta_matrix(n);
    if (charpoly_flag) {
        const auto p = charpoly(m);
        emit(out, to_json(p), p.to_string() + "\n");
        return exit_pass;
    }
    emit(out, to_json(m), matrix_text(m));
    return exit_pass;
}

int cmd_qbasis(const Output &out, const std::string &tree)
{
    const auto q = q_element(parse_tree(tree));
    emit(out, to_json(q), q.to_string() + "\n");
    return exit_pass;
}

int cmd_symfun(const Output &out, const std::string &which, int degree)
{
    if (degree < 0)
        throw UsageError("--degree must be nonnegative");
    SymFun f;
    if (which == "chv")
        f = ch_v(degree);
    else if (which == "chw")
        f = ch_w(degree);
    else if (which == "legendre")
        f = legendre_transform(-suspend(ch_w(degree)), degree);
    else
        throw UsageError("unknown series '" + which + "'");
    emit(out, to_json(f), f.to_string() + "\n");
    return exit_pass;
}

int cmd_verify(const Output &out, const std::string &suite, const VerifyOptions &options)
{
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
    const auto report = run_suite(suite, options);
    emit(out, report.to_json(), report.to_text());
    return report.passed() ? exit_pass : exit_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Tamari lattices, the ternary operad V and the Coxeter transformation"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::size_t n = 0;
    auto *trees = app.add_subcommand("trees", "List binary trees with n nodes in canonical order");
    trees->add_option("--n", n, "Number of internal nodes")->required();

    bool covers = false, leq = false, mobius = false;
    auto *tamari = app.add_subcommand("tamari", "Tamari poset on trees with n nodes");
    tamari->add_option("--n", n, "Number of internal nodes")->required();
    tamari->add_flag("--covers", covers, "Hasse diagram edges [upper, lower]");
    tamari->add_flag("--leq", leq, "Order matrix");
    tamari->add_flag("--mobius", mobius, "Mobius matrix");

    std::string op = "star", basis = "S", x, y;
    auto *product = app.add_subcommand("product", "Product of two basis elements");
    product->add_option("--op", op, "star, over or under")->check(CLI::IsMember({"star", "over", "under"}));
    product->add_option("--basis", basis, "S, P or I")->check(CLI::IsMember({"S", "P", "I"}));
    product->add_option("X", x, "First tree")->required();
    product->add_option("Y", y, "Second tree")->required();

    bool matrix_flag = false, charpoly_flag = false, closed_flag = false;
    auto *theta_cmd = app.add_subcommand("theta", "Coxeter transformation of the Tamari poset");
    theta_cmd->add_option("--n", n, "Number of internal nodes")->required();
    auto *mflag = theta_cmd->add_flag("--matrix", matrix_flag, "Matrix in the P basis (default)");
    auto *cflag = theta_cmd->add_flag("--charpoly", charpoly_flag, "Characteristic polynomial of the matrix");
    auto *clflag = theta_cmd->add_flag("--closed", closed_flag, "Closed-form characteristic polynomial");
    mflag->excludes(cflag)->excludes(clflag);
    cflag->excludes(clflag);

    std::string tree;
    auto *qbasis = app.add_subcommand("qbasis", "Q basis element of a tree");
    qbasis->add_option("--tree", tree, "Tree such as \"((..).)\"")->required();

    std::string which;
    int degree = 12;
    auto *symfun = app.add_subcommand("symfun", "Characteristic series");
    symfun->add_option("--which", which, "chv, chw or legendre")->required()->check(CLI::IsMember({"chv", "chw", "legendre"}));
    symfun->add_option("--degree", degree, "Truncation degree");

    std::string suite;
    VerifyOptions vopt;
    std::size_t max_n = 0, samples = 0;
    int vdegree = 0;
    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required();
    auto *max_n_opt = verify->add_option("--max-n", max_n, "Upper bound for n-ranged checks");
    verify->add_option("--seed", vopt.seed, "Random seed");
    auto *samples_opt = verify->add_option("--samples", samples, "Random sample count");
    auto *degree_opt = verify->add_option("--degree", vdegree, "Truncation degree for series checks");
    verify->add_flag("--timing", vopt.timing, "Include wall-clock duration in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*trees)
            return cmd_trees(out, n);
        if (*tamari)
            return cmd_tamari(out, n, covers, leq, mobius);
        if (*product)
            return cmd_product(out, op, basis, x, y);
        if (*theta_cmd)
            return cmd_theta(out, n, charpoly_flag, closed_flag);
        if (*qbasis)
            return cmd_qbasis(out, tree);
        if (*symfun)
            return cmd_symfun(out, which, degree);
        if (*verify) {
            if (*max_n_opt)
                vopt.max_n = max_n;
            if (*samples_opt)
                vopt.samples = samples;
            if (*degree_opt)
                vopt.degree = vdegree;
            return cmd_verify(out, suite, vopt);
        }
    } catch (const ResourceLimitError &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::length_error &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const ParseError &e) {
        std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
