#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "ternop/exactalg.hpp"
#include "ternop/grothendieck.hpp"
#include "ternop/operad.hpp"
#include "ternop/verify.hpp"

using namespace ternop;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::string &)> run;
};

// Runs suites with their default ranges; collects failing check names.
bool suites_pass(const std::vector<std::string> &suites, std::string &note)
{
    bool ok = true;
    for (const auto &s : suites) {
        VerifyOptions opt;
        opt.seed = 42;
        const auto report = run_suite(s, opt);
        for (const auto &c : report.checks)
            if (!c.passed) {
                ok = false;
                note += " [" + s + ": " + c.name + "]";
            }
    }
    return ok;
}

bool fail_note(bool ok, std::string &note, const std::string &what)
{
    if (!ok)
        note += " [" + what + "]";
    return ok;
}

bool dimension(std::string &note)
{
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    bool ok = true;
    for (std::size_t n = 0; n <= 6; ++n)
        ok &= fail_note(normal_monomials(n, config_V()).size() == catalan[n], note, "count n=" + std::to_string(n));
    return suites_pass({"dimension"}, note) && ok;
}

bool groebner(std::string &note)
{
    const auto V = config_V();
    const auto g = OperadElement::generator();
    const auto target = compose(g, 1, compose(g, 3, g, V), V) + compose(g, 3, compose(g, 1, g, V), V);
    const auto r = critical_pair_check();
    bool ok = fail_note(r.expected == target, note, "critical pair target");
    ok &= fail_note(r.agree, note, "critical pair reductions differ");
    return suites_pass({"groebner-confluence"}, note) && ok;
}

bool charpoly_main(std::string &note)
{
    bool ok = fail_note(closed_charpoly(1) == IntPolynomial{1, 1}, note, "n=1 spot value");
    ok &= fail_note(closed_charpoly(2) == IntPolynomial{1, 1, 1}, note, "n=2 spot value");
    ok &= fail_note(charpoly(theta_matrix(1)) == IntPolynomial{1, 1}, note, "n=1 matrix");
    ok &= fail_note(charpoly(theta_matrix(2)) == IntPolynomial{1, 1, 1}, note, "n=2 matrix");
    return suites_pass({"charpoly"}, note) && ok;
}

bool virtual_module(std::string &note)
{
    bool ok = true;
    for (long n = 1; n <= 7; ++n) {
        const auto pre = closed_charpoly_presubstitution(n);
        const auto m = theta_matrix(static_cast<std::size_t>(n));
        ok &= fail_note(substitute_sign(pre, sign_pow(n + 1)) == charpoly(m), note, "matrix n=" + std::to_string(n));
    }
    return suites_pass({"somme-de-m"}, note) && ok;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "dimension of V(2n+1) is Catalan(n), n <= 6", dimension},
        {2, "Groebner confluence", groebner},
        {3, "operad and anticyclic axioms", [](std::string &s) { return suites_pass({"operad-axioms"}, s); }},
        {4, "psi intertwines theta_V and theta, n <= 4", [](std::string &s) { return suites_pass({"theo-idem"}, s); }},
        {5, "recursive characterization of theta, n <= 6",
         [](std::string &s) { return suites_pass({"theta-characterization"}, s); }},
        {6, "theta^(2n+2) = identity, n <= 7", [](std::string &s) { return suites_pass({"periodicity"}, s); }},
        {7, "characteristic polynomial of theta, n <= 7", charpoly_main},
        {8, "product descriptions and dendriform lemma",
         [](std::string &s) { return suites_pass({"product-descriptions", "dendriform-lemma"}, s); }},
        {9, "Legendre duality of ch_W and ch_V", [](std::string &s) { return suites_pass({"legendre"}, s); }},
        {10, "ch_W by induction, involution square, series identity, b_n",
         [](std::string &s) { return suites_pass({"chw-induction", "involution-square", "series-identity"}, s); }},
        {11, "virtual module and sign substitution, n <= 7", virtual_module},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        std::string note;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception &e) {
            note += std::string(" [exception: ") + e.what() + "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": " << c.title << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)" << note << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
