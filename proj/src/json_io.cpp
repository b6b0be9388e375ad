#include "ternop/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternop {

Json bigint_to_json(const BigInt &v)
{
    if (fits_int64(v))
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt bigint_from_json(const Json &j)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const K0Vector &v)
{
    Json coords = Json::array();
    for (const auto &c : v.coords)
        coords.push_back(bigint_to_json(c));
    return Json{{"n", v.n}, {"basis", to_string(v.basis)}, {"coords", std::move(coords)}};
}

K0Vector k0_from_json(const Json &j)
{
    std::vector<BigInt> coords;
    for (const auto &c : j.at("coords"))
        coords.push_back(bigint_from_json(c));
    return K0Vector(j.at("n").get<std::size_t>(), parse_basis(j.at("basis").get<std::string>()), std::move(coords));
}

Json to_json(const IntMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(bigint_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json &j)
{
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto &entries = j.at("entries");
    if (entries.size() != m.rows())
        throw std::invalid_argument("matrix: row count mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (entries[i].size() != m.cols())
            throw std::invalid_argument("matrix: column count mismatch");
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(i, k) = bigint_from_json(entries[i][k]);
    }
    return m;
}

Json to_json(const IntPolynomial &p)
{
    Json coeffs = Json::array();
    for (const auto &c : p.coeffs())
        coeffs.push_back(bigint_to_json(c));
    return Json{{"coeffs", std::move(coeffs)}};
}

IntPolynomial polynomial_from_json(const Json &j)
{
    std::vector<BigInt> coeffs;
    for (const auto &c : j.at("coeffs"))
        coeffs.push_back(bigint_from_json(c));
    return IntPolynomial(std::move(coeffs));
}

Json to_json(const SymFun &f)
{
    std::vector<const SymFun::Terms::value_type *> order;
    for (const auto &term : f.terms())
        order.push_back(&term);
    std::stable_sort(order.begin(), order.end(),
                     [](auto *a, auto *b) { return degree(a->first) < degree(b->first); });
    Json terms = Json::array();
    for (const auto *term : order)
        terms.push_back(Json{{"partition", term->first},
                             {"num", bigint_to_json(numerator(term->second))},
                             {"den", bigint_to_json(denominator(term->second))}});
    return Json{{"N", f.truncation()}, {"terms", std::move(terms)}};
}

SymFun symfun_from_json(const Json &j)
{
    SymFun f(j.at("N").get<int>());
    for (const auto &t : j.at("terms")) {
        const BigInt den = bigint_from_json(t.at("den"));
        if (den == 0)
            throw std::invalid_argument("symfun: zero denominator");
        f.add(t.at("partition").get<Partition>(), Rational(bigint_from_json(t.at("num")), den));
    }
    return f;
}

Json to_json(const OperadElement &e)
{
    Json out = Json::array();
    for (const auto &[m, c] : e.terms())
        out.push_back(Json{{"coeff", bigint_to_json(c)}, {"tree", m.to_string()}});
    return out;
}

OperadElement operad_from_json(const Json &j)
{
    OperadElement e;
    for (const auto &t : j)
        e.add(Monomial::parse(t.at("tree").get<std::string>()), bigint_from_json(t.at("coeff")));
    return e;
}

} // namespace ternop
