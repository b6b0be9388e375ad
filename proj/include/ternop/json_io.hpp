#pragma once

#include <json.hpp>

#include "ternop/bigint.hpp"
#include "ternop/grothendieck.hpp"
#include "ternop/matrix.hpp"
#include "ternop/operad.hpp"
#include "ternop/polynomial.hpp"
#include "ternop/symfun.hpp"

namespace ternop {

using Json = nlohmann::ordered_json;

/// Integers fitting in 64 bits become JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt &v);
BigInt bigint_from_json(const Json &j);

/// {"n":…, "basis":"S"|"P"|"I", "coords":[…]}
Json to_json(const K0Vector &v);
K0Vector k0_from_json(const Json &j);

/// {"rows":r, "cols":c, "entries":[[…],…]}
Json to_json(const IntMatrix &m);
IntMatrix matrix_from_json(const Json &j);

/// {"coeffs":[a0, a1, …]}
Json to_json(const IntPolynomial &p);
IntPolynomial polynomial_from_json(const Json &j);

/// {"N":…, "terms":[{"partition":[…], "num":…, "den":…}]}, terms by degree then partition.
Json to_json(const SymFun &f);
SymFun symfun_from_json(const Json &j);

/// [{"coeff":…, "tree":"m[…]"}, …]
Json to_json(const OperadElement &e);
OperadElement operad_from_json(const Json &j);

} // namespace ternop
