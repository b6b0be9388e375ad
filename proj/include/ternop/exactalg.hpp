#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ternop/matrix.hpp"
#include "ternop/polynomial.hpp"

namespace ternop {

/// det(xI - M), exact. Computed modulo enough word-sized primes to cover the
/// coefficient bound sum_k |c_k| <= prod_i (1 + |row_i|_2), then lifted by CRT.
/// The result is self-checked against the trace and an independently
/// computed determinant; a mismatch throws std::logic_error.
IntPolynomial charpoly(const IntMatrix &m);

/// Exact determinant by modular elimination and CRT.
BigInt determinant(const IntMatrix &m);

/// Number of CRT primes charpoly() uses for m.
std::size_t charpoly_prime_count(const IntMatrix &m);

/// prod_d (x^d - 1)^{e_d}, with the negative exponents divided out exactly.
IntPolynomial cyclotomic_quotient(const std::map<long, BigInt> &exponents);

/// Net exponents e_d of (x^d - 1) in the characteristic polynomial of
/// (-1)^{n+1} theta on Y_n: (x^{2n+2}-1)^{c_n} / (prod_{d|2n+2} (x^d-1)^{b_d})^{(-1)^{n+1}}.
std::map<long, BigInt> presubstitution_exponents(long n);

/// Characteristic polynomial of (-1)^{n+1} theta, before the sign substitution.
IntPolynomial closed_charpoly_presubstitution(long n);

/// Characteristic polynomial of the Coxeter transformation of Y_n: the
/// pre-substitution form with x -> (-1)^{n+1} x, renormalised to be monic.
IntPolynomial closed_charpoly(long n);

/// Same polynomial evaluated directly from the factors x^d - (-1)^{d(n+1)}.
IntPolynomial closed_charpoly_direct(long n);

/// s^{deg p} p(s x) for s = +-1: the characteristic polynomial of s M when p is that of M.
IntPolynomial substitute_sign(const IntPolynomial &p, int s);

} // namespace ternop
