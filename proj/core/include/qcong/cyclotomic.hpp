#pragma once

// Cyclotomic polynomials and the small arithmetic helpers around them.

#include <cstdint>
#include <optional>
#include <vector>

#include "qcong/bigpoly.hpp"

namespace qcong {

// All positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t totient(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
// Prime factors of |n|, ascending and without repetition.
std::vector<std::int64_t> prime_factors(std::int64_t n);
// p if d = p^k with p prime and k >= 1, otherwise nullopt.
std::optional<std::int64_t> prime_power_base(std::int64_t d);

// Phi_d(q) for d >= 1. Results are memoised in a process-wide, thread-safe
// cache; the returned reference stays valid for the lifetime of the process.
const IntPoly &phi(std::int64_t d);

// Phi_d(1): p when d is a power of the prime p, 1 otherwise. Requires d >= 2.
std::int64_t phi_at_one(std::int64_t d);

// [n]_q = (1 - q^n)/(1 - q). For n < 0 this is the Laurent value -q^n [-n]_q.
LaurentInt q_int(std::int64_t n);

// Exponent of (1 - q^h) in the expansion
//   prod_d Phi_d^{e_d} = sign * prod_h (1 - q^h)^{c_h},
// obtained by Moebius inversion of 1 - q^h = prod_{d | h} Phi_d. Entries with
// c_h == 0 are dropped. The sign is -1 exactly when e_1 is odd.
struct BinomialForm {
    int sign = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> powers; // (h, c_h), h ascending
};
BinomialForm to_binomial_form(const std::vector<std::pair<std::int64_t, std::int64_t>> &cyclotomic_powers);

// Multiplies out a product of binomials (1 - q^h)^{c_h}. Positive powers are
// applied first, then the negative ones are divided out exactly; throws
// NotDivisible if the product is not a polynomial.
IntPoly expand_binomial_form(const BinomialForm &form, IntPoly seed = IntPoly::constant(1));

} // namespace qcong
