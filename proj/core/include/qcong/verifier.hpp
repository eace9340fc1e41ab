#pragma once

// End-to-end checks of the divisibility and q-congruence statements.
// Every verify_* function is pure and returns a Verdict; failures carry a
// witness with enough data to redo the computation by hand.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qcong/bigpoly.hpp"
#include "qcong/constructs.hpp"
#include "qcong/cycmodfield.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// A polynomial-valued field of a verdict. Reports digest it unless asked for
// the full coefficient list.
struct PolyValue {
    LaurentInt poly;
    std::string factored; // empty when no closed form is attached
};

// Exact integers and rationals are carried as decimal strings.
using Value = std::variant<std::string, PolyValue>;

// Only the indices a claim depends on are set.
struct VerdictParams {
    std::optional<std::int64_t> r, m, n, rho, d, h;

    static VerdictParams of(const Params &p) { return {p.r, p.m, p.n, p.rho, std::nullopt, std::nullopt}; }
    [[nodiscard]] std::string to_string() const;
};

struct Verdict {
    std::string claim;
    VerdictParams params;
    bool pass = false;
    Value lhs;
    Value rhs;
    std::vector<std::pair<std::string, Value>> witness;
};

// a/b == 0 (mod N) means gcd(b, N) = 1 and N | a.
struct RationalModInt {
    mpq_class value;
    mpz_class modulus;

    // nullopt when gcd(b, N) != 1 and the congruence is undefined.
    [[nodiscard]] std::optional<bool> is_zero() const;
};

// 2-adic order; a must be nonzero.
std::int64_t ord2(const mpz_class &a);

// sum_{k<n} (2k + alpha) binom(-alpha, k)^rho == 0 (mod N_{alpha,n}), alpha = r/m,
// cross-checked against the scaled form sum (2mk + r) binom(-r/m, k)^rho.
// Throws DomainError when alpha is an integer.
Verdict verify_theorem1(const Params &p);

// sum_{k<n} (4k+1) binom(2k,k)^rho (-4)^{rho(n-1-k)} == 0 (mod 2^{rho-2} n binom(2n,n)),
// plus binom(-1/2, k) (-4)^k == binom(2k, k) for k < n. Requires rho >= 2, n >= 2.
Verdict verify_corollary2(std::int64_t rho, std::int64_t n);

// Which global q-sum is cleared and divided by A*C.
enum class QSumForm {
    // sum_k q^{-mk} [2mk+r]_q ((q^{-r};q^{-m})_k / (q^m;q^m)_k)^rho. Each summand
    // is the unit (-1)^{rho k} q^{-rho(rk + m k(k-1)/2)} times the plain one, which
    // is congruent to the h-dependent weight modulo every Phi_d with gcd(d,m)=1.
    kReflected,
    // sum_k q^{mk} [2mk+r]_q ((q^r;q^m)_k / (q^m;q^m)_k)^rho, kept for comparison;
    // it is not divisible by A*C in general (fails already at r=1, m=2, n=2).
    kPlain,
};

// B_{m,n}^rho times the chosen q-sum, as an exact Laurent polynomial over Z.
// Throws NotDivisible if B^rho fails to clear a denominator.
LaurentInt cleared_qsum(const Params &p, QSumForm form = QSumForm::kReflected);

// Exact divisibility of the cleared q-sum by A_{r,m,n} C_{m,n}.
Verdict verify_qcongruence(const Params &p, QSumForm form = QSumForm::kReflected);

// The q = 1 specialisation of the cleared identity: P(1) = B(1)^rho * sum (2mk+r) binom^rho,
// A(1)C(1) = N, content(A C) = 1, every prime of B(1) divides m, N | P(1), and the
// resulting verdict agrees with verify_theorem1. Requires m >= 2.
Verdict verify_specialization(const Params &p);

// Both of the above from a single expansion.
std::pair<Verdict, Verdict> verify_qcongruence_and_specialization(const Params &p);

// 2-adic bounds used to pass from the odd part of n binom(2n,n) to the full modulus.
Verdict verify_2adic(std::int64_t rho, std::int64_t n);

// sum_{k<n} (5k+1) binom(2k,k)^2 binom(3k,k) (-192)^{n-1-k} == 0 (mod n binom(2n,n)).
// Conjectural; a failure is data, not a bug.
Verdict verify_sun(std::int64_t n);

// (q^r;q^m)_n/(q^m;q^m)_n * B_{m,n} == (-1)^delta q^Delta prod_{d in S} Phi_d,
// delta and Delta counted directly from r + jm < 0.
Verdict verify_ratio_factorization(std::int64_t r, std::int64_t m, std::int64_t n);

// A_{r,m,n}(1) C_{m,n}(1) == N_{r/m,n}, with A and C also disjoint from B.
Verdict verify_ac_at_one(std::int64_t r, std::int64_t m, std::int64_t n);

// prod_{d | n, d >= 2} Phi_d == [n]_q, and Phi_d(1) agrees with the prime-power rule.
Verdict verify_cyclotomic(std::int64_t n);

// [n k]_q / [n]_q is a polynomial congruent to k modulo [n]_q for 1 <= k <= k_max.
Verdict verify_qint_quotient(std::int64_t n, std::int64_t k_max);

// Per-d congruences packaged as verdicts.
Verdict verify_vanishing_factor(std::int64_t r, std::int64_t m, std::int64_t d);
Verdict verify_qlucas(std::int64_t r, std::int64_t m, std::int64_t d, std::int64_t s_max);
Verdict verify_block_sum(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d);
Verdict verify_block_recurrence(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d,
                                std::int64_t s_max);
Verdict verify_sign_reduction(std::int64_t r, std::int64_t m, std::int64_t d, std::int64_t s_max);
Verdict verify_half_period(std::int64_t d);
Verdict verify_antisymmetry(std::int64_t h, std::int64_t rho);

// Claims whose failure means a proven statement was violated. Only "sun" is not.
bool is_proven_claim(const std::string &claim);

} // namespace qcong
