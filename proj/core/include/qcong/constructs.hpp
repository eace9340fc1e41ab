#pragma once

// The combinatorial constructs attached to alpha = r/m:
// lambda_{r,m}(d), the index set S_{r,m}(n), the cyclotomic products
// A_{r,m,n}, B_{m,n}, C_{m,n}, and the integer N_{r/m,n}.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcong/bigpoly.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// One verification instance. gcd(r, m) = 1 and m, n, rho >= 1.
struct Params {
    std::int64_t r = 1;
    std::int64_t m = 2;
    std::int64_t n = 1;
    std::int64_t rho = 1;

    // Throws DomainError when the invariants above fail.
    void validate() const;
    [[nodiscard]] bool alpha_is_integral() const noexcept { return m == 1; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Params &, const Params &) = default;
};

// Unique lambda in [0, d-1] with d | r + lambda*m. Requires gcd(d, m) = 1.
std::int64_t lambda(std::int64_t r, std::int64_t m, std::int64_t d);

// Floor division rounding toward -infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

// S_{r,m}(n): d >= 2 coprime to m with floor((n-1-lambda)/d) == floor(n/d).
std::vector<std::int64_t> s_set(std::int64_t r, std::int64_t m, std::int64_t n);

// A_{r,m,n} = prod_{d in S_{r,m}(n)} Phi_d
FactoredQ a_factored(std::int64_t r, std::int64_t m, std::int64_t n);
IntPoly a_poly(std::int64_t r, std::int64_t m, std::int64_t n);

// B_{m,n} = prod_{d >= 2, gcd(d,m) > 1} Phi_d^{floor(n*gcd(d,m)/d)}. Does not depend on r.
FactoredQ b_factored(std::int64_t m, std::int64_t n);

// C_{m,n} = prod_{d | n, d >= 2, gcd(d,m) = 1} Phi_d
FactoredQ c_factored(std::int64_t m, std::int64_t n);
IntPoly c_poly(std::int64_t m, std::int64_t n);

// Value at q = 1 of a product of Phi_d (d >= 2) with nonnegative exponents,
// computed from Phi_d(1) without expanding.
mpz_class value_at_one(const FactoredQ &f);

// Numerator (lowest terms) of n * |binom(-r/m, n)|. Requires gcd(r,m) = 1,
// m >= 2 and n >= 1.
mpz_class n_alpha(std::int64_t r, std::int64_t m, std::int64_t n);

// binom(x, k) for rational x.
mpq_class binom_rational(const mpq_class &x, std::int64_t k);

} // namespace qcong
