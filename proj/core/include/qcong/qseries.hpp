#pragma once

// Exact factored q-series values:  sign * q^qexp * prod_d Phi_d(q)^{e_d}.
//
// Every q-Pochhammer symbol (q^a; q^m)_k with integer a, and every ratio or
// Gaussian binomial built from them, has such a closed form because
// 1 - q^h = prod_{d | h} Phi_d(q). Keeping values factored makes equality
// structural and keeps the exact expansion cheap.
//
// For that product to hold, index 1 inside a FactoredQ stands for 1 - q, not
// for Phi_1 = q - 1 as returned by phi(1). expand() and reduce() account for
// the sign (-1)^e of an index-1 exponent e.

#include <cstdint>
#include <map>
#include <string>

#include "qcong/bigpoly.hpp"

namespace qcong {

class FactoredQ {
public:
    using FactorMap = std::map<std::int64_t, std::int64_t>;

    // The constant 1.
    FactoredQ() = default;
    FactoredQ(int sign, std::int64_t qexp, FactorMap factors);

    static FactoredQ one() { return {}; }
    static FactoredQ zero();
    // Phi_d^e
    static FactoredQ cyclotomic(std::int64_t d, std::int64_t e = 1);

    [[nodiscard]] bool is_zero() const noexcept { return zero_; }
    [[nodiscard]] int sign() const noexcept { return sign_; }
    [[nodiscard]] std::int64_t qexp() const noexcept { return qexp_; }
    [[nodiscard]] const FactorMap &factors() const noexcept { return factors_; }
    [[nodiscard]] std::int64_t exponent(std::int64_t d) const;
    // True when no cyclotomic factor has a negative exponent.
    [[nodiscard]] bool is_laurent_polynomial() const;

    friend bool operator==(const FactoredQ &, const FactoredQ &) = default;

    // e.g. "-q^-1*Phi_1^3*Phi_5"; "0" and "1" for the trivial values.
    [[nodiscard]] std::string to_string() const;

private:
    bool zero_ = false;
    int sign_ = 1;
    std::int64_t qexp_ = 0;
    FactorMap factors_;
};

FactoredQ mul_factored(const FactoredQ &a, const FactoredQ &b);
// a / b; b must be nonzero.
FactoredQ div_factored(const FactoredQ &a, const FactoredQ &b);
FactoredQ pow_factored(const FactoredQ &a, std::int64_t e);

inline FactoredQ operator*(const FactoredQ &a, const FactoredQ &b) { return mul_factored(a, b); }
inline FactoredQ operator/(const FactoredQ &a, const FactoredQ &b) { return div_factored(a, b); }

// 1 - q^a for any integer a; Zero when a == 0.
FactoredQ one_minus_q_pow(std::int64_t a);

// (q^a; q^m)_k = prod_{j<k} (1 - q^{a + j m}).
FactoredQ pochhammer(std::int64_t a, std::int64_t m, std::int64_t k);

// (q^r; q^m)_n / (q^m; q^m)_n.
FactoredQ poch_ratio(std::int64_t r, std::int64_t m, std::int64_t n);

// Gaussian binomial [h choose k] in base q^m for integer h >= 0.
FactoredQ qbinom_int(std::int64_t h, std::int64_t k, std::int64_t m);

// num / den * q^shift with the sign folded into num.
struct RatFun {
    IntPoly num;
    IntPoly den;
    std::int64_t shift = 0;
};

RatFun expand(const FactoredQ &f);

// Expansion of a value without negative cyclotomic exponents.
// Throws DomainError otherwise.
LaurentInt expand_laurent(const FactoredQ &f);

} // namespace qcong
