#pragma once

// Dense univariate polynomials in q with exact coefficients.
//
//  - IntPoly     coefficients in Z (GMP integers)
//  - RatPoly     coefficients in Q (GMP rationals, always canonical)
//  - LaurentInt  q^shift * IntPoly, used whenever negative powers of q occur
//
// Coefficient index i holds the coefficient of q^i. Trailing zeros are never
// stored, so the zero polynomial is the empty coefficient vector.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"

namespace qcong {

// Degree reported for the zero polynomial.
inline constexpr std::int64_t kDegreeOfZero = std::numeric_limits<std::int64_t>::min();

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class &c);
    // c * q^k
    static IntPoly monomial(const mpz_class &c, std::size_t k);
    // 1 - q^h  (h >= 1)
    static IntPoly one_minus_q_pow(std::size_t h);

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] std::int64_t degree() const noexcept
    {
        return c_.empty() ? kDegreeOfZero : static_cast<std::int64_t>(c_.size()) - 1;
    }
    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] const std::vector<mpz_class> &coeffs() const noexcept { return c_; }
    // Coefficient of q^i; zero past the degree.
    [[nodiscard]] mpz_class coeff(std::size_t i) const;
    [[nodiscard]] const mpz_class &lead() const;
    // Number of nonzero coefficients.
    [[nodiscard]] std::size_t nnz() const;
    // Index of the lowest nonzero coefficient (0 for the zero polynomial).
    [[nodiscard]] std::size_t low_order() const;

    IntPoly &operator+=(const IntPoly &o);
    IntPoly &operator-=(const IntPoly &o);
    IntPoly &operator*=(const IntPoly &o);
    IntPoly &operator*=(const mpz_class &s);

    friend IntPoly operator+(IntPoly a, const IntPoly &b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly &b) { return a -= b; }
    friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator*(IntPoly a, const mpz_class &s) { return a *= s; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly &a, const IntPoly &b) { return a.c_ == b.c_; }

    // q^k * p
    [[nodiscard]] IntPoly shifted(std::size_t k) const;
    // p / q^k; requires the low k coefficients to vanish.
    [[nodiscard]] IntPoly unshifted(std::size_t k) const;

    [[nodiscard]] mpz_class eval(const mpz_class &x) const;

    // Descending-power rendering, e.g. "q^2-q+1".
    [[nodiscard]] std::string to_string(const std::string &var = "q") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Exact product. Schoolbook for small or sparse operands, Karatsuba above
// kKaratsubaThreshold dense coefficients.
IntPoly mul(const IntPoly &a, const IntPoly &b);
inline constexpr std::size_t kKaratsubaThreshold = 48;
IntPoly mul_schoolbook(const IntPoly &a, const IntPoly &b);

inline IntPoly add(const IntPoly &a, const IntPoly &b) { return a + b; }
IntPoly pow(const IntPoly &a, unsigned e);

// Returns q with b*q == a exactly, or nullopt when b does not divide a over Z.
// Long division visits only the nonzero terms of b, so dividing by a binomial
// such as 1 - q^h costs O(deg a).
std::optional<IntPoly> try_div_exact(const IntPoly &a, const IntPoly &b);
// Same, throwing NotDivisible. b must be nonzero.
IntPoly div_exact(const IntPoly &a, const IntPoly &b);

mpz_class eval_at_one(const IntPoly &a);
// gcd of the coefficients; 0 for the zero polynomial.
mpz_class content(const IntPoly &a);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    explicit RatPoly(const IntPoly &p);

    static RatPoly constant(const mpq_class &c);
    static RatPoly monomial(const mpq_class &c, std::size_t k);

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] std::int64_t degree() const noexcept
    {
        return c_.empty() ? kDegreeOfZero : static_cast<std::int64_t>(c_.size()) - 1;
    }
    [[nodiscard]] const std::vector<mpq_class> &coeffs() const noexcept { return c_; }
    [[nodiscard]] mpq_class coeff(std::size_t i) const;
    [[nodiscard]] const mpq_class &lead() const;
    [[nodiscard]] bool is_constant() const noexcept { return c_.size() <= 1; }

    RatPoly &operator+=(const RatPoly &o);
    RatPoly &operator-=(const RatPoly &o);
    RatPoly &operator*=(const mpq_class &s);

    friend RatPoly operator+(RatPoly a, const RatPoly &b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly &b) { return a -= b; }
    friend RatPoly operator*(const RatPoly &a, const RatPoly &b);
    friend RatPoly operator*(RatPoly a, const mpq_class &s) { return a *= s; }
    friend RatPoly operator-(RatPoly a);
    friend bool operator==(const RatPoly &a, const RatPoly &b) { return a.c_ == b.c_; }

    [[nodiscard]] std::string to_string(const std::string &var = "q") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Euclidean division over Q: a = quot*b + rem with deg rem < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b);

// Remainder of a modulo the monic, nonconstant integer polynomial phi.
RatPoly rem_mod(const RatPoly &a, const IntPoly &phi);

// q^shift * base, normalized so that base has a nonzero constant term.
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(IntPoly base, std::int64_t shift = 0);

    static LaurentInt monomial(const mpz_class &c, std::int64_t k);
    // 1 - q^a for any integer a (zero when a == 0).
    static LaurentInt one_minus_q_pow(std::int64_t a);

    [[nodiscard]] bool is_zero() const noexcept { return base_.is_zero(); }
    [[nodiscard]] const IntPoly &base() const noexcept { return base_; }
    [[nodiscard]] std::int64_t shift() const noexcept { return shift_; }
    // Exponent of the highest term (kDegreeOfZero for zero).
    [[nodiscard]] std::int64_t top_degree() const noexcept;
    // Coefficient of q^k.
    [[nodiscard]] mpz_class coeff(std::int64_t k) const;

    LaurentInt &operator+=(const LaurentInt &o);
    LaurentInt &operator-=(const LaurentInt &o);
    LaurentInt &operator*=(const LaurentInt &o);

    friend LaurentInt operator+(LaurentInt a, const LaurentInt &b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt &b) { return a -= b; }
    friend LaurentInt operator*(LaurentInt a, const LaurentInt &b) { return a *= b; }
    friend LaurentInt operator-(LaurentInt a);
    friend bool operator==(const LaurentInt &a, const LaurentInt &b)
    {
        return a.shift_ == b.shift_ && a.base_ == b.base_;
    }

    // Multiplies by q^k in place.
    LaurentInt &shift_by(std::int64_t k);

    [[nodiscard]] std::string to_string(const std::string &var = "q") const;

private:
    void normalize();
    IntPoly base_;
    std::int64_t shift_ = 0;
};

// Exact Laurent quotient; nullopt when b does not divide a.
std::optional<LaurentInt> try_div_exact(const LaurentInt &a, const LaurentInt &b);
LaurentInt div_exact(const LaurentInt &a, const LaurentInt &b);
mpz_class eval_at_one(const LaurentInt &a);
mpz_class content(const LaurentInt &a);

} // namespace qcong
