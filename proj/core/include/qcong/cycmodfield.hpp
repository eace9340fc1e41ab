#pragma once

// Arithmetic in the number field Q[q]/(Phi_d(q)), d >= 2, and the per-d
// congruence checks built on it.

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "qcong/bigpoly.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// Canonical representative num/den with deg num < deg Phi_d, den > 0 and
// gcd(content(num), den) = 1, so equality is structural.
class CycModElt {
public:
    // Reduces rep modulo Phi_d. d >= 2.
    CycModElt(std::int64_t d, const RatPoly &rep);
    CycModElt(std::int64_t d, const IntPoly &p);

    [[nodiscard]] std::int64_t d() const noexcept { return d_; }
    [[nodiscard]] RatPoly rep() const;
    [[nodiscard]] const IntPoly &numerator() const noexcept { return num_; }
    [[nodiscard]] const mpz_class &denominator() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const noexcept { return num_.size() <= 1; }

    CycModElt &operator+=(const CycModElt &o);
    CycModElt &operator-=(const CycModElt &o);
    CycModElt &operator*=(const CycModElt &o);
    CycModElt &operator*=(const mpq_class &s);

    friend CycModElt operator+(CycModElt a, const CycModElt &b) { return a += b; }
    friend CycModElt operator-(CycModElt a, const CycModElt &b) { return a -= b; }
    friend CycModElt operator*(CycModElt a, const CycModElt &b) { return a *= b; }
    friend CycModElt operator*(CycModElt a, const mpq_class &s) { return a *= s; }
    friend CycModElt operator-(CycModElt a);
    friend bool operator==(const CycModElt &a, const CycModElt &b)
    {
        return a.d_ == b.d_ && a.den_ == b.den_ && a.num_ == b.num_;
    }

    [[nodiscard]] std::string to_string() const { return rep().to_string(); }

private:
    CycModElt(std::int64_t d, IntPoly num, mpz_class den);
    void canonicalize();
    void check_same_field(const CycModElt &o) const;

    std::int64_t d_;
    IntPoly num_;
    mpz_class den_ = 1;
};

CycModElt reduce(const RatPoly &p, std::int64_t d);
CycModElt reduce(const IntPoly &p, std::int64_t d);
// Negative powers use q^{-1} = q^{d-1} in the quotient.
CycModElt reduce(const LaurentInt &p, std::int64_t d);
CycModElt reduce_constant(const mpq_class &c, std::int64_t d);
CycModElt reduce_q_pow(std::int64_t e, std::int64_t d);
// 1 - q^a
CycModElt reduce_one_minus_q_pow(std::int64_t a, std::int64_t d);
// nullopt when Phi_d divides the denominator of f.
std::optional<CycModElt> reduce(const FactoredQ &f, std::int64_t d);

// Inverse by the extended Euclidean algorithm over Q[q]. Throws NotInvertible.
CycModElt inv(const CycModElt &x);
// Negative exponents invert first.
CycModElt pow(const CycModElt &x, std::int64_t e);

// Outcome of a single congruence check. On failure lhs/rhs hold both sides.
struct CheckResult {
    bool pass = true;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

// (q^r; q^m)_d / (1 - q^d) == r + lambda_{r,m}(d) m   (mod Phi_d)
// The vanishing factor 1 - q^{r + lambda m} is divided by 1 - q^d exactly
// before reduction. Requires gcd(m, d) = 1, d >= 2.
CheckResult check_vanishing_factor(std::int64_t r, std::int64_t m, std::int64_t d);

// q-Lucas factorisation of the Pochhammer ratio at k = s d + t, 0 <= t < d:
//   ratio_{sd+t} == ((r + lambda m)/(m d))_s / (1)_s * ratio_t   (mod Phi_d)
// where ratio_k = (q^r;q^m)_k / (q^m;q^m)_k and (x)_s is the rising factorial.
CheckResult check_qlucas(std::int64_t r, std::int64_t m, std::int64_t d, std::int64_t s, std::int64_t t);

// The weight sequence used by the binomial-sum family, with h = lambda_{r,m}(d):
//   nu_k = q^{-mk} [2mk + r]_q * sigma_k^rho * ratio_k^{rho-1},
//   sigma_k = (-1)^k q^{mhk - m k(k-1)/2}.
// Checks, in Q[q]/(Phi_d):
//  * sum_{k<d} ratio_k nu_k == 0;
//  * ratio_k == (-1)^k q^{m k(k-1)/2 - mhk} [h choose k]_{q^m} for every k < d;
//  * the same block sum with q^{mh} replaced by q^{-r} also vanishes.
// Every denominator inverted here is coprime to Phi_d; a NotInvertible would
// mean nu_k failed to be Phi_d-integral.
CheckResult check_block_sum(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d);

// sum_{k=0}^{h} q^{-mk} [2mk - hm]_q [h choose k]_{q^m}^rho == 0 exactly in
// Z[q, 1/q]. After multiplying by 1 - q and writing x = q^m the identity no
// longer involves m; it is checked as
//   sum_k (x^{-k} - x^{k-h}) [h choose k]_x^rho == 0.
CheckResult check_antisymmetry(std::int64_t h, std::int64_t rho);

// nu_{sd+t} == mu_s nu_t (mod Phi_d), with
//   mu_s = (-1)^{s rho} (((r + lambda m)/(m d))_s / (1)_s)^{rho - 1}.
// The left side reduces the factored ratio_{sd+t} directly.
CheckResult check_block_recurrence(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d,
                                   std::int64_t s, std::int64_t t);

// (-1)^{sd} q^{-m sd(sd-1)/2} == (-1)^s   (mod Phi_d), and for every 0 <= t < d
//   (-1)^{sd+t} q^{mh(sd+t) - m (sd+t)(sd+t-1)/2} == (-1)^s (-1)^t q^{mht - m t(t-1)/2}.
// Requires gcd(m, d) = 1.
CheckResult check_sign_reduction(std::int64_t m, std::int64_t d, std::int64_t s, std::int64_t h);

// q^{d/2} == -1 (mod Phi_d) for even d.
CheckResult check_half_period(std::int64_t d);

// Rising factorial (x)_s.
mpq_class rising_factorial(const mpq_class &x, std::int64_t s);

} // namespace qcong
