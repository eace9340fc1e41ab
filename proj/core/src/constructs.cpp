#include "qcong/constructs.hpp"

#include <algorithm>
#include <cstdlib>

#include "qcong/cyclotomic.hpp"

namespace qcong {

void Params::validate() const
{
    if (m < 1) {
        throw DomainError("m must be positive");
    }
    if (n < 1) {
        throw DomainError("n must be positive");
    }
    if (rho < 1) {
        throw DomainError("rho must be positive");
    }
    if (gcd(r, m) != 1) {
        throw DomainError("gcd(r, m) must be 1 for " + to_string());
    }
}

std::string Params::to_string() const
{
    return "r=" + std::to_string(r) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
           " rho=" + std::to_string(rho);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t lambda(std::int64_t r, std::int64_t m, std::int64_t d)
{
    if (d < 1 || m < 1) {
        throw DomainError("lambda: d and m must be positive");
    }
    if (gcd(d, m) != 1) {
        throw DomainError("lambda: gcd(d, m) must be 1 (d=" + std::to_string(d) + ", m=" + std::to_string(m) + ")");
    }
    if (d == 1) {
        return 0;
    }
    // lambda = -r * m^{-1} mod d
    mpz_class inv, mod = d, mm = m;
    mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), mod.get_mpz_t());
    mpz_class lam = -mpz_class(r) * inv;
    mpz_fdiv_r(lam.get_mpz_t(), lam.get_mpz_t(), mod.get_mpz_t());
    return lam.get_si();
}

std::vector<std::int64_t> s_set(std::int64_t r, std::int64_t m, std::int64_t n)
{
    if (gcd(r, m) != 1 || m < 1 || n < 1) {
        throw DomainError("s_set: requires gcd(r,m)=1, m>=1, n>=1");
    }
    std::int64_t bound = 0;
    for (std::int64_t j = 0; j < n; ++j) {
        bound = std::max<std::int64_t>(bound, std::llabs(r + j * m));
    }
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= bound; ++d) {
        if (gcd(d, m) != 1) {
            continue;
        }
        if (floor_div(n - 1 - lambda(r, m, d), d) == n / d) {
            out.push_back(d);
        }
    }
    return out;
}

FactoredQ a_factored(std::int64_t r, std::int64_t m, std::int64_t n)
{
    FactoredQ::FactorMap f;
    for (std::int64_t d : s_set(r, m, n)) {
        f[d] = 1;
    }
    return FactoredQ(1, 0, std::move(f));
}

IntPoly a_poly(std::int64_t r, std::int64_t m, std::int64_t n)
{
    return expand_laurent(a_factored(r, m, n)).base();
}

FactoredQ b_factored(std::int64_t m, std::int64_t n)
{
    if (m < 1 || n < 0) {
        throw DomainError("b_factored: requires m >= 1, n >= 0");
    }
    FactoredQ::FactorMap f;
    // floor(n*g/d) >= 1 forces d <= n*g <= n*m.
    for (std::int64_t d = 2; d <= n * m; ++d) {
        const std::int64_t g = gcd(d, m);
        if (g > 1) {
            if (const std::int64_t e = (n * g) / d; e > 0) {
                f[d] = e;
            }
        }
    }
    return FactoredQ(1, 0, std::move(f));
}

FactoredQ c_factored(std::int64_t m, std::int64_t n)
{
    if (m < 1 || n < 1) {
        throw DomainError("c_factored: requires m >= 1, n >= 1");
    }
    FactoredQ::FactorMap f;
    for (std::int64_t d : divisors(n)) {
        if (d >= 2 && gcd(d, m) == 1) {
            f[d] = 1;
        }
    }
    return FactoredQ(1, 0, std::move(f));
}

IntPoly c_poly(std::int64_t m, std::int64_t n)
{
    return expand_laurent(c_factored(m, n)).base();
}

mpz_class value_at_one(const FactoredQ &f)
{
    if (f.is_zero()) {
        return 0;
    }
    mpz_class v = f.sign();
    for (const auto &[d, e] : f.factors()) {
        if (e < 0) {
            throw DomainError("value_at_one: negative exponent in " + f.to_string());
        }
        if (d == 1) {
            return 0;
        }
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(phi_at_one(d)), static_cast<unsigned long>(e));
        v *= p;
    }
    return v;
}

mpq_class binom_rational(const mpq_class &x, std::int64_t k)
{
    mpq_class b = 1;
    for (std::int64_t j = 0; j < k; ++j) {
        b *= (x - j);
        b /= (j + 1);
    }
    return b;
}

mpz_class n_alpha(std::int64_t r, std::int64_t m, std::int64_t n)
{
    if (m < 1 || gcd(r, m) != 1) {
        throw DomainError("n_alpha: requires m >= 1 and gcd(r, m) = 1");
    }
    if (m == 1) {
        throw DomainError("n_alpha: alpha = r/m must not be an integer");
    }
    if (n < 1) {
        throw DomainError("n_alpha: n must be positive");
    }
    mpq_class alpha{mpz_class(r), mpz_class(m)};
    alpha.canonicalize();
    mpq_class v = binom_rational(-alpha, n) * n;
    return abs(v.get_num());
}

} // namespace qcong
