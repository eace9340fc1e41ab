#include <doctest.h>

#include <algorithm>

#include "qcong/cyclotomic.hpp"

using namespace qcong;

namespace {

// Phi_n by dividing q^n - 1 through the lower cyclotomic factors.
IntPoly phi_by_division(std::int64_t n)
{
    IntPoly p = -IntPoly::one_minus_q_pow(static_cast<std::size_t>(n));
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = div_exact(p, phi_by_division(d));
        }
    }
    return p;
}

IntPoly from_list(std::initializer_list<long> c)
{
    return IntPoly(c);
}

} // namespace

TEST_SUITE("cyclotomic")
{
    TEST_CASE("arithmetic helpers")
    {
        CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
        CHECK(mobius(1) == 1);
        CHECK(mobius(6) == 1);
        CHECK(mobius(12) == 0);
        CHECK(mobius(30) == -1);
        CHECK(totient(36) == 12);
        CHECK(gcd(-4, 6) == 2);
        CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
        CHECK(prime_power_base(27) == 3);
        CHECK_FALSE(prime_power_base(12).has_value());
    }

    TEST_CASE("small cyclotomics")
    {
        CHECK(phi(1) == IntPoly{-1, 1});
        CHECK(phi(2) == IntPoly{1, 1});
        CHECK(phi(6) == IntPoly{1, -1, 1});
        CHECK(phi(12) == from_list({1, 0, -1, 0, 1}));
        CHECK(phi(30) == from_list({1, 1, 0, -1, -1, -1, 0, 1, 1}));
        CHECK(phi(2) * phi(3) == IntPoly{1, 2, 2, 1});
    }

    TEST_CASE("phi_105 has a coefficient -2")
    {
        const IntPoly &p = phi(105);
        CHECK(p.degree() == 48);
        CHECK(*std::min_element(p.coeffs().begin(), p.coeffs().end()) == -2);
        CHECK(p.coeff(7) == -2);
        CHECK(p.coeff(41) == -2);
    }

    TEST_CASE("matches the division route")
    {
        for (std::int64_t d = 1; d <= 60; ++d) {
            CAPTURE(d);
            CHECK(phi(d) == phi_by_division(d));
        }
    }

    TEST_CASE("value at one")
    {
        CHECK(phi_at_one(2) == 2);
        CHECK(phi_at_one(9) == 3);
        CHECK(phi_at_one(6) == 1);
        CHECK(phi_at_one(64) == 2);
        CHECK_THROWS_AS(phi_at_one(1), DomainError);
        for (std::int64_t d = 2; d <= 200; ++d) {
            CAPTURE(d);
            CHECK(eval_at_one(phi(d)) == phi_at_one(d));
        }
    }

    TEST_CASE("q-integers")
    {
        CHECK(q_int(0).is_zero());
        CHECK(q_int(3) == LaurentInt(IntPoly{1, 1, 1}));
        // [-2]_q = -q^-2 (1 + q)
        CHECK(q_int(-2) == LaurentInt(IntPoly{-1, -1}, -2));
        CHECK(eval_at_one(q_int(-7)) == -7);
    }

    TEST_CASE("binomial form round trip")
    {
        // Phi_2^3 Phi_4 Phi_6
        const BinomialForm f = to_binomial_form({{2, 3}, {4, 1}, {6, 1}});
        CHECK(expand_binomial_form(f) == phi(2) * phi(2) * phi(2) * phi(4) * phi(6));
        const BinomialForm g = to_binomial_form({{15, 1}, {1, 2}});
        CHECK(expand_binomial_form(g) == phi(15) * phi(1) * phi(1));
    }
}
