#include <doctest.h>

#include "qcong/constructs.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/verifier.hpp"

using namespace qcong;

namespace {

std::string as_string(const Value &v)
{
    return std::get<std::string>(v);
}

const Value *witness(const Verdict &v, const std::string &key)
{
    for (const auto &[k, val] : v.witness) {
        if (k == key) {
            return &val;
        }
    }
    return nullptr;
}

} // namespace

TEST_SUITE("verifier")
{
    TEST_CASE("rational congruence semantics")
    {
        CHECK(RationalModInt{mpq_class(30, 7), 15}.is_zero() == true);
        CHECK(RationalModInt{mpq_class(31, 7), 15}.is_zero() == false);
        CHECK(RationalModInt{mpq_class(-45, 7), 15}.is_zero() == true);
        CHECK_FALSE(RationalModInt{mpq_class(1, 5), 15}.is_zero().has_value());
        CHECK(ord2(mpz_class(40)) == 3);
        CHECK_THROWS_AS(ord2(mpz_class(0)), DomainError);
    }

    TEST_CASE("theorem1 spot values")
    {
        const Verdict v = verify_theorem1({1, 2, 3, 2});
        CHECK(v.pass);
        CHECK(as_string(v.lhs) == "225/128");
        CHECK(as_string(v.rhs) == "15");
        CHECK(as_string(verify_theorem1({1, 3, 4, 1}).lhs) == "-140/243");
        CHECK(as_string(verify_theorem1({2, 3, 5, 2}).lhs) == "1185800/177147");
        CHECK(as_string(verify_theorem1({-1, 2, 6, 3}).lhs) == "-10678563/33554432");
        CHECK(as_string(verify_theorem1({3, 4, 7, 1}).lhs) == "908523/262144");
        CHECK_THROWS_AS(verify_theorem1({4, 1, 3, 1}), DomainError);
    }

    TEST_CASE("corollary2 spot values")
    {
        auto check = [](std::int64_t rho, std::int64_t n, const char *sum, const char *mod) {
            const Verdict v = verify_corollary2(rho, n);
            CHECK(v.pass);
            CHECK(as_string(v.lhs) == sum);
            CHECK(as_string(v.rhs) == mod);
        };
        check(2, 2, "36", "12");
        check(2, 3, "900", "60");
        check(3, 2, "-24", "24");
        check(4, 5, "7342206480", "5040");
        check(3, 10, "-9399198244870720", "3695120");
        CHECK_THROWS_AS(verify_corollary2(1, 5), DomainError);
        CHECK_THROWS_AS(verify_corollary2(2, 1), DomainError);
    }

    TEST_CASE("sun spot values")
    {
        const Verdict v2 = verify_sun(2);
        CHECK(v2.pass);
        CHECK(as_string(v2.lhs) == "-120");
        CHECK(as_string(v2.rhs) == "12");
        CHECK(as_string(verify_sun(3).lhs) == "28980");
        CHECK(as_string(verify_sun(4).lhs) == "-5026560");
        CHECK(as_string(verify_sun(7).lhs) == "36994462464960");
        CHECK(as_string(verify_sun(7).rhs) == "24024");
        CHECK_FALSE(is_proven_claim("sun"));
        CHECK(is_proven_claim("qcong"));
    }

    TEST_CASE("cleared q-sum matches a frozen expansion")
    {
        // r=1, m=2, rho=1, n=2: -(q^5+2q^4+3q^3+3q^2+2q+1)/q^3
        const LaurentInt p = cleared_qsum({1, 2, 2, 1});
        CHECK(p == LaurentInt(IntPoly{-1, -2, -3, -3, -2, -1}, -3));
        // the plain form: q^9+2q^8+3q^7+4q^6+4q^5+4q^4+4q^3+3q^2+2q+1
        CHECK(cleared_qsum({1, 2, 2, 1}, QSumForm::kPlain) == LaurentInt(IntPoly{1, 2, 3, 4, 4, 4, 4, 3, 2, 1}));
    }

    TEST_CASE("q-congruence agrees with long division by the expanded modulus")
    {
        for (auto [r, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {-1, 2}, {1, 3}, {2, 3}}) {
            for (std::int64_t rho = 1; rho <= 2; ++rho) {
                for (std::int64_t n = 1; n <= 7; ++n) {
                    CAPTURE(r);
                    CAPTURE(m);
                    CAPTURE(rho);
                    CAPTURE(n);
                    const Params p{r, m, n, rho};
                    const IntPoly ac = a_poly(r, m, n) * c_poly(m, n);
                    const LaurentInt cleared = cleared_qsum(p);
                    CHECK(try_div_exact(cleared.base(), ac).has_value());
                    CHECK(verify_qcongruence(p).pass);
                }
            }
        }
    }

    TEST_CASE("the plain global sum is not divisible")
    {
        const Verdict v = verify_qcongruence({1, 2, 2, 1}, QSumForm::kPlain);
        CHECK_FALSE(v.pass);
        CHECK(v.claim == "qcong_plain");
        const Value *rem = witness(v, "remainder");
        REQUIRE(rem != nullptr);
        // remainder of the plain sum modulo Phi_3 is 1
        CHECK(std::get<PolyValue>(*rem).poly == LaurentInt(IntPoly{1}));
    }

    TEST_CASE("specialisation and consistency with theorem1")
    {
        for (std::int64_t n = 1; n <= 8; ++n) {
            const auto [q, s] = verify_qcongruence_and_specialization({3, 4, n, 2});
            CHECK(q.pass);
            CHECK(s.pass);
            CHECK(s.pass == verify_theorem1({3, 4, n, 2}).pass);
        }
        const Verdict s = verify_specialization({1, 2, 3, 1});
        CHECK(as_string(s.lhs) == "30");
        CHECK(as_string(s.rhs) == "15");
    }

    TEST_CASE("2-adic bounds")
    {
        for (std::int64_t n = 2; n <= 30; ++n) {
            for (std::int64_t rho = 2; rho <= 4; ++rho) {
                CHECK(verify_2adic(rho, n).pass);
            }
        }
        CHECK_THROWS_AS(verify_2adic(2, 1), DomainError);
    }

    TEST_CASE("identity checks")
    {
        CHECK(verify_ratio_factorization(1, 2, 3).pass);
        CHECK(as_string(verify_ratio_factorization(1, 2, 3).rhs) == "Phi_5");
        // r=-3, m=2, n=3: factors r+jm = -3, -1, 1; delta = 2, Delta = -4
        const Verdict v = verify_ratio_factorization(-3, 2, 3);
        CHECK(v.pass);
        CHECK(as_string(v.rhs).rfind("q^-4", 0) == 0);
        CHECK(verify_ac_at_one(1, 2, 3).pass);
        CHECK(as_string(verify_ac_at_one(1, 2, 3).lhs) == "15");
        CHECK(verify_cyclotomic(12).pass);
        CHECK(verify_qint_quotient(6, 5).pass);
        CHECK(verify_qint_quotient(1, 3).pass);
    }

    TEST_CASE("per-d verdict wrappers")
    {
        CHECK(verify_vanishing_factor(1, 2, 9).pass);
        CHECK(verify_qlucas(1, 2, 7, 3).pass);
        CHECK(verify_sign_reduction(2, 3, 7, 3).pass);
        CHECK(verify_block_sum(1, 3, 2, 8).pass);
        CHECK(verify_block_recurrence(-1, 2, 2, 5, 2).pass);
        CHECK(verify_half_period(10).pass);
        CHECK(verify_antisymmetry(6, 3).pass);
        CHECK(verify_block_sum(1, 3, 2, 8).params.h == lambda(1, 3, 8));
    }
}
