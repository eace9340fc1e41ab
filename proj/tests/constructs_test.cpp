#include <doctest.h>

#include "qcong/constructs.hpp"
#include "qcong/cyclotomic.hpp"

using namespace qcong;

namespace {

// S_{r,m}(n) through the counting characterisation: d is in S exactly when
// d divides one more of r, r+m, ..., r+(n-1)m than floor(n/d).
std::vector<std::int64_t> s_set_by_count(std::int64_t r, std::int64_t m, std::int64_t n)
{
    std::int64_t bound = 0;
    for (std::int64_t j = 0; j < n; ++j) {
        bound = std::max<std::int64_t>(bound, std::llabs(r + j * m));
    }
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= bound; ++d) {
        if (gcd(d, m) != 1) {
            continue;
        }
        std::int64_t hits = 0;
        for (std::int64_t j = 0; j < n; ++j) {
            hits += (r + j * m) % d == 0;
        }
        if (hits == n / d + 1) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace

TEST_SUITE("constructs")
{
    TEST_CASE("lambda")
    {
        CHECK(lambda(1, 2, 3) == 1);
        CHECK(lambda(1, 2, 5) == 2);
        CHECK(lambda(7, 3, 1) == 0);
        CHECK(lambda(-1, 2, 7) == 4);
        CHECK_THROWS_AS(lambda(1, 2, 4), DomainError);
    }

    TEST_CASE("floor division rounds down")
    {
        CHECK(floor_div(-1, 5) == -1);
        CHECK(floor_div(0, 5) == 0);
        CHECK(floor_div(7, 3) == 2);
        CHECK(floor_div(-6, 3) == -2);
    }

    TEST_CASE("s set")
    {
        CHECK(s_set(1, 2, 3) == std::vector<std::int64_t>{5});
        CHECK(s_set(1, 2, 1).empty());
        CHECK(s_set(1, 2, 2) == std::vector<std::int64_t>{3});
        for (std::int64_t m = 1; m <= 6; ++m) {
            for (std::int64_t r = -9; r <= 9; ++r) {
                if (gcd(r, m) != 1) {
                    continue;
                }
                for (std::int64_t n = 1; n <= 20; ++n) {
                    CAPTURE(r);
                    CAPTURE(m);
                    CAPTURE(n);
                    const auto s = s_set(r, m, n);
                    CHECK(s == s_set_by_count(r, m, n));
                    for (auto d : s) {
                        CHECK(n % d != 0);
                    }
                }
            }
        }
    }

    TEST_CASE("A, B, C")
    {
        CHECK(a_factored(1, 2, 3) == FactoredQ::cyclotomic(5));
        CHECK(a_poly(1, 2, 3) == phi(5));
        CHECK(a_factored(1, 2, 1) == FactoredQ::one());
        CHECK(a_factored(1, 2, 2) == FactoredQ::cyclotomic(3));
        CHECK(b_factored(2, 3) == FactoredQ(1, 0, {{2, 3}, {4, 1}, {6, 1}}));
        CHECK(b_factored(1, 5) == FactoredQ::one());
        CHECK(b_factored(2, 1) == FactoredQ::cyclotomic(2));
        CHECK(c_factored(2, 3) == FactoredQ::cyclotomic(3));
        CHECK(c_factored(2, 6) == FactoredQ::cyclotomic(3));
        CHECK(c_factored(5, 1) == FactoredQ::one());
        CHECK(c_poly(2, 3) == phi(3));
        CHECK(value_at_one(a_factored(1, 2, 3)) == 5);
        CHECK(value_at_one(b_factored(2, 3)) == 16);
    }

    TEST_CASE("N")
    {
        CHECK(n_alpha(1, 2, 3) == 15);
        CHECK(n_alpha(1, 2, 1) == 1);
        CHECK(n_alpha(1, 2, 2) == 3);
        CHECK(n_alpha(1, 3, 4) == 140);
        CHECK(n_alpha(2, 3, 5) == 1540);
        CHECK(n_alpha(-1, 2, 6) == 63);
        CHECK(n_alpha(3, 4, 7) == 908523);
        CHECK(n_alpha(1, 5, 10) == 16721276);
        CHECK(n_alpha(-5, 6, 12) == mpz_class("910321396075"));
        CHECK_THROWS_AS(n_alpha(3, 1, 4), DomainError);
    }

    TEST_CASE("rational binomials")
    {
        CHECK(binom_rational(mpq_class(-1, 2), 3) == mpq_class(-5, 16));
        CHECK(binom_rational(mpq_class(5), 2) == 10);
        CHECK(binom_rational(mpq_class(1, 3), 0) == 1);
    }

    TEST_CASE("params")
    {
        CHECK_NOTHROW(Params{1, 2, 3, 1}.validate());
        CHECK_THROWS_AS((Params{2, 4, 3, 1}.validate()), DomainError);
        CHECK_THROWS_AS((Params{1, 2, 0, 1}.validate()), DomainError);
        CHECK(Params{1, 3, 1, 1}.alpha_is_integral() == false);
    }
}
