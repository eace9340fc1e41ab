#include <doctest.h>

#include <random>

#include "qcong/constructs.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/cycmodfield.hpp"
#include "qcong/verifier.hpp"

using namespace qcong;

namespace {

constexpr int kTrials = 200;

struct Gen {
    std::mt19937_64 rng{20240611};

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    }

    IntPoly poly(std::int64_t max_len, std::int64_t bound)
    {
        std::vector<mpz_class> c(static_cast<std::size_t>(integer(0, max_len)));
        for (auto &x : c) {
            x = static_cast<long>(integer(-bound, bound));
        }
        return IntPoly(std::move(c));
    }

    IntPoly nonzero_poly(std::int64_t max_len, std::int64_t bound)
    {
        for (;;) {
            IntPoly p = poly(max_len, bound);
            if (!p.is_zero()) {
                return p;
            }
        }
    }

    // (r, m) with gcd 1 and m >= 2
    std::pair<std::int64_t, std::int64_t> rm()
    {
        for (;;) {
            const std::int64_t m = integer(2, 7);
            const std::int64_t r = integer(-9, 9);
            if (gcd(r, m) == 1) {
                return {r, m};
            }
        }
    }
};

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("polynomial ring laws")
    {
        Gen g;
        for (int i = 0; i < kTrials; ++i) {
            const IntPoly a = g.poly(80, 50);
            const IntPoly b = g.nonzero_poly(80, 50);
            const IntPoly ab = mul(a, b);
            CHECK(div_exact(ab, b) == a);
            CHECK(eval_at_one(ab) == eval_at_one(a) * eval_at_one(b));
            CHECK(eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b));
            if (!a.is_zero()) {
                CHECK(ab.degree() == a.degree() + b.degree());
            }
            const std::int64_t d = g.integer(2, 40);
            const IntPoly &p = phi(d);
            CHECK(rem_mod(RatPoly(ab), p) == rem_mod(rem_mod(RatPoly(a), p) * rem_mod(RatPoly(b), p), p));
        }
    }

    TEST_CASE("cyclotomic structure")
    {
        for (std::int64_t n = 1; n <= 150; ++n) {
            IntPoly prod = IntPoly::constant(1);
            for (auto d : divisors(n)) {
                if (d >= 2) {
                    prod *= phi(d);
                }
            }
            CHECK(LaurentInt(prod) == q_int(n));
            const IntPoly &p = phi(n);
            CHECK(p.lead() == 1);
            CHECK(content(p) == 1);
            CHECK(p.degree() == totient(n));
        }
        for (std::int64_t n = 2; n <= 30; ++n) {
            for (std::int64_t m = 1; m <= 30; ++m) {
                const IntPoly quot = div_exact(q_int(n * m).base(), q_int(n).base());
                CHECK(rem_mod(RatPoly(quot), q_int(n).base()) == RatPoly::constant(m));
            }
        }
    }

    TEST_CASE("factored products expand consistently")
    {
        Gen g;
        for (int i = 0; i < kTrials; ++i) {
            const auto [r, m] = g.rm();
            const std::int64_t k = g.integer(0, 6);
            const FactoredQ a = pochhammer(r, m, k);
            const FactoredQ b = qbinom_int(g.integer(0, 8), g.integer(0, 8), g.integer(1, 3));
            const FactoredQ ab = mul_factored(a, b);
            if (ab.is_zero()) {
                CHECK((a.is_zero() || b.is_zero()));
                continue;
            }
            CHECK(expand_laurent(ab) == expand_laurent(a) * expand_laurent(b));
            const RatFun fa = expand(poch_ratio(r, m, k + 1));
            const RatFun fb = expand(b);
            const RatFun fab = expand(mul_factored(poch_ratio(r, m, k + 1), b));
            // cross-multiplied: num_ab den_a den_b == num_a num_b den_ab (common shift)
            CHECK(fab.shift == fa.shift + fb.shift);
            CHECK(fab.num * fa.den * fb.den == fa.num * fb.num * fab.den);
        }
    }

    TEST_CASE("pochhammer and gaussian binomial shape")
    {
        for (std::int64_t m = 1; m <= 5; ++m) {
            for (std::int64_t n = 0; n <= 12; ++n) {
                const FactoredQ p = pochhammer(m, m, n);
                CHECK(p.sign() == 1);
                CHECK(p.qexp() == 0);
                for (const auto &[d, e] : p.factors()) {
                    CHECK(e > 0);
                }
            }
        }
        for (std::int64_t h = 0; h <= 14; ++h) {
            for (std::int64_t k = 0; k <= h; ++k) {
                const RatFun f = expand(qbinom_int(h, k, 1));
                CHECK(f.den == IntPoly::constant(1));
                bool nonneg = true;
                for (const auto &c : f.num.coeffs()) {
                    nonneg = nonneg && c >= 0;
                }
                CHECK(nonneg);
                mpz_class b;
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(h), static_cast<unsigned long>(k));
                CHECK(eval_at_one(f.num) == b);
            }
        }
    }

    TEST_CASE("construct invariants over the grid")
    {
        for (std::int64_t m = 2; m <= 6; ++m) {
            for (std::int64_t r = -6; r <= 6; ++r) {
                if (gcd(r, m) != 1) {
                    continue;
                }
                for (std::int64_t n = 1; n <= 25; ++n) {
                    CAPTURE(r);
                    CAPTURE(m);
                    CAPTURE(n);
                    CHECK(value_at_one(a_factored(r, m, n)) * value_at_one(c_factored(m, n)) == n_alpha(r, m, n));
                    const FactoredQ b = b_factored(m, n);
                    const FactoredQ ac = mul_factored(a_factored(r, m, n), c_factored(m, n));
                    for (const auto &[d, e] : ac.factors()) {
                        CHECK(b.exponent(d) == 0);
                    }
                    if (n > 1) {
                        const FactoredQ prev = b_factored(m, n - 1);
                        for (const auto &[d, e] : prev.factors()) {
                            CHECK(b.exponent(d) >= e);
                        }
                    }
                    // [n]_q / C = prod_{d | n, gcd(d,m) > 1} Phi_d, which divides B
                    FactoredQ rest = FactoredQ::one();
                    for (auto d : divisors(n)) {
                        if (d >= 2 && gcd(d, m) > 1) {
                            rest = mul_factored(rest, FactoredQ::cyclotomic(d));
                        }
                    }
                    CHECK(LaurentInt(div_exact(q_int(n).base(), c_poly(m, n))) == expand_laurent(rest));
                    CHECK(div_factored(b, rest).is_laurent_polynomial());
                    mpz_class b1 = value_at_one(b);
                    for (auto p : prime_factors(m)) {
                        while (mpz_divisible_ui_p(b1.get_mpz_t(), static_cast<unsigned long>(p))) {
                            b1 /= static_cast<unsigned long>(p);
                        }
                    }
                    CHECK(b1 == 1);
                }
            }
        }
    }

    TEST_CASE("number field laws")
    {
        Gen g;
        for (int i = 0; i < kTrials; ++i) {
            const std::int64_t d = g.integer(2, 30);
            const IntPoly a = g.poly(40, 20);
            const IntPoly b = g.poly(40, 20);
            CHECK(reduce(a * b, d) == reduce(a, d) * reduce(b, d));
            CHECK(reduce(a + b, d) == reduce(a, d) + reduce(b, d));
            const CycModElt x = reduce(a, d);
            if (!x.is_zero()) {
                CHECK(x * inv(x) == reduce_constant(1, d));
            }
        }
    }

    TEST_CASE("per-d lemmas at random points")
    {
        Gen g;
        for (int i = 0; i < 60; ++i) {
            const auto [r, m] = g.rm();
            std::int64_t d = g.integer(2, 14);
            while (gcd(d, m) != 1) {
                ++d;
            }
            CAPTURE(r);
            CAPTURE(m);
            CAPTURE(d);
            CHECK(check_vanishing_factor(r, m, d).pass);
            CHECK(check_block_sum(r, m, g.integer(1, 3), d).pass);
            const std::int64_t s = g.integer(0, 3);
            const std::int64_t t = g.integer(0, d - 1);
            CHECK(check_qlucas(r, m, d, s, t).pass);
            CHECK(check_qlucas(r, m, d, 4, 0).pass);
            CHECK(check_sign_reduction(m, d, s, lambda(r, m, d)).pass);
        }
    }

    TEST_CASE("theorem-level consistency")
    {
        Gen g;
        for (int i = 0; i < 40; ++i) {
            const auto [r, m] = g.rm();
            const Params p{r, m, g.integer(1, 9), g.integer(1, 3)};
            CAPTURE(p.to_string());
            const Verdict t = verify_theorem1(p);
            const auto [q, s] = verify_qcongruence_and_specialization(p);
            CHECK(t.pass);
            CHECK(q.pass);
            CHECK(s.pass == t.pass);
        }
        // binom(-1/2, k) (-4)^k == binom(2k, k)
        mpq_class b = 1;
        mpz_class four = 1;
        for (std::int64_t k = 0; k <= 200; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
            CHECK(b * mpq_class(four) == mpq_class(c));
            CHECK(binom_rational(mpq_class(-1, 2), k) == b);
            b *= mpq_class(-1, 2) - k;
            b /= k + 1;
            four *= -4;
        }
    }
}
