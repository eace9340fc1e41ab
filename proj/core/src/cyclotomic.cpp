#include "qcong/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace qcong {

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) {
        throw DomainError("divisors: n must be positive, got " + std::to_string(n));
    }
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            lo.push_back(i);
            if (i != n / i) {
                hi.push_back(n / i);
            }
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    n = std::llabs(n);
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        ps.push_back(n);
    }
    return ps;
}

int mobius(std::int64_t n)
{
    if (n < 1) {
        throw DomainError("mobius: n must be positive");
    }
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    return n > 1 ? -mu : mu;
}

std::int64_t totient(std::int64_t n)
{
    if (n < 1) {
        throw DomainError("totient: n must be positive");
    }
    std::int64_t t = n;
    for (std::int64_t p : prime_factors(n)) {
        t -= t / p;
    }
    return t;
}

std::optional<std::int64_t> prime_power_base(std::int64_t d)
{
    if (d < 2) {
        return std::nullopt;
    }
    const auto ps = prime_factors(d);
    if (ps.size() == 1) {
        return ps.front();
    }
    return std::nullopt;
}

BinomialForm to_binomial_form(const std::vector<std::pair<std::int64_t, std::int64_t>> &cyclotomic_powers)
{
    BinomialForm form;
    std::map<std::int64_t, std::int64_t> c;
    for (const auto &[d, e] : cyclotomic_powers) {
        if (e == 0) {
            continue;
        }
        if (d < 1) {
            throw DomainError("to_binomial_form: cyclotomic index must be positive");
        }
        if (d == 1 && (e % 2) != 0) {
            form.sign = -form.sign; // Phi_1 = -(1 - q)
        }
        // Phi_d = prod_{h | d} (1 - q^h)^{mu(d/h)} up to the sign above.
        for (std::int64_t h : divisors(d)) {
            if (const int mu = mobius(d / h); mu != 0) {
                c[h] += mu * e;
            }
        }
    }
    for (const auto &[h, e] : c) {
        if (e != 0) {
            form.powers.emplace_back(h, e);
        }
    }
    return form;
}

IntPoly expand_binomial_form(const BinomialForm &form, IntPoly seed)
{
    IntPoly acc = std::move(seed);
    for (const auto &[h, e] : form.powers) {
        const IntPoly b = IntPoly::one_minus_q_pow(static_cast<std::size_t>(h));
        for (std::int64_t i = 0; i < e; ++i) {
            acc = mul(acc, b);
        }
    }
    for (const auto &[h, e] : form.powers) {
        const IntPoly b = IntPoly::one_minus_q_pow(static_cast<std::size_t>(h));
        for (std::int64_t i = 0; i < -e; ++i) {
            acc = div_exact(acc, b);
        }
    }
    if (form.sign < 0) {
        acc = -acc;
    }
    return acc;
}

namespace {

class PhiCache {
public:
    const IntPoly &get(std::int64_t d)
    {
        {
            std::shared_lock lock(mu_);
            if (auto it = cache_.find(d); it != cache_.end()) {
                return it->second;
            }
        }
        // Computed outside the lock; a racing duplicate produces the same value
        // and the first insert wins.
        IntPoly p = compute(d);
        std::unique_lock lock(mu_);
        return cache_.try_emplace(d, std::move(p)).first->second;
    }

private:
    static IntPoly compute(std::int64_t d)
    {
        if (d == 1) {
            return IntPoly{-1, 1};
        }
        return expand_binomial_form(to_binomial_form({{d, 1}}));
    }

    std::shared_mutex mu_;
    std::unordered_map<std::int64_t, IntPoly> cache_;
};

PhiCache &phi_cache()
{
    static PhiCache cache;
    return cache;
}

} // namespace

const IntPoly &phi(std::int64_t d)
{
    if (d < 1) {
        throw DomainError("phi: index must be at least 1, got " + std::to_string(d));
    }
    return phi_cache().get(d);
}

std::int64_t phi_at_one(std::int64_t d)
{
    if (d < 2) {
        throw DomainError("phi_at_one: index must be at least 2, got " + std::to_string(d));
    }
    return prime_power_base(d).value_or(1);
}

LaurentInt q_int(std::int64_t n)
{
    if (n == 0) {
        return {};
    }
    const auto len = static_cast<std::size_t>(std::llabs(n));
    std::vector<mpz_class> ones(len, mpz_class(1));
    IntPoly base(std::move(ones));
    if (n > 0) {
        return LaurentInt(std::move(base), 0);
    }
    return LaurentInt(-base, n);
}

} // namespace qcong
