#include "qcong/qseries.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

#include "qcong/cyclotomic.hpp"

namespace qcong {

FactoredQ::FactoredQ(int sign, std::int64_t qexp, FactorMap factors)
    : sign_(sign < 0 ? -1 : 1), qexp_(qexp), factors_(std::move(factors))
{
    std::erase_if(factors_, [](const auto &kv) { return kv.second == 0; });
}

FactoredQ FactoredQ::zero()
{
    FactoredQ z;
    z.zero_ = true;
    return z;
}

FactoredQ FactoredQ::cyclotomic(std::int64_t d, std::int64_t e)
{
    return FactoredQ(1, 0, {{d, e}});
}

std::int64_t FactoredQ::exponent(std::int64_t d) const
{
    auto it = factors_.find(d);
    return it == factors_.end() ? 0 : it->second;
}

bool FactoredQ::is_laurent_polynomial() const
{
    for (const auto &[d, e] : factors_) {
        if (e < 0) {
            return false;
        }
    }
    return true;
}

std::string FactoredQ::to_string() const
{
    if (zero_) {
        return "0";
    }
    std::ostringstream os;
    if (sign_ < 0) {
        os << '-';
    }
    bool first = true;
    auto sep = [&] {
        if (!first) {
            os << '*';
        }
        first = false;
    };
    if (qexp_ != 0) {
        sep();
        os << "q^" << qexp_;
    }
    for (const auto &[d, e] : factors_) {
        sep();
        os << "Phi_" << d;
        if (e != 1) {
            os << '^' << e;
        }
    }
    if (first) {
        os << '1';
    }
    return os.str();
}

FactoredQ mul_factored(const FactoredQ &a, const FactoredQ &b)
{
    if (a.is_zero() || b.is_zero()) {
        return FactoredQ::zero();
    }
    FactoredQ::FactorMap f = a.factors();
    for (const auto &[d, e] : b.factors()) {
        f[d] += e;
    }
    return FactoredQ(a.sign() * b.sign(), a.qexp() + b.qexp(), std::move(f));
}

FactoredQ pow_factored(const FactoredQ &a, std::int64_t e)
{
    if (a.is_zero()) {
        if (e <= 0) {
            throw DomainError("pow_factored: non-positive power of zero");
        }
        return a;
    }
    FactoredQ::FactorMap f = a.factors();
    for (auto &[d, x] : f) {
        x *= e;
    }
    const int sign = (a.sign() < 0 && (e % 2 != 0)) ? -1 : 1;
    return FactoredQ(sign, a.qexp() * e, std::move(f));
}

FactoredQ div_factored(const FactoredQ &a, const FactoredQ &b)
{
    if (b.is_zero()) {
        throw DomainError("div_factored: division by zero");
    }
    return mul_factored(a, pow_factored(b, -1));
}

FactoredQ one_minus_q_pow(std::int64_t a)
{
    if (a == 0) {
        return FactoredQ::zero();
    }
    const std::int64_t h = std::llabs(a);
    FactoredQ::FactorMap f;
    for (std::int64_t d : divisors(h)) {
        f[d] = 1;
    }
    // 1 - q^{-h} = -q^{-h} (1 - q^h)
    return a > 0 ? FactoredQ(1, 0, std::move(f)) : FactoredQ(-1, a, std::move(f));
}

FactoredQ pochhammer(std::int64_t a, std::int64_t m, std::int64_t k)
{
    if (m < 1) {
        throw DomainError("pochhammer: step m must be positive");
    }
    if (k < 0) {
        throw DomainError("pochhammer: length must be nonnegative");
    }
    int sign = 1;
    std::int64_t qexp = 0;
    FactoredQ::FactorMap f;
    for (std::int64_t j = 0; j < k; ++j) {
        const std::int64_t x = a + j * m;
        if (x == 0) {
            return FactoredQ::zero();
        }
        if (x < 0) {
            sign = -sign;
            qexp += x;
        }
        for (std::int64_t d : divisors(std::llabs(x))) {
            ++f[d];
        }
    }
    return FactoredQ(sign, qexp, std::move(f));
}

FactoredQ poch_ratio(std::int64_t r, std::int64_t m, std::int64_t n)
{
    if (gcd(r, m) != 1) {
        throw DomainError("poch_ratio: gcd(r, m) must be 1");
    }
    return div_factored(pochhammer(r, m, n), pochhammer(m, m, n));
}

FactoredQ qbinom_int(std::int64_t h, std::int64_t k, std::int64_t m)
{
    if (h < 0 || k < 0) {
        throw DomainError("qbinom_int: h and k must be nonnegative");
    }
    if (k > h) {
        return FactoredQ::zero();
    }
    return div_factored(pochhammer(m * (h - k + 1), m, k), pochhammer(m, m, k));
}

namespace {

IntPoly expand_product(const std::vector<std::pair<std::int64_t, std::int64_t>> &powers)
{
    if (powers.empty()) {
        return IntPoly::constant(1);
    }
    return expand_binomial_form(to_binomial_form(powers));
}

} // namespace

RatFun expand(const FactoredQ &f)
{
    RatFun out;
    if (f.is_zero()) {
        out.den = IntPoly::constant(1);
        return out;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> pos, neg;
    for (const auto &[d, e] : f.factors()) {
        (e > 0 ? pos : neg).emplace_back(d, e > 0 ? e : -e);
    }
    out.num = expand_product(pos);
    // index 1 stands for 1 - q = -Phi_1
    if ((f.sign() < 0) != (f.exponent(1) % 2 != 0)) {
        out.num = -out.num;
    }
    out.den = expand_product(neg);
    out.shift = f.qexp();
    return out;
}

LaurentInt expand_laurent(const FactoredQ &f)
{
    if (f.is_zero()) {
        return {};
    }
    if (!f.is_laurent_polynomial()) {
        throw DomainError("expand_laurent: value has a cyclotomic denominator: " + f.to_string());
    }
    RatFun rf = expand(f);
    return LaurentInt(std::move(rf.num), rf.shift);
}

} // namespace qcong
