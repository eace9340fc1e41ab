#include "qcong/cycmodfield.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcong/constructs.hpp"
#include "qcong/cyclotomic.hpp"

namespace qcong {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t d)
{
    const std::int64_t r = a % d;
    return r < 0 ? r + d : r;
}

// Remainder of an integer polynomial by a monic integer polynomial.
IntPoly rem_monic(std::vector<mpz_class> c, const IntPoly &phi)
{
    const auto &pc = phi.coeffs();
    const std::size_t dp = pc.size() - 1;
    if (c.size() > dp) {
        for (std::size_t top = c.size(); top-- > dp;) {
            if (sgn(c[top]) == 0) {
                continue;
            }
            const std::size_t base = top - dp;
            for (std::size_t j = 0; j < dp; ++j) {
                if (sgn(pc[j]) != 0) {
                    mpz_submul(c[base + j].get_mpz_t(), c[top].get_mpz_t(), pc[j].get_mpz_t());
                }
            }
            c[top] = 0;
        }
        c.resize(dp);
    }
    return IntPoly(std::move(c));
}

// Coefficients folded modulo q^d - 1: entry j collects every exponent == j (mod d).
std::vector<mpz_class> fold(const IntPoly &p, std::int64_t shift, std::int64_t stride, std::int64_t d)
{
    std::vector<mpz_class> out(static_cast<std::size_t>(d));
    const auto &c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) {
            continue;
        }
        const std::int64_t e = shift + stride * static_cast<std::int64_t>(i);
        out[static_cast<std::size_t>(mod_floor(e, d))] += c[i];
    }
    return out;
}

// Per-d tables: 1 - q^j and its inverse for 0 <= j < d.
struct FieldTables {
    std::vector<CycModElt> one_minus;
    std::vector<CycModElt> one_minus_inv; // index 0 unused (1 - q^0 = 0)
};

template <typename Key, typename Value, typename Make>
const Value &memo(std::shared_mutex &mu, std::map<Key, std::unique_ptr<Value>> &cache, const Key &key, Make make)
{
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find(key); it != cache.end()) {
            return *it->second;
        }
    }
    auto value = std::make_unique<Value>(make());
    std::unique_lock lock(mu);
    auto [it, inserted] = cache.try_emplace(key, std::move(value));
    return *it->second;
}

const FieldTables &tables(std::int64_t d)
{
    static std::shared_mutex mu;
    static std::map<std::int64_t, std::unique_ptr<FieldTables>> cache;
    return memo(mu, cache, d, [d] {
        FieldTables t;
        t.one_minus.reserve(static_cast<std::size_t>(d));
        t.one_minus_inv.reserve(static_cast<std::size_t>(d));
        for (std::int64_t j = 0; j < d; ++j) {
            std::vector<mpz_class> c(static_cast<std::size_t>(d));
            if (j > 0) {
                c[0] = 1;
                c[static_cast<std::size_t>(j)] = -1;
            }
            t.one_minus.emplace_back(d, rem_monic(std::move(c), phi(d)));
        }
        t.one_minus_inv.push_back(t.one_minus[0]);
        for (std::int64_t j = 1; j < d; ++j) {
            t.one_minus_inv.push_back(inv(t.one_minus[static_cast<std::size_t>(j)]));
        }
        return t;
    });
}

const CycModElt &inv_one_minus_q_pow(std::int64_t a, std::int64_t d)
{
    const std::int64_t j = mod_floor(a, d);
    if (j == 0) {
        throw NotInvertible("1 - q^" + std::to_string(a) + " vanishes modulo Phi_" + std::to_string(d));
    }
    return tables(d).one_minus_inv[static_cast<std::size_t>(j)];
}

const CycModElt &reduced_phi(std::int64_t e, std::int64_t d)
{
    static std::shared_mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<CycModElt>> cache;
    return memo(mu, cache, std::pair{e, d}, [e, d] { return reduce(phi(e), d); });
}

// Gaussian binomial [h choose k]_x as an integer polynomial in x.
const IntPoly &qbinom_poly(std::int64_t h, std::int64_t k)
{
    static std::shared_mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<IntPoly>> cache;
    return memo(mu, cache, std::pair{h, k}, [h, k] {
        const LaurentInt v = expand_laurent(qbinom_int(h, k, 1));
        assert(v.shift() == 0 || v.is_zero());
        return v.base();
    });
}

// p(q^m) reduced modulo Phi_d.
CycModElt reduce_stretched(const IntPoly &p, std::int64_t m, std::int64_t d)
{
    return CycModElt(d, rem_monic(fold(p, 0, m, d), phi(d)));
}

void require_field(std::int64_t m, std::int64_t d, const char *who)
{
    if (d < 2) {
        throw DomainError(std::string(who) + ": d must be at least 2");
    }
    if (m < 1 || gcd(m, d) != 1) {
        throw DomainError(std::string(who) + ": requires m >= 1 and gcd(m, d) = 1");
    }
}

std::int64_t tri(std::int64_t k)
{
    return k * (k - 1) / 2;
}

CycModElt signed_q_pow(bool negative, std::int64_t e, std::int64_t d)
{
    CycModElt x = reduce_q_pow(e, d);
    return negative ? -x : x;
}

} // namespace

// ---------------------------------------------------------------- CycModElt

CycModElt::CycModElt(std::int64_t d, IntPoly num, mpz_class den) : d_(d), num_(std::move(num)), den_(std::move(den))
{
    canonicalize();
}

CycModElt::CycModElt(std::int64_t d, const IntPoly &p) : d_(d)
{
    if (d < 2) {
        throw DomainError("CycModElt: d must be at least 2");
    }
    num_ = rem_monic(p.coeffs(), phi(d));
}

CycModElt::CycModElt(std::int64_t d, const RatPoly &rep) : d_(d)
{
    if (d < 2) {
        throw DomainError("CycModElt: d must be at least 2");
    }
    mpz_class l = 1;
    for (const auto &c : rep.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> num;
    num.reserve(rep.coeffs().size());
    for (const auto &c : rep.coeffs()) {
        num.emplace_back(c.get_num() * (l / c.get_den()));
    }
    num_ = rem_monic(std::move(num), phi(d));
    den_ = l;
    canonicalize();
}

void CycModElt::canonicalize()
{
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) {
        return;
    }
    mpz_class g = content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        std::vector<mpz_class> c = num_.coeffs();
        for (auto &x : c) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
        num_ = IntPoly(std::move(c));
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void CycModElt::check_same_field(const CycModElt &o) const
{
    if (d_ != o.d_) {
        throw DomainError("CycModElt: operands live in different fields (Phi_" + std::to_string(d_) + " vs Phi_" +
                          std::to_string(o.d_) + ")");
    }
}

RatPoly CycModElt::rep() const
{
    std::vector<mpq_class> c;
    c.reserve(num_.size());
    for (const auto &x : num_.coeffs()) {
        c.emplace_back(x, den_);
    }
    return RatPoly(std::move(c));
}

CycModElt &CycModElt::operator+=(const CycModElt &o)
{
    check_same_field(o);
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

CycModElt &CycModElt::operator-=(const CycModElt &o)
{
    return *this += -o;
}

CycModElt &CycModElt::operator*=(const CycModElt &o)
{
    check_same_field(o);
    if (is_zero() || o.is_zero()) {
        num_ = IntPoly{};
        den_ = 1;
        return *this;
    }
    const IntPoly prod = mul_schoolbook(num_, o.num_);
    num_ = rem_monic(prod.coeffs(), phi(d_));
    den_ *= o.den_;
    canonicalize();
    return *this;
}

CycModElt &CycModElt::operator*=(const mpq_class &s)
{
    num_ *= s.get_num();
    den_ *= s.get_den();
    canonicalize();
    return *this;
}

CycModElt operator-(CycModElt a)
{
    a.num_ = -a.num_;
    return a;
}

// ---------------------------------------------------------------- reduction

CycModElt reduce(const RatPoly &p, std::int64_t d)
{
    return CycModElt(d, p);
}

CycModElt reduce(const IntPoly &p, std::int64_t d)
{
    return CycModElt(d, p);
}

CycModElt reduce(const LaurentInt &p, std::int64_t d)
{
    if (d < 2) {
        throw DomainError("reduce: d must be at least 2");
    }
    return CycModElt(d, rem_monic(fold(p.base(), p.shift(), 1, d), phi(d)));
}

CycModElt reduce_constant(const mpq_class &c, std::int64_t d)
{
    return CycModElt(d, RatPoly::constant(c));
}

CycModElt reduce_q_pow(std::int64_t e, std::int64_t d)
{
    return reduce(LaurentInt::monomial(1, e), d);
}

CycModElt reduce_one_minus_q_pow(std::int64_t a, std::int64_t d)
{
    if (d < 2) {
        throw DomainError("reduce_one_minus_q_pow: d must be at least 2");
    }
    return tables(d).one_minus[static_cast<std::size_t>(mod_floor(a, d))];
}

std::optional<CycModElt> reduce(const FactoredQ &f, std::int64_t d)
{
    if (f.is_zero()) {
        return reduce_constant(0, d);
    }
    const std::int64_t ed = f.exponent(d);
    if (ed > 0) {
        return reduce_constant(0, d);
    }
    if (ed < 0) {
        return std::nullopt;
    }
    // index 1 stands for 1 - q = -Phi_1
    const bool negative = (f.sign() < 0) != (f.exponent(1) % 2 != 0);
    CycModElt acc = signed_q_pow(negative, f.qexp(), d);
    for (const auto &[e, x] : f.factors()) {
        if (e == d) {
            continue;
        }
        acc *= pow(reduced_phi(e, d), x);
    }
    return acc;
}

CycModElt inv(const CycModElt &x)
{
    const std::int64_t d = x.d();
    if (x.is_zero()) {
        throw NotInvertible("zero has no inverse modulo Phi_" + std::to_string(d));
    }
    // Extended Euclid: invariant r_i == s_i * x (mod Phi_d).
    RatPoly r0(phi(d)), r1 = x.rep();
    RatPoly s0, s1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        RatPoly s2 = s0 - quot * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() > 0) {
        throw NotInvertible(x.to_string() + " shares the factor " + r0.to_string() + " with Phi_" +
                            std::to_string(d));
    }
    return CycModElt(d, s0 * (1 / r0.lead()));
}

CycModElt pow(const CycModElt &x, std::int64_t e)
{
    if (e < 0) {
        return pow(inv(x), -e);
    }
    CycModElt result = reduce_constant(1, x.d());
    CycModElt base = x;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

mpq_class rising_factorial(const mpq_class &x, std::int64_t s)
{
    mpq_class v = 1;
    for (std::int64_t j = 0; j < s; ++j) {
        v *= x + j;
    }
    return v;
}

// ---------------------------------------------------------------- checks

CheckResult check_vanishing_factor(std::int64_t r, std::int64_t m, std::int64_t d)
{
    require_field(m, d, "check_vanishing_factor");
    const std::int64_t lam = lambda(r, m, d);
    const std::int64_t a = r + lam * m;

    // (1 - q^{a}) / (1 - q^d) as an exact Laurent polynomial, a = d w.
    const LaurentInt vanishing =
        div_exact(LaurentInt::one_minus_q_pow(a), LaurentInt::one_minus_q_pow(d));
    CycModElt lhs = reduce(vanishing, d);
    for (std::int64_t j = 0; j < d; ++j) {
        if (j != lam) {
            lhs *= reduce_one_minus_q_pow(r + j * m, d);
        }
    }
    const CycModElt rhs = reduce_constant(a, d);
    return {lhs == rhs, lhs.to_string(), rhs.to_string(), "lambda=" + std::to_string(lam)};
}

CheckResult check_qlucas(std::int64_t r, std::int64_t m, std::int64_t d, std::int64_t s, std::int64_t t)
{
    require_field(m, d, "check_qlucas");
    if (s < 0 || t < 0 || t >= d) {
        throw DomainError("check_qlucas: requires s >= 0 and 0 <= t < d");
    }
    const std::int64_t lam = lambda(r, m, d);
    const std::int64_t k = s * d + t;
    const LaurentInt one_minus_qd = LaurentInt::one_minus_q_pow(d);

    // Left side: the factors divisible by 1 - q^d on top (j == lam mod d) and
    // bottom (j + 1 == 0 mod d) are paired, each divided by 1 - q^d exactly.
    CycModElt top = reduce_constant(1, d);
    CycModElt bottom = reduce_constant(1, d);
    for (std::int64_t j = 0; j < k; ++j) {
        const std::int64_t a = r + j * m;
        if (mod_floor(j - lam, d) == 0) {
            top *= reduce(div_exact(LaurentInt::one_minus_q_pow(a), one_minus_qd), d);
        } else {
            top *= reduce_one_minus_q_pow(a, d);
        }
        const std::int64_t b = (j + 1) * m;
        if ((j + 1) % d == 0) {
            bottom *= reduce(div_exact(LaurentInt::one_minus_q_pow(b), one_minus_qd), d);
        } else {
            bottom *= reduce_one_minus_q_pow(b, d);
        }
    }
    // An unpaired top factor (t > lam) is a multiple of 1 - q^d and vanishes.
    if (t > lam) {
        top = reduce_constant(0, d);
    }
    const CycModElt lhs = top.is_zero() ? top : top * inv(bottom);

    mpq_class x{mpz_class(r + lam * m), mpz_class(m * d)};
    x.canonicalize();
    const mpq_class scalar = rising_factorial(x, s) / rising_factorial(1, s);
    CycModElt ratio_t = reduce_constant(1, d);
    for (std::int64_t j = 0; j < t; ++j) {
        ratio_t *= reduce_one_minus_q_pow(r + j * m, d);
        ratio_t *= inv_one_minus_q_pow((j + 1) * m, d);
    }
    const CycModElt rhs = ratio_t * scalar;
    return {lhs == rhs, lhs.to_string(), rhs.to_string(),
            "lambda=" + std::to_string(lam) + " scalar=" + scalar.get_str()};
}

CheckResult check_block_sum(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d)
{
    require_field(m, d, "check_block_sum");
    if (rho < 1) {
        throw DomainError("check_block_sum: rho must be positive");
    }
    const std::int64_t h = lambda(r, m, d);

    CycModElt sum = reduce_constant(0, d);
    CycModElt reflected_sum = reduce_constant(0, d);
    CycModElt ratio = reduce_constant(1, d);
    std::string detail;
    for (std::int64_t k = 0; k < d; ++k) {
        if (k > 0) {
            ratio *= reduce_one_minus_q_pow(r + (k - 1) * m, d);
            ratio *= inv_one_minus_q_pow(k * m, d);
        }
        const bool odd = (k % 2) != 0;
        const CycModElt sigma = signed_q_pow(odd, m * h * k - m * tri(k), d);
        const CycModElt sigma_reflected = signed_q_pow(odd, -r * k - m * tri(k), d);
        const CycModElt weight = reduce_q_pow(-m * k, d) * reduce(q_int(2 * m * k + r), d);
        sum += weight * pow(sigma * ratio, rho);
        reflected_sum += weight * pow(sigma_reflected * ratio, rho);

        // ratio_k == (-1)^k q^{m k(k-1)/2 - mhk} [h choose k]_{q^m}
        CycModElt binom = k > h ? reduce_constant(0, d) : reduce_stretched(qbinom_poly(h, k), m, d);
        const CycModElt expected = signed_q_pow(odd, m * tri(k) - m * h * k, d) * binom;
        if (!(expected == ratio) && detail.empty()) {
            detail = "ratio reduction fails at k=" + std::to_string(k) + ": " + ratio.to_string() +
                     " vs " + expected.to_string();
        }
    }
    const bool pass = sum.is_zero() && reflected_sum.is_zero() && detail.empty();
    if (detail.empty()) {
        detail = "h=" + std::to_string(h) + " reflected=" + reflected_sum.to_string();
    }
    return {pass, sum.to_string(), "0", detail};
}

CheckResult check_antisymmetry(std::int64_t h, std::int64_t rho)
{
    if (h < 0 || rho < 1) {
        throw DomainError("check_antisymmetry: requires h >= 0 and rho >= 1");
    }
    LaurentInt total;
    for (std::int64_t k = 0; k <= h; ++k) {
        // x^{-k} - x^{k-h}
        LaurentInt weight = LaurentInt::monomial(1, -k) - LaurentInt::monomial(1, k - h);
        if (weight.is_zero()) {
            continue;
        }
        total += weight * LaurentInt(pow(qbinom_poly(h, k), static_cast<unsigned>(rho)), 0);
    }
    return {total.is_zero(), total.is_zero() ? "0" : total.to_string("x"), "0",
            "h=" + std::to_string(h) + " rho=" + std::to_string(rho)};
}

namespace {

// nu_k reduced mod Phi_d, with the ratio taken from its factored closed form.
std::optional<CycModElt> reduce_nu(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d, std::int64_t h,
                                   std::int64_t k)
{
    const CycModElt sigma = signed_q_pow(k % 2 != 0, m * h * k - m * tri(k), d);
    CycModElt nu = reduce_q_pow(-m * k, d) * reduce(q_int(2 * m * k + r), d) * pow(sigma, rho);
    if (rho > 1) {
        auto ratio = reduce(poch_ratio(r, m, k), d);
        if (!ratio) {
            return std::nullopt;
        }
        nu *= pow(*ratio, rho - 1);
    }
    return nu;
}

} // namespace

CheckResult check_block_recurrence(std::int64_t r, std::int64_t m, std::int64_t rho, std::int64_t d,
                                   std::int64_t s, std::int64_t t)
{
    require_field(m, d, "check_block_recurrence");
    if (s < 0 || t < 0 || t >= d || rho < 1) {
        throw DomainError("check_block_recurrence: requires s >= 0, 0 <= t < d, rho >= 1");
    }
    const std::int64_t h = lambda(r, m, d);
    const auto lhs = reduce_nu(r, m, rho, d, h, s * d + t);
    const auto nu_t = reduce_nu(r, m, rho, d, h, t);
    if (!lhs || !nu_t) {
        return {false, lhs ? lhs->to_string() : "not Phi_d-integral", nu_t ? nu_t->to_string() : "not Phi_d-integral",
                "nu is not Phi_" + std::to_string(d) + "-integral"};
    }
    mpq_class x{mpz_class(r + h * m), mpz_class(m * d)};
    x.canonicalize();
    const mpq_class c = rising_factorial(x, s) / rising_factorial(1, s);
    mpq_class mu = 1;
    for (std::int64_t i = 0; i < rho - 1; ++i) {
        mu *= c;
    }
    if ((s * rho) % 2 != 0) {
        mu = -mu;
    }
    const CycModElt rhs = *nu_t * mu;
    return {*lhs == rhs, lhs->to_string(), rhs.to_string(), "mu_s=" + mu.get_str()};
}

CheckResult check_sign_reduction(std::int64_t m, std::int64_t d, std::int64_t s, std::int64_t h)
{
    require_field(m, d, "check_sign_reduction");
    const std::int64_t sd = s * d;
    const CycModElt block = signed_q_pow(sd % 2 != 0, -m * tri(sd), d);
    const CycModElt expected_block = reduce_constant(s % 2 != 0 ? -1 : 1, d);
    if (!(block == expected_block)) {
        return {false, block.to_string(), expected_block.to_string(), "block factor, s=" + std::to_string(s)};
    }
    for (std::int64_t t = 0; t < d; ++t) {
        const std::int64_t k = sd + t;
        const CycModElt lhs = signed_q_pow(k % 2 != 0, m * h * k - m * tri(k), d);
        const CycModElt rhs = signed_q_pow((s + t) % 2 != 0, m * h * t - m * tri(t), d);
        if (!(lhs == rhs)) {
            return {false, lhs.to_string(), rhs.to_string(), "t=" + std::to_string(t)};
        }
    }
    return {true, expected_block.to_string(), expected_block.to_string(), ""};
}

CheckResult check_half_period(std::int64_t d)
{
    if (d < 2 || d % 2 != 0) {
        throw DomainError("check_half_period: d must be even and at least 2");
    }
    const CycModElt lhs = reduce_q_pow(d / 2, d);
    const CycModElt rhs = reduce_constant(-1, d);
    return {lhs == rhs, lhs.to_string(), rhs.to_string(), ""};
}

} // namespace qcong
