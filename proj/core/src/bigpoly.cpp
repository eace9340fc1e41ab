#include "qcong/bigpoly.hpp"

#include <algorithm>
#include <cassert>
#include <span>
#include <sstream>

namespace qcong {

namespace {

template <typename T>
void trim_trailing(std::vector<T> &c)
{
    while (!c.empty() && sgn(c.back()) == 0) {
        c.pop_back();
    }
}

template <typename T>
void render_term(std::ostringstream &os, const T &c, std::size_t k, const std::string &var, bool first)
{
    const bool neg = sgn(c) < 0;
    T mag = neg ? T(-c) : c;
    if (neg) {
        os << '-';
    } else if (!first) {
        os << '+';
    }
    const bool unit = (mag == 1);
    if (!unit || k == 0) {
        os << mag.get_str();
    }
    if (k > 0) {
        os << var;
        if (k > 1) {
            os << '^' << k;
        }
    }
}

// r[i] += a[i] for a span offset into r.
void add_into(std::span<mpz_class> r, std::span<const mpz_class> a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
}

void sub_into(std::span<mpz_class> r, std::span<const mpz_class> a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] -= a[i];
    }
}

// out must hold a.size() + b.size() - 1 zero-initialised entries.
void schoolbook_into(std::span<mpz_class> out, std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) != 0) {
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
    }
}

// Karatsuba on equal-length operands; out holds 2n - 1 zero-initialised entries.
void karatsuba_into(std::span<mpz_class> out, std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    const std::size_t n = a.size();
    assert(b.size() == n);
    if (n <= kKaratsubaThreshold) {
        schoolbook_into(out, a, b);
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;

    auto a0 = a.subspan(0, lo), a1 = a.subspan(lo);
    auto b0 = b.subspan(0, lo), b1 = b.subspan(lo);

    std::vector<mpz_class> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
    karatsuba_into(z0, a0, b0);
    karatsuba_into(z2, a1, b1);

    std::vector<mpz_class> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
    add_into(sa, a0);
    add_into(sb, b0);
    karatsuba_into(z1, sa, sb);
    sub_into(z1, z0);
    sub_into(z1, z2);

    add_into(out, z0);
    add_into(out.subspan(lo), z1);
    add_into(out.subspan(2 * lo), z2);
}

std::size_t nonzero_count(const std::vector<mpz_class> &c)
{
    return static_cast<std::size_t>(
        std::count_if(c.begin(), c.end(), [](const mpz_class &x) { return sgn(x) != 0; }));
}

} // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs) {
        c_.emplace_back(v);
    }
    trim();
}

IntPoly IntPoly::constant(const mpz_class &c)
{
    return IntPoly(std::vector<mpz_class>{c});
}

IntPoly IntPoly::monomial(const mpz_class &c, std::size_t k)
{
    if (c == 0) {
        return {};
    }
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_q_pow(std::size_t h)
{
    if (h == 0) {
        return {};
    }
    std::vector<mpz_class> v(h + 1);
    v[0] = 1;
    v[h] = -1;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    trim_trailing(c_);
}

mpz_class IntPoly::coeff(std::size_t i) const
{
    return i < c_.size() ? c_[i] : mpz_class(0);
}

const mpz_class &IntPoly::lead() const
{
    assert(!c_.empty());
    return c_.back();
}

std::size_t IntPoly::nnz() const
{
    return nonzero_count(c_);
}

std::size_t IntPoly::low_order() const
{
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) != 0) {
            return i;
        }
    }
    return 0;
}

IntPoly &IntPoly::operator+=(const IntPoly &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    add_into(c_, o.c_);
    trim();
    return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    sub_into(c_, o.c_);
    trim();
    return *this;
}

IntPoly &IntPoly::operator*=(const IntPoly &o)
{
    *this = mul(*this, o);
    return *this;
}

IntPoly &IntPoly::operator*=(const mpz_class &s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto &x : c_) {
        x *= s;
    }
    return *this;
}

IntPoly operator*(const IntPoly &a, const IntPoly &b)
{
    return mul(a, b);
}

IntPoly operator-(IntPoly a)
{
    for (auto &x : a.c_) {
        x = -x;
    }
    return a;
}

IntPoly IntPoly::shifted(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    std::vector<mpz_class> v(k + c_.size());
    std::copy(c_.begin(), c_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    IntPoly p;
    p.c_ = std::move(v);
    return p;
}

IntPoly IntPoly::unshifted(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    assert(k <= low_order());
    IntPoly p;
    p.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return p;
}

mpz_class IntPoly::eval(const mpz_class &x) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string IntPoly::to_string(const std::string &var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (sgn(c_[k]) == 0) {
            continue;
        }
        render_term(os, c_[k], k, var, first);
        first = false;
    }
    return os.str();
}

IntPoly mul_schoolbook(const IntPoly &a, const IntPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    // Iterate the outer loop over the sparser operand.
    const bool swap = b.nnz() < a.nnz();
    const auto &x = swap ? b.coeffs() : a.coeffs();
    const auto &y = swap ? a.coeffs() : b.coeffs();
    std::vector<mpz_class> out(x.size() + y.size() - 1);
    schoolbook_into(out, x, y);
    return IntPoly(std::move(out));
}

IntPoly mul(const IntPoly &a, const IntPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t small = std::min(na, nb);
    if (small <= kKaratsubaThreshold || std::min(a.nnz(), b.nnz()) * 4 < small) {
        return mul_schoolbook(a, b);
    }
    // Split the longer operand into chunks of the shorter one's length.
    const auto &lng = na >= nb ? a.coeffs() : b.coeffs();
    const auto &sht = na >= nb ? b.coeffs() : a.coeffs();
    const std::size_t n = sht.size();
    std::vector<mpz_class> out(na + nb - 1);
    std::vector<mpz_class> chunk(n);
    std::vector<mpz_class> prod(2 * n - 1);
    for (std::size_t off = 0; off < lng.size(); off += n) {
        const std::size_t len = std::min(n, lng.size() - off);
        std::fill(chunk.begin(), chunk.end(), 0);
        std::copy_n(lng.begin() + static_cast<std::ptrdiff_t>(off), len, chunk.begin());
        std::fill(prod.begin(), prod.end(), 0);
        karatsuba_into(prod, chunk, sht);
        const std::size_t used = std::min(prod.size(), out.size() - off);
        add_into(std::span<mpz_class>(out).subspan(off), std::span<const mpz_class>(prod).first(used));
    }
    return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly &a, unsigned e)
{
    IntPoly result = IntPoly::constant(1);
    IntPoly base = a;
    while (e > 0) {
        if (e & 1u) {
            result = mul(result, base);
        }
        e >>= 1u;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

std::optional<IntPoly> try_div_exact(const IntPoly &a, const IntPoly &b)
{
    if (b.is_zero()) {
        throw DomainError("div_exact: division by the zero polynomial");
    }
    if (a.is_zero()) {
        return IntPoly{};
    }
    if (a.size() < b.size()) {
        return std::nullopt;
    }
    const auto &bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    // Nonzero terms of b below the leading one.
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < db; ++j) {
        if (sgn(bc[j]) != 0) {
            support.push_back(j);
        }
    }
    const mpz_class &lead = bc[db];
    const bool unit_lead = (lead == 1 || lead == -1);

    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quot(rem.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class &top = rem[i + db];
        if (sgn(top) == 0) {
            continue;
        }
        mpz_class &qi = quot[i];
        if (unit_lead) {
            qi = lead == 1 ? mpz_class(top) : mpz_class(-top);
        } else {
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
                return std::nullopt;
            }
            mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        }
        top = 0;
        for (std::size_t j : support) {
            mpz_submul(rem[i + j].get_mpz_t(), qi.get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (sgn(rem[j]) != 0) {
            return std::nullopt;
        }
    }
    return IntPoly(std::move(quot));
}

IntPoly div_exact(const IntPoly &a, const IntPoly &b)
{
    auto q = try_div_exact(a, b);
    if (!q) {
        throw NotDivisible("div_exact: " + b.to_string() + " does not divide the dividend over Z[q]");
    }
    return std::move(*q);
}

mpz_class eval_at_one(const IntPoly &a)
{
    mpz_class s = 0;
    for (const auto &x : a.coeffs()) {
        s += x;
    }
    return s;
}

mpz_class content(const IntPoly &a)
{
    mpz_class g = 0;
    for (const auto &x : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs))
{
    for (auto &x : c_) {
        x.canonicalize();
    }
    trim();
}

RatPoly::RatPoly(const IntPoly &p)
{
    c_.reserve(p.size());
    for (const auto &x : p.coeffs()) {
        c_.emplace_back(x);
    }
}

RatPoly RatPoly::constant(const mpq_class &c)
{
    return RatPoly(std::vector<mpq_class>{c});
}

RatPoly RatPoly::monomial(const mpq_class &c, std::size_t k)
{
    if (c == 0) {
        return {};
    }
    std::vector<mpq_class> v(k + 1);
    v[k] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim()
{
    trim_trailing(c_);
}

mpq_class RatPoly::coeff(std::size_t i) const
{
    return i < c_.size() ? c_[i] : mpq_class(0);
}

const mpq_class &RatPoly::lead() const
{
    assert(!c_.empty());
    return c_.back();
}

RatPoly &RatPoly::operator+=(const RatPoly &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

RatPoly &RatPoly::operator-=(const RatPoly &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

RatPoly &RatPoly::operator*=(const mpq_class &s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto &x : c_) {
        x *= s;
    }
    return *this;
}

RatPoly operator*(const RatPoly &a, const RatPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    mpq_class t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) {
                continue;
            }
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            out[i + j] += t;
        }
    }
    RatPoly r;
    r.c_ = std::move(out);
    r.trim();
    return r;
}

RatPoly operator-(RatPoly a)
{
    for (auto &x : a.c_) {
        x = -x;
    }
    return a;
}

std::string RatPoly::to_string(const std::string &var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (sgn(c_[k]) == 0) {
            continue;
        }
        const bool frac = c_[k].get_den() != 1;
        if (frac) {
            if (sgn(c_[k]) < 0) {
                os << '-';
            } else if (!first) {
                os << '+';
            }
            os << '(' << mpq_class(abs(c_[k])).get_str() << ')';
            if (k > 0) {
                os << var;
                if (k > 1) {
                    os << '^' << k;
                }
            }
        } else {
            render_term(os, c_[k], k, var, first);
        }
        first = false;
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b)
{
    if (b.is_zero()) {
        throw DomainError("divmod: division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {RatPoly{}, a};
    }
    const auto &bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const mpq_class inv_lead = 1 / bc[db];
    std::vector<mpq_class> rem = a.coeffs();
    std::vector<mpq_class> quot(rem.size() - db);
    mpq_class t;
    for (std::size_t i = quot.size(); i-- > 0;) {
        if (sgn(rem[i + db]) == 0) {
            continue;
        }
        quot[i] = rem[i + db] * inv_lead;
        rem[i + db] = 0;
        for (std::size_t j = 0; j < db; ++j) {
            if (sgn(bc[j]) != 0) {
                mpq_mul(t.get_mpq_t(), quot[i].get_mpq_t(), bc[j].get_mpq_t());
                rem[i + j] -= t;
            }
        }
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly rem_mod(const RatPoly &a, const IntPoly &phi)
{
    assert(phi.degree() >= 1 && phi.lead() == 1);
    const auto d = static_cast<std::size_t>(phi.degree());
    if (a.coeffs().size() <= d) {
        return a;
    }
    const auto &pc = phi.coeffs();
    std::vector<mpq_class> rem = a.coeffs();
    mpq_class t;
    for (std::size_t top = rem.size(); top-- > d;) {
        if (sgn(rem[top]) == 0) {
            continue;
        }
        const std::size_t base = top - d;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(pc[j]) != 0) {
                mpq_set_z(t.get_mpq_t(), pc[j].get_mpz_t());
                t *= rem[top];
                rem[base + j] -= t;
            }
        }
        rem[top] = 0;
    }
    rem.resize(d);
    return RatPoly(std::move(rem));
}

// ---------------------------------------------------------------- LaurentInt

LaurentInt::LaurentInt(IntPoly base, std::int64_t shift) : base_(std::move(base)), shift_(shift)
{
    normalize();
}

void LaurentInt::normalize()
{
    if (base_.is_zero()) {
        shift_ = 0;
        return;
    }
    const std::size_t low = base_.low_order();
    if (low > 0) {
        base_ = base_.unshifted(low);
        shift_ += static_cast<std::int64_t>(low);
    }
}

LaurentInt LaurentInt::monomial(const mpz_class &c, std::int64_t k)
{
    return LaurentInt(IntPoly::constant(c), k);
}

LaurentInt LaurentInt::one_minus_q_pow(std::int64_t a)
{
    if (a == 0) {
        return {};
    }
    if (a > 0) {
        return LaurentInt(IntPoly::one_minus_q_pow(static_cast<std::size_t>(a)), 0);
    }
    // 1 - q^a = -q^a (1 - q^{-a})
    return LaurentInt(-IntPoly::one_minus_q_pow(static_cast<std::size_t>(-a)), a);
}

std::int64_t LaurentInt::top_degree() const noexcept
{
    return base_.is_zero() ? kDegreeOfZero : shift_ + base_.degree();
}

mpz_class LaurentInt::coeff(std::int64_t k) const
{
    if (base_.is_zero() || k < shift_) {
        return 0;
    }
    return base_.coeff(static_cast<std::size_t>(k - shift_));
}

LaurentInt &LaurentInt::operator+=(const LaurentInt &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    const std::int64_t s = std::min(shift_, o.shift_);
    IntPoly a = base_.shifted(static_cast<std::size_t>(shift_ - s));
    a += o.base_.shifted(static_cast<std::size_t>(o.shift_ - s));
    base_ = std::move(a);
    shift_ = s;
    normalize();
    return *this;
}

LaurentInt &LaurentInt::operator-=(const LaurentInt &o)
{
    return *this += -o;
}

LaurentInt &LaurentInt::operator*=(const LaurentInt &o)
{
    if (is_zero() || o.is_zero()) {
        return *this = LaurentInt{};
    }
    base_ = mul(base_, o.base_);
    shift_ += o.shift_;
    return *this;
}

LaurentInt operator-(LaurentInt a)
{
    a.base_ = -a.base_;
    return a;
}

LaurentInt &LaurentInt::shift_by(std::int64_t k)
{
    if (!is_zero()) {
        shift_ += k;
    }
    return *this;
}

std::string LaurentInt::to_string(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    if (shift_ == 0) {
        return base_.to_string(var);
    }
    return var + "^" + std::to_string(shift_) + "*(" + base_.to_string(var) + ")";
}

std::optional<LaurentInt> try_div_exact(const LaurentInt &a, const LaurentInt &b)
{
    auto q = try_div_exact(a.base(), b.base());
    if (!q) {
        return std::nullopt;
    }
    return LaurentInt(std::move(*q), a.shift() - b.shift());
}

LaurentInt div_exact(const LaurentInt &a, const LaurentInt &b)
{
    auto q = try_div_exact(a, b);
    if (!q) {
        throw NotDivisible("div_exact: " + b.to_string() + " does not divide the Laurent dividend");
    }
    return std::move(*q);
}

mpz_class eval_at_one(const LaurentInt &a)
{
    return eval_at_one(a.base());
}

mpz_class content(const LaurentInt &a)
{
    return content(a.base());
}

} // namespace qcong
