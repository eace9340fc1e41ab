#include "qcong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qcong/cyclotomic.hpp"

namespace qcong {

namespace {

struct TaskOut {
    std::vector<Verdict> verdicts;
    std::size_t skipped = 0;
};

using Task = std::function<std::vector<Verdict>()>;

struct Plan {
    std::vector<Task> tasks;
    std::size_t skipped = 0;
};

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    const auto *end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

template <class F>
void for_range(const Range &r, F &&f)
{
    for (std::int64_t x = r.lo; x <= r.hi; ++x) {
        f(x);
    }
}

Task single(std::function<Verdict()> f)
{
    return [f = std::move(f)] { return std::vector<Verdict>{f()}; };
}

void plan_theorem1(const SweepSpec &s, Plan &plan)
{
    for_range(s.r, [&](std::int64_t r) {
        for_range(s.m, [&](std::int64_t m) {
            for_range(s.rho, [&](std::int64_t rho) {
                for_range(s.n, [&](std::int64_t n) {
                    if (gcd(r, m) != 1 || m == 1) {
                        ++plan.skipped;
                        return;
                    }
                    plan.tasks.push_back(single([=] { return verify_theorem1({r, m, n, rho}); }));
                });
            });
        });
    });
}

void plan_corollary2(const SweepSpec &s, Plan &plan)
{
    for_range(s.rho, [&](std::int64_t rho) {
        for_range(s.n, [&](std::int64_t n) {
            if (rho < 2 || n < 2) {
                ++plan.skipped;
                return;
            }
            plan.tasks.push_back(single([=] { return verify_corollary2(rho, n); }));
        });
    });
}

void plan_qcong(const SweepSpec &s, Plan &plan)
{
    for_range(s.r, [&](std::int64_t r) {
        for_range(s.m, [&](std::int64_t m) {
            for_range(s.rho, [&](std::int64_t rho) {
                for_range(s.n, [&](std::int64_t n) {
                    if (gcd(r, m) != 1 || m == 1) {
                        plan.skipped += 2;
                        return;
                    }
                    plan.tasks.push_back([=] {
                        auto [q, sp] = verify_qcongruence_and_specialization({r, m, n, rho});
                        return std::vector<Verdict>{std::move(q), std::move(sp)};
                    });
                });
            });
        });
    });
}

void plan_lemmas(const SweepSpec &s, Plan &plan)
{
    for (std::int64_t d = 2; d <= s.d_max; d += 2) {
        plan.tasks.push_back(single([=] { return verify_half_period(d); }));
    }
    for_range(s.rho, [&](std::int64_t rho) {
        for (std::int64_t h = 0; h < s.d_max; ++h) {
            plan.tasks.push_back(single([=] { return verify_antisymmetry(h, rho); }));
        }
    });
    for_range(s.r, [&](std::int64_t r) {
        for_range(s.m, [&](std::int64_t m) {
            if (gcd(r, m) != 1) {
                ++plan.skipped;
                return;
            }
            for (std::int64_t d = 2; d <= s.d_max; ++d) {
                if (gcd(d, m) != 1) {
                    continue;
                }
                plan.tasks.push_back([=] {
                    return std::vector<Verdict>{verify_vanishing_factor(r, m, d),
                                                verify_qlucas(r, m, d, kQLucasSMax),
                                                verify_sign_reduction(r, m, d, kQLucasSMax)};
                });
                for_range(s.rho, [&](std::int64_t rho) {
                    plan.tasks.push_back(single([=] { return verify_block_sum(r, m, rho, d); }));
                    if (d <= kBlockRecurrenceDMax) {
                        plan.tasks.push_back(
                            single([=] { return verify_block_recurrence(r, m, rho, d, kBlockRecurrenceSMax); }));
                    }
                });
            }
        });
    });
}

void plan_identities(const SweepSpec &s, Plan &plan)
{
    for_range(s.r, [&](std::int64_t r) {
        for_range(s.m, [&](std::int64_t m) {
            for_range(s.n, [&](std::int64_t n) {
                if (gcd(r, m) != 1 || m == 1) {
                    plan.skipped += 2;
                    return;
                }
                plan.tasks.push_back([=] {
                    return std::vector<Verdict>{verify_ratio_factorization(r, m, n), verify_ac_at_one(r, m, n)};
                });
            });
        });
    });
    for (std::int64_t d = 1; d <= s.d_max; ++d) {
        plan.tasks.push_back([=] {
            return std::vector<Verdict>{verify_cyclotomic(d), verify_qint_quotient(d, kQIntQuotientKMax)};
        });
    }
}

void plan_2adic(const SweepSpec &s, Plan &plan)
{
    for_range(s.rho, [&](std::int64_t rho) {
        for_range(s.n, [&](std::int64_t n) {
            if (n < 2) {
                ++plan.skipped;
                return;
            }
            plan.tasks.push_back(single([=] { return verify_2adic(rho, n); }));
        });
    });
}

void plan_sun(const SweepSpec &s, Plan &plan)
{
    for_range(s.n, [&](std::int64_t n) {
        if (n < 2) {
            ++plan.skipped;
            return;
        }
        plan.tasks.push_back(single([=] { return verify_sun(n); }));
    });
}

Plan make_plan(const SweepSpec &s)
{
    Plan plan;
    for (ClaimGroup g : s.claims) {
        switch (g) {
        case ClaimGroup::kTheorem1: plan_theorem1(s, plan); break;
        case ClaimGroup::kCorollary2: plan_corollary2(s, plan); break;
        case ClaimGroup::kQCong: plan_qcong(s, plan); break;
        case ClaimGroup::kLemmas: plan_lemmas(s, plan); break;
        case ClaimGroup::kIdentities: plan_identities(s, plan); break;
        case ClaimGroup::k2Adic: plan_2adic(s, plan); break;
        case ClaimGroup::kSun: plan_sun(s, plan); break;
        }
    }
    return plan;
}

TaskOut run_task(const Task &t)
{
    try {
        return {t(), 0};
    } catch (const DomainError &) {
        return {{}, 1};
    }
}

bool any_failed(const TaskOut &o)
{
    return std::any_of(o.verdicts.begin(), o.verdicts.end(), [](const Verdict &v) { return !v.pass; });
}

} // namespace

std::vector<ClaimGroup> parse_claim_groups(const std::string &name)
{
    if (name == "all") {
        return {ClaimGroup::kTheorem1, ClaimGroup::kCorollary2, ClaimGroup::kQCong,
                ClaimGroup::kLemmas,   ClaimGroup::kIdentities, ClaimGroup::k2Adic};
    }
    for (ClaimGroup g : {ClaimGroup::kTheorem1, ClaimGroup::kCorollary2, ClaimGroup::kQCong, ClaimGroup::kLemmas,
                         ClaimGroup::kIdentities, ClaimGroup::k2Adic, ClaimGroup::kSun}) {
        if (to_string(g) == name) {
            return {g};
        }
    }
    throw std::invalid_argument("unknown claim group: '" + name + "'");
}

std::string to_string(ClaimGroup g)
{
    switch (g) {
    case ClaimGroup::kTheorem1: return "theorem1";
    case ClaimGroup::kCorollary2: return "corollary2";
    case ClaimGroup::kQCong: return "qcong";
    case ClaimGroup::kLemmas: return "lemmas";
    case ClaimGroup::kIdentities: return "identities";
    case ClaimGroup::k2Adic: return "2adic";
    case ClaimGroup::kSun: return "sun";
    }
    return "?";
}

Range Range::parse(const std::string &text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = parse_int(text);
        return {v, v};
    }
    Range r{parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
    if (r.lo > r.hi) {
        throw std::invalid_argument("empty range: '" + text + "'");
    }
    return r;
}

std::string Range::to_string() const
{
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

std::optional<Format> parse_format(const std::string &name)
{
    if (name == "text") return Format::kText;
    if (name == "json") return Format::kJson;
    if (name == "csv") return Format::kCsv;
    return std::nullopt;
}

std::string to_string(Format f)
{
    switch (f) {
    case Format::kText: return "text";
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    }
    return "?";
}

void SweepSpec::validate() const
{
    if (claims.empty()) {
        throw std::invalid_argument("no claim group given");
    }
    for (const Range *r : {&this->r, &m, &rho, &n}) {
        if (r->lo > r->hi) {
            throw std::invalid_argument("empty range");
        }
    }
    if (m.lo < 1) throw std::invalid_argument("--m must be >= 1");
    if (n.lo < 1) throw std::invalid_argument("--n must be >= 1");
    if (rho.lo < 1) throw std::invalid_argument("--rho must be >= 1");
    if (d_max < 2) throw std::invalid_argument("--d-max must be >= 2");
}

std::size_t SweepResult::passed() const
{
    return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.pass; }));
}

std::size_t SweepResult::failed() const
{
    return verdicts.size() - passed();
}

SweepResult run_sweep(const SweepSpec &spec)
{
    spec.validate();
    Plan plan = make_plan(spec);
    const std::size_t count = plan.tasks.size();
    std::vector<TaskOut> outs(count);

    unsigned jobs = spec.jobs != 0 ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));

    // Under fail-fast, tasks after the earliest known failure are not started.
    // Every task before it still runs, so the truncated output is deterministic.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            if (spec.fail_fast && i > first_fail.load()) {
                continue;
            }
            try {
                outs[i] = run_task(plan.tasks[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
            if (spec.fail_fast && any_failed(outs[i])) {
                std::size_t cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    SweepResult result;
    result.skipped = plan.skipped;
    for (std::size_t i = 0; i < count; ++i) {
        result.skipped += outs[i].skipped;
        for (auto &v : outs[i].verdicts) {
            const bool failed = !v.pass;
            result.verdicts.push_back(std::move(v));
            if (spec.fail_fast && failed) {
                result.truncated = true;
                return result;
            }
        }
    }
    return result;
}

int exit_code(const SweepResult &result)
{
    bool conjecture_failed = false;
    for (const auto &v : result.verdicts) {
        if (v.pass) {
            continue;
        }
        if (is_proven_claim(v.claim)) {
            return kExitProvenFailure;
        }
        conjecture_failed = true;
    }
    return conjecture_failed ? kExitConjectureCounterexample : kExitPass;
}

} // namespace qcong
