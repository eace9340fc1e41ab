#pragma once

// Grid sweeps over the verifier: expands a SweepSpec into an ordered task list,
// evaluates the tasks on a thread pool, and returns verdicts in task order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcong/verifier.hpp"

namespace qcong {

enum class ClaimGroup { kTheorem1, kCorollary2, kQCong, kLemmas, kIdentities, k2Adic, kSun };

// "all" expands to every group except sun, which must be asked for by name.
std::vector<ClaimGroup> parse_claim_groups(const std::string &name);
std::string to_string(ClaimGroup g);

// Inclusive integer range; "7" and "2..9" both parse.
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    static Range parse(const std::string &text);
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Range &, const Range &) = default;
};

enum class Format { kText, kJson, kCsv };
std::optional<Format> parse_format(const std::string &name);
std::string to_string(Format f);

struct SweepSpec {
    std::vector<ClaimGroup> claims;
    Range r{1, 1};
    Range m{2, 2};
    Range rho{1, 1};
    Range n{1, 10};
    std::int64_t d_max = 30;
    Format format = Format::kText;
    unsigned jobs = 0; // 0 means hardware concurrency
    bool fail_fast = false;
    bool full_polys = false;
    bool timestamp = true;

    // Throws std::invalid_argument on empty ranges or out-of-domain bounds.
    void validate() const;
};

// Bounds used by the lemma group for the expensive per-d recurrences.
inline constexpr std::int64_t kQLucasSMax = 3;
inline constexpr std::int64_t kBlockRecurrenceDMax = 12;
inline constexpr std::int64_t kBlockRecurrenceSMax = 2;
inline constexpr std::int64_t kQIntQuotientKMax = 4;

struct SweepResult {
    std::vector<Verdict> verdicts;
    std::size_t skipped = 0;
    bool truncated = false; // fail-fast stopped the sweep

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] std::size_t failed() const;
};

SweepResult run_sweep(const SweepSpec &spec);

// 0 all pass, 1 a proven claim failed, 3 only a conjecture failed.
int exit_code(const SweepResult &result);

inline constexpr int kExitPass = 0;
inline constexpr int kExitProvenFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConjectureCounterexample = 3;

} // namespace qcong
