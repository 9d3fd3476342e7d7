#pragma once

// Sweep configuration and runners.  A verify sweep walks every prime in
// [prime_min, prime_max] and every n in [1, n_max], evaluates the selected
// claims, and returns a deterministic report: verdicts sorted by
// (claim, p, n, k), independent of the number of worker threads.

#include "quadcong/base.hpp"
#include "quadcong/suite.hpp"
#include "quadcong/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadcong {

enum class OutputFormat { table, csv, json };

struct SweepConfig {
    u64 prime_min = 5;
    u64 prime_max = 100;
    u64 n_max = 1;
    std::vector<ClaimId> checks;  // expanded, deduplicated, enum order
    OutputFormat format = OutputFormat::table;
    u64 size_budget = kSizeBudgetDefault;
    unsigned jobs = 0;  // 0 = hardware concurrency
    bool signed_residues = false;
    std::optional<std::string> out_path;

    void validate() const;  // throws UsageError
};

// Expands a comma-separated token list ("all", "THM_A", "LEMMA3",
// "PROP2_4K1", ...) into claim ids; throws UsageError on unknown tokens.
std::vector<ClaimId> expand_check_tokens(const std::string& tokens);

SweepReport run_verify(const SweepConfig& cfg);

// 0 all hold, 1 at least one failure, 3 budget skips (and no failures).
int exit_code_for(const SweepReport& report);

// One statement-vs-proof-line adjudication, counted over the prime range.
struct ErrataItem {
    std::string id;
    ClaimId claim;
    std::string description;
    std::string statement_form;
    std::string printed_form;
    u64 cases = 0;
    u64 statement_matches = 0;
    u64 printed_matches = 0;
    std::string winner{};
};

struct ErrataReport {
    std::vector<ErrataItem> items;
};

// Recomputes the flagged discrepancies both ways over the prime range of
// cfg (n_max applies where the claim carries an n).
ErrataReport run_errata(const SweepConfig& cfg);

int exit_code_for(const ErrataReport& report);

}  // namespace quadcong
