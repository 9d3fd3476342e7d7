#pragma once

// Claim identifiers and the verdict/report containers produced by sweeps.

#include "quadcong/base.hpp"
#include "quadcong/modring.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadcong {

enum class ClaimId {
    THM_A_EQ1,
    THM_A_EQ2,
    PROP_B1,
    PROP_B2,
    COR_C,
    LEMMA1_H2,
    LEMMA1_H4,
    LEMMA1_H8,
    LEMMA2_R4_1_C1,
    LEMMA2_R4_1_C2,
    LEMMA2_R4_1_C3,
    LEMMA2_R4_3_C1,
    LEMMA2_R4_3_C2,
    LEMMA2_R4_3_C3,
    LEMMA3_R8_1_C1,
    LEMMA3_R8_1_C2,
    LEMMA3_R8_1_C3,
    LEMMA3_R8_3_C1,
    LEMMA3_R8_3_C2,
    LEMMA3_R8_3_C3,
    LEMMA3_R8_5_C1,
    LEMMA3_R8_5_C2,
    LEMMA3_R8_5_C3,
    LEMMA3_R8_7_C1,
    LEMMA3_R8_7_C2,
    LEMMA3_R8_7_C3,
    PROP2_4K,
    PROP2_4K1,
    PROP2_4K2,
    PROP2_4K3,
    BLOCK_SUM,
    EM_TRI_ROW,
    EM_TRI_HALF,
};

const char* claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);
const std::vector<ClaimId>& all_claims();

// One checked congruence instance.  n and k are absent where the claim has
// no such parameter (lemmas carry only p; BLOCK_SUM stores its block index
// in k).  lhs and rhs always share a modulus: p^2 for the coefficient
// claims, p for the lemmas.
struct Verdict {
    ClaimId claim;
    u64 p;
    std::optional<u64> n;
    std::optional<u64> k;
    ModInt lhs;
    ModInt rhs;
    bool holds;
    std::string note;

    static Verdict compare(ClaimId claim, u64 p, std::optional<u64> n,
                           std::optional<u64> k, const ModInt& lhs,
                           const ModInt& rhs, std::string note = "");
};

// A known source-text defect encountered during a sweep (wrong proof line,
// notation slip, side condition that admits an undefined case).
struct ErratumRecord {
    ClaimId claim;
    std::optional<u64> p;
    std::optional<u64> n;
    std::optional<u64> k;
    std::string detail;
};

// A (claim, p, n) cell skipped because its row exceeds the size budget.
struct SkipRecord {
    ClaimId claim;
    u64 p;
    std::optional<u64> n;
    std::string reason;
};

struct ClaimTally {
    u64 total = 0;
    u64 failed = 0;
};

struct SweepReport {
    std::vector<Verdict> verdicts;
    std::vector<ErratumRecord> errata;
    std::vector<SkipRecord> skipped;

    void merge(SweepReport&& other);
    // Deterministic order: (claim, p, n, k).
    void sort();
    std::map<ClaimId, ClaimTally> summary() const;
    u64 failures() const;
};

}  // namespace quadcong
