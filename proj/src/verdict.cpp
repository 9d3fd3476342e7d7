#include "quadcong/verdict.hpp"

#include <algorithm>
#include <tuple>

namespace quadcong {

namespace {

struct ClaimEntry {
    ClaimId id;
    const char* name;
};

const ClaimEntry kClaims[] = {
    {ClaimId::THM_A_EQ1, "THM_A_EQ1"},
    {ClaimId::THM_A_EQ2, "THM_A_EQ2"},
    {ClaimId::PROP_B1, "PROP_B1"},
    {ClaimId::PROP_B2, "PROP_B2"},
    {ClaimId::COR_C, "COR_C"},
    {ClaimId::LEMMA1_H2, "LEMMA1_H2"},
    {ClaimId::LEMMA1_H4, "LEMMA1_H4"},
    {ClaimId::LEMMA1_H8, "LEMMA1_H8"},
    {ClaimId::LEMMA2_R4_1_C1, "LEMMA2_R4_1_C1"},
    {ClaimId::LEMMA2_R4_1_C2, "LEMMA2_R4_1_C2"},
    {ClaimId::LEMMA2_R4_1_C3, "LEMMA2_R4_1_C3"},
    {ClaimId::LEMMA2_R4_3_C1, "LEMMA2_R4_3_C1"},
    {ClaimId::LEMMA2_R4_3_C2, "LEMMA2_R4_3_C2"},
    {ClaimId::LEMMA2_R4_3_C3, "LEMMA2_R4_3_C3"},
    {ClaimId::LEMMA3_R8_1_C1, "LEMMA3_R8_1_C1"},
    {ClaimId::LEMMA3_R8_1_C2, "LEMMA3_R8_1_C2"},
    {ClaimId::LEMMA3_R8_1_C3, "LEMMA3_R8_1_C3"},
    {ClaimId::LEMMA3_R8_3_C1, "LEMMA3_R8_3_C1"},
    {ClaimId::LEMMA3_R8_3_C2, "LEMMA3_R8_3_C2"},
    {ClaimId::LEMMA3_R8_3_C3, "LEMMA3_R8_3_C3"},
    {ClaimId::LEMMA3_R8_5_C1, "LEMMA3_R8_5_C1"},
    {ClaimId::LEMMA3_R8_5_C2, "LEMMA3_R8_5_C2"},
    {ClaimId::LEMMA3_R8_5_C3, "LEMMA3_R8_5_C3"},
    {ClaimId::LEMMA3_R8_7_C1, "LEMMA3_R8_7_C1"},
    {ClaimId::LEMMA3_R8_7_C2, "LEMMA3_R8_7_C2"},
    {ClaimId::LEMMA3_R8_7_C3, "LEMMA3_R8_7_C3"},
    {ClaimId::PROP2_4K, "PROP2_4K"},
    {ClaimId::PROP2_4K1, "PROP2_4K1"},
    {ClaimId::PROP2_4K2, "PROP2_4K2"},
    {ClaimId::PROP2_4K3, "PROP2_4K3"},
    {ClaimId::BLOCK_SUM, "BLOCK_SUM"},
    {ClaimId::EM_TRI_ROW, "EM_TRI_ROW"},
    {ClaimId::EM_TRI_HALF, "EM_TRI_HALF"},
};

}  // namespace

const char* claim_name(ClaimId id) {
    for (const auto& e : kClaims)
        if (e.id == id) return e.name;
    return "?";
}

std::optional<ClaimId> claim_from_name(std::string_view name) {
    for (const auto& e : kClaims)
        if (name == e.name) return e.id;
    return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> v;
        for (const auto& e : kClaims) v.push_back(e.id);
        return v;
    }();
    return ids;
}

Verdict Verdict::compare(ClaimId claim, u64 p, std::optional<u64> n,
                         std::optional<u64> k, const ModInt& lhs,
                         const ModInt& rhs, std::string note) {
    if (lhs.modulus() != rhs.modulus())
        throw ModulusMismatch(std::string("verdict for ") + claim_name(claim) +
                              ": lhs mod " + std::to_string(lhs.modulus()) +
                              " vs rhs mod " + std::to_string(rhs.modulus()));
    return Verdict{claim, p,   n,
                   k,     lhs, rhs,
                   lhs == rhs, std::move(note)};
}

void SweepReport::merge(SweepReport&& other) {
    auto append = [](auto& dst, auto& src) {
        dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                   std::make_move_iterator(src.end()));
    };
    append(verdicts, other.verdicts);
    append(errata, other.errata);
    append(skipped, other.skipped);
}

void SweepReport::sort() {
    auto key = [](const Verdict& v) {
        return std::make_tuple(int(v.claim), v.p, v.n.value_or(0),
                               v.k.value_or(0));
    };
    std::stable_sort(verdicts.begin(), verdicts.end(),
                     [&](const Verdict& a, const Verdict& b) {
                         return key(a) < key(b);
                     });
}

std::map<ClaimId, ClaimTally> SweepReport::summary() const {
    std::map<ClaimId, ClaimTally> s;
    for (const auto& v : verdicts) {
        auto& t = s[v.claim];
        t.total++;
        if (!v.holds) t.failed++;
    }
    return s;
}

u64 SweepReport::failures() const {
    u64 f = 0;
    for (const auto& v : verdicts)
        if (!v.holds) f++;
    return f;
}

}  // namespace quadcong
