#include "quadcong/suite.hpp"

namespace quadcong {

namespace {

u64 np_res(const PrimeCase& pc, u64 n) { return (n % pc.p()) * pc.p(); }

// Row length of (1+x+x^2+x^3)^e as a budget probe.
bool row_fits(u128 e, u64 budget) { return 3 * e + 1 <= budget; }

std::string mismatch_note(const ModInt& fast, const ModInt& exact) {
    return "fast path disagrees with exact convolution (fast=" +
           std::to_string(fast.value()) +
           ", exact=" + std::to_string(exact.value()) + ")";
}

// Three-way wrap-up: verdict on fast-vs-rhs, note records what the exact
// route had to say (nothing, confirmation of a failure, or a fast-path bug).
Verdict adjudicate(ClaimId id, const QRow& row, std::optional<u64> k,
                   const ModInt& fast, const std::optional<ModInt>& exact,
                   const ModInt& rhs) {
    std::string note;
    if (exact && *exact != fast)
        note = mismatch_note(fast, *exact);
    else if (exact && fast != rhs)
        note = "exact convolution confirms the left side";
    return Verdict::compare(id, row.pc().p(), row.n(), k, fast, rhs,
                            std::move(note));
}

}  // namespace

QRow::QRow(const PrimeCase& pc, u64 n, const SuiteOptions& opts)
    : pc_(pc), n_(n), fast_(pc, n, pc.p() - 1) {
    if (n == 0) throw Error("QRow: n must be >= 1");
    u128 e = u128(n) * pc.p() - 1;
    if (opts.cross_check && row_fits(e, opts.size_budget))
        exact_ = qnomial_row_mod(u64(e), pc.p2(), opts.size_budget);
}

std::optional<ModInt> QRow::exact_coeff(u64 k) const {
    if (!exact_) return std::nullopt;
    return ModInt::residue((*exact_)[k], pc_.p2());
}

std::optional<ModInt> QRow::exact_sum(u64 k_hi) const {
    if (!exact_) return std::nullopt;
    u128 acc = 0;
    for (u64 k = 0; k <= k_hi; k++) acc += (*exact_)[k];
    return ModInt::residue(u64(acc % pc_.p2()), pc_.p2());
}

Verdict check_theorem_A1(const QRow& row) {
    const PrimeCase& pc = row.pc();
    u64 p = pc.p(), p2 = pc.p2();
    ModInt np = ModInt::residue(np_res(pc, row.n()), p2);
    ModInt q = fermat_quotient_lift(p, 2);
    ModInt one(1, p2);
    ModInt rhs = pc.r4() == 1
                     ? one + ModInt(2, p2) * np * q
                     : -(rat_to_mod(Rational(1, 2), p2) * np * q);
    return adjudicate(ClaimId::THM_A_EQ1, row, p - 1, row.fast_coeff(p - 1),
                      row.exact_coeff(p - 1), rhs);
}

Verdict check_theorem_A2(const QRow& row) {
    const PrimeCase& pc = row.pc();
    u64 p = pc.p(), p2 = pc.p2();
    ModInt np = ModInt::residue(np_res(pc, row.n()), p2);
    ModInt q = fermat_quotient_lift(p, 2);
    ModInt chi = pell_quotient_lift(pc);
    ModInt one(1, p2);
    ModInt big = rat_to_mod(Rational(13, 4), p2) * q + chi;
    ModInt small = rat_to_mod(Rational(1, 4), p2) * q - chi;
    ModInt rhs = one;  // overwritten below
    switch (pc.r8()) {
        case 1: rhs = one + np * big; break;
        case 3: rhs = -one - np * big; break;
        case 5: rhs = -(np * small); break;
        default: rhs = np * small; break;
    }
    u64 k = (p - 1) / 2;
    return adjudicate(ClaimId::THM_A_EQ2, row, k, row.fast_coeff(k),
                      row.exact_coeff(k), rhs);
}

Verdict check_prop_B1(const QRow& row) {
    const PrimeCase& pc = row.pc();
    u64 p = pc.p(), p2 = pc.p2();
    ModInt np = ModInt::residue(np_res(pc, row.n()), p2);
    ModInt q = fermat_quotient_lift(p, 2);
    ModInt one(1, p2);
    ModInt rhs = pc.r4() == 1
                     ? one + rat_to_mod(Rational(9, 4), p2) * np * q
                     : -(rat_to_mod(Rational(1, 4), p2) * np * q);
    return adjudicate(ClaimId::PROP_B1, row, std::nullopt, row.fast_sum(p - 1),
                      row.exact_sum(p - 1), rhs);
}

Verdict check_prop_B2(const QRow& row) {
    const PrimeCase& pc = row.pc();
    u64 p = pc.p(), p2 = pc.p2();
    ModInt np = ModInt::residue(np_res(pc, row.n()), p2);
    ModInt q = fermat_quotient_lift(p, 2);
    ModInt chi = pell_quotient_lift(pc);
    ModInt one(1, p2);
    ModInt two(2, p2);
    ModInt rhs = one;
    switch (pc.r8()) {
        case 1:
            rhs = one + rat_to_mod(Rational(3, 2), p2) * np * (two * q + chi);
            break;
        case 3:
            rhs = -(rat_to_mod(Rational(1, 4), p2) * np * (q - two * chi));
            break;
        case 5:
            rhs = -(rat_to_mod(Rational(1, 2), p2) * np * (q - chi));
            break;
        default:
            rhs = -(rat_to_mod(Rational(1, 4), p2) * np * (q + two * chi));
            break;
    }
    u64 k = (p - 1) / 2;
    return adjudicate(ClaimId::PROP_B2, row, std::nullopt, row.fast_sum(k),
                      row.exact_sum(k), rhs);
}

static ClaimId prop2_claim(unsigned c) {
    switch (c) {
        case 0: return ClaimId::PROP2_4K;
        case 1: return ClaimId::PROP2_4K1;
        case 2: return ClaimId::PROP2_4K2;
        default: return ClaimId::PROP2_4K3;
    }
}

Verdict check_prop2(const QRow& row, u64 k) {
    Prop2Class cls = Prop2Class::classify(k);
    ModInt rhs = prop2_rhs(cls, row.pc(), row.n());
    return adjudicate(prop2_claim(cls.c), row, k, row.fast_coeff(k),
                      row.exact_coeff(k), rhs);
}

std::vector<Verdict> check_prop2(const QRow& row) {
    std::vector<Verdict> out;
    u64 p = row.pc().p();
    out.reserve(p);
    for (u64 k = 0; k <= p - 1; k++) out.push_back(check_prop2(row, k));
    return out;
}

Verdict check_block_sum(const QRow& row, u64 k4) {
    const PrimeCase& pc = row.pc();
    u64 p = pc.p();
    if (4 * k4 + 3 > p - 1)
        throw SideConditionViolated("check_block_sum: 4k+3 > p-1");
    ModInt lhs = row.fast_coeff(4 * k4) + row.fast_coeff(4 * k4 + 1) +
                 row.fast_coeff(4 * k4 + 2) + row.fast_coeff(4 * k4 + 3);
    std::optional<ModInt> exact;
    if (row.has_exact()) {
        exact = *row.exact_coeff(4 * k4) + *row.exact_coeff(4 * k4 + 1) +
                *row.exact_coeff(4 * k4 + 2) + *row.exact_coeff(4 * k4 + 3);
    }
    ModInt rhs = block_sum_rhs(k4, pc, row.n());
    return adjudicate(ClaimId::BLOCK_SUM, row, k4, lhs, exact, rhs);
}

std::vector<Verdict> check_block_sum(const QRow& row) {
    std::vector<Verdict> out;
    u64 p = row.pc().p();
    for (u64 k4 = 0; 4 * k4 + 3 <= p - 1; k4++)
        out.push_back(check_block_sum(row, k4));
    return out;
}

static QRow make_row(const PrimeCase& pc, u64 n, const SuiteOptions& opts) {
    return QRow(pc, n, opts);
}

Verdict check_theorem_A1(const PrimeCase& pc, u64 n, const SuiteOptions& o) {
    return check_theorem_A1(make_row(pc, n, o));
}
Verdict check_theorem_A2(const PrimeCase& pc, u64 n, const SuiteOptions& o) {
    return check_theorem_A2(make_row(pc, n, o));
}
Verdict check_prop_B1(const PrimeCase& pc, u64 n, const SuiteOptions& o) {
    return check_prop_B1(make_row(pc, n, o));
}
Verdict check_prop_B2(const PrimeCase& pc, u64 n, const SuiteOptions& o) {
    return check_prop_B2(make_row(pc, n, o));
}

std::vector<Verdict> check_cor_C(const PrimeCase& pc, u64 n,
                                 const SuiteOptions& opts) {
    if (n == 0) throw Error("check_cor_C: n must be >= 1");
    u64 p = pc.p(), p2 = pc.p2();
    u128 e = u128(n) * p2 - 1;
    if (!row_fits(e, opts.size_budget)) {
        u128 len = 3 * e + 1;
        std::string shown = len <= u128(UINT64_MAX)
                                ? std::to_string(u64(len))
                                : std::string("over 2^64");
        throw SizeBudgetExceeded("check_cor_C: row at n*p^2-1 needs " + shown +
                                 " coefficients, budget is " +
                                 std::to_string(opts.size_budget));
    }
    std::vector<u64> row = qnomial_row_mod(u64(e), p2, opts.size_budget);
    static const i64 pattern[4] = {1, -1, 0, 0};
    std::vector<Verdict> out;
    out.reserve(p);
    for (u64 k = 0; k <= p - 1; k++) {
        ModInt lhs = ModInt::residue(row[k], p2);
        ModInt rhs(pattern[k % 4], p2);
        out.push_back(
            Verdict::compare(ClaimId::COR_C, p, n, k, lhs, rhs));
    }
    return out;
}

Verdict check_cor_C(const PrimeCase& pc, u64 n, u64 k,
                    const SuiteOptions& opts) {
    if (k > pc.p() - 1)
        throw IndexTooLarge("check_cor_C: k=" + std::to_string(k) +
                            " exceeds p-1");
    return check_cor_C(pc, n, opts)[k];
}

std::pair<Verdict, Verdict> check_EM_trinomial(const PrimeCase& pc, u64 n,
                                               const SuiteOptions& opts) {
    if (n == 0) throw Error("check_EM_trinomial: n must be >= 1");
    u64 p = pc.p(), p2 = pc.p2();
    u128 e = u128(n) * p - 1;
    if (2 * e + 1 > opts.size_budget)
        throw SizeBudgetExceeded("check_EM_trinomial: row exceeds budget");
    std::vector<u64> row = trinomial_row_mod(u64(e), p2, opts.size_budget);
    ModInt np = ModInt::residue(np_res(pc, n), p2);
    ModInt q2 = fermat_quotient_lift(p, 2);
    ModInt q3 = fermat_quotient_lift(p, 3);
    ModInt one(1, p2);

    ModInt rhs_row = pc.r3() == 1 ? one + np * q3 : -one - np * q3;
    Verdict v_row = Verdict::compare(ClaimId::EM_TRI_ROW, p, n, p - 1,
                                     ModInt::residue(row[p - 1], p2), rhs_row);

    u64 half = (p - 1) / 2;
    ModInt rhs_half =
        pc.r6() == 1
            ? one + np * (ModInt(2, p2) * q2 +
                          rat_to_mod(Rational(1, 2), p2) * q3)
            : -(rat_to_mod(Rational(1, 2), p2) * np * q3);
    Verdict v_half = Verdict::compare(ClaimId::EM_TRI_HALF, p, n, half,
                                      ModInt::residue(row[half], p2), rhs_half);
    return {std::move(v_row), std::move(v_half)};
}

}  // namespace quadcong
