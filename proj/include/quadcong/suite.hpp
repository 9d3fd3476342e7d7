#pragma once

// Checkers for the headline congruences, all mod p^2 for the row at
// n*p - 1 (coefficient index counted from the top, i.e. the row of
// (1+x+x^2+x^3)^(np-1)):
//
//   A1:  C(np-1, p-1)_3      by p mod 4, in terms of q_p(2)
//   A2:  C(np-1, (p-1)/2)_3  by p mod 8, in terms of q_p(2) and chi_p
//   B1:  sum_{k<p}       C(np-1, k)_3   by p mod 4
//   B2:  sum_{k<=(p-1)/2} C(np-1, k)_3  by p mod 8
//   C:   C(np^2-1, k)_3 = 1, -1, 0, 0 for k = 0, 1, 2, 3 (mod 4), k < p
//   EM:  the trinomial analogues at k = p-1 (q_p(3)) and k = (p-1)/2
//        (q_p(2), q_p(3)), split by p mod 3 resp. p mod 6
//
// Each checker evaluates the left side twice when it can: the binomial
// fast path and, if the row fits the size budget, the exact convolution.
// The verdict note flags any disagreement between the two routes, which
// separates "claim is wrong" from "fast path is wrong".

#include "quadcong/base.hpp"
#include "quadcong/modring.hpp"
#include "quadcong/numtheory.hpp"
#include "quadcong/qnomial.hpp"
#include "quadcong/verdict.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace quadcong {

struct SuiteOptions {
    u64 size_budget = kSizeBudgetDefault;
    // Skip the exact-convolution cross-check entirely (sweeps over huge
    // grids); budget still guards the routes that have no fast path.
    bool cross_check = true;
};

// Row state shared by the checkers for one (p, n) cell.
class QRow {
  public:
    QRow(const PrimeCase& pc, u64 n, const SuiteOptions& opts = {});

    const PrimeCase& pc() const { return pc_; }
    u64 n() const { return n_; }
    const FastRow& fast() const { return fast_; }
    bool has_exact() const { return exact_.has_value(); }

    ModInt fast_coeff(u64 k) const { return fast_.coeff(k); }
    ModInt fast_sum(u64 k_hi) const { return fast_.prefix_sum(k_hi); }
    std::optional<ModInt> exact_coeff(u64 k) const;
    std::optional<ModInt> exact_sum(u64 k_hi) const;

  private:
    PrimeCase pc_;
    u64 n_;
    FastRow fast_;
    std::optional<std::vector<u64>> exact_;  // full oracle row mod p^2
};

Verdict check_theorem_A1(const QRow& row);
Verdict check_theorem_A2(const QRow& row);
Verdict check_prop_B1(const QRow& row);
Verdict check_prop_B2(const QRow& row);

// One verdict per coefficient index 0..p-1.
std::vector<Verdict> check_prop2(const QRow& row);
Verdict check_prop2(const QRow& row, u64 k);

// One verdict per block index k4 with 4*k4+3 <= p-1.
std::vector<Verdict> check_block_sum(const QRow& row);
Verdict check_block_sum(const QRow& row, u64 k4);

// Convenience forms building the row internally.
Verdict check_theorem_A1(const PrimeCase& pc, u64 n,
                         const SuiteOptions& opts = {});
Verdict check_theorem_A2(const PrimeCase& pc, u64 n,
                         const SuiteOptions& opts = {});
Verdict check_prop_B1(const PrimeCase& pc, u64 n,
                      const SuiteOptions& opts = {});
Verdict check_prop_B2(const PrimeCase& pc, u64 n,
                      const SuiteOptions& opts = {});

// The 1,-1,0,0 pattern on the row at n*p^2 - 1.  The row here is the
// exact convolution reduced mod p^2 (there is no short fast path), so the
// budget is a hard gate: SizeBudgetExceeded when the row does not fit.
std::vector<Verdict> check_cor_C(const PrimeCase& pc, u64 n,
                                 const SuiteOptions& opts = {});
Verdict check_cor_C(const PrimeCase& pc, u64 n, u64 k,
                    const SuiteOptions& opts = {});

// Trinomial pair: returns the k = p-1 and k = (p-1)/2 verdicts.
std::pair<Verdict, Verdict> check_EM_trinomial(const PrimeCase& pc, u64 n,
                                               const SuiteOptions& opts = {});

}  // namespace quadcong
