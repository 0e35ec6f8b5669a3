#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kelc/sequence.hpp"

namespace kelc {

/// Union-cost table for a working vector of 2l current elements. Entry
/// (i, h0, h1) is the minimum number of symbol changes in the ORIGINAL
/// period needed to drive current element i to h0 and current element i+l
/// to h1 while keeping every condition forced at earlier levels intact.
/// Entries never exceed N, so int32 storage is ample.
class CostTable {
public:
    CostTable(std::size_t half_len, std::uint32_t q)
        : half_len_(half_len), q_(q), v_(half_len * q * q, 0) {}

    std::size_t half_len() const noexcept { return half_len_; }
    std::uint32_t modulus() const noexcept { return q_; }

    std::int32_t& at(std::size_t i, std::uint32_t h0, std::uint32_t h1) {
        return v_[(i * q_ + h0) * q_ + h1];
    }
    std::int32_t at(std::size_t i, std::uint32_t h0, std::uint32_t h1) const {
        return v_[(i * q_ + h0) * q_ + h1];
    }

    std::int32_t position_min(std::size_t i) const;
    /// Sum over positions of the per-position minimum (Proposition 2's
    /// left-hand side).
    std::int64_t min_sum() const;

    bool operator==(const CostTable&) const = default;

private:
    std::size_t half_len_;
    std::uint32_t q_;
    std::vector<std::int32_t> v_;
};

/// len x q table for the bcost/dcost budget stages.
class BudgetTable {
public:
    BudgetTable(std::size_t len, std::uint32_t q) : len_(len), q_(q), v_(len * q, 0) {}

    std::size_t size() const noexcept { return len_; }
    std::uint32_t modulus() const noexcept { return q_; }
    std::int32_t& at(std::size_t i, std::uint32_t h) { return v_[i * q_ + h]; }
    std::int32_t at(std::size_t i, std::uint32_t h) const { return v_[i * q_ + h]; }
    std::int32_t row_min(std::size_t i) const;

private:
    std::size_t len_;
    std::uint32_t q_;
    std::vector<std::int32_t> v_;
};

/// Initial table at l = p^n: entry (i, h0, h1) counts how many of the pair
/// (a_i, a_{i+l}) differ from (h0, h1), i.e. 0, 1 or 2.
CostTable init_cost(const PeriodicSequence& s);

/// bcost stage: cheapest way to pin every block-pair sum. per_position is
/// the pl x q stage, folded the l x q stage after summing block offsets,
/// and total = T_B.
struct PlusBudget {
    BudgetTable per_position;
    BudgetTable folded;
    std::int64_t total;
};
PlusBudget plus_budget(const CostTable& prev, std::size_t l);

/// Table obtained by forcing BOTH conditions: odd block offsets contribute
/// with swapped targets (the alternation A_1 = A_3 = ...). total = T_C.
struct BothForced {
    CostTable table;
    std::int64_t total;
};
BothForced both_forced_table(const CostTable& prev, std::size_t l);

/// Fold when only the sum condition is forced: minimize over target tuples
/// sharing one pair-sum, with alternating-sign sums pinned to (h0, h1).
CostTable fold_alt_sum_cost(const CostTable& prev, std::size_t l);

/// dcost stage: cheapest way to pin every signed block-pair difference.
struct MinusBudget {
    BudgetTable per_position;
    BudgetTable folded;
    std::int64_t total;  // T_D
};
MinusBudget minus_budget(const CostTable& prev, std::size_t l);

/// Fold when only the difference condition is forced: one signed difference
/// shared by all offsets, plain sums pinned to (h0, h1).
CostTable fold_sum_cost(const CostTable& prev, std::size_t l);

/// Fold when neither condition is forced: independent sums over the
/// odd-indexed and even-indexed blocks.
CostTable fold_interleave_cost(const CostTable& prev, std::size_t l);

enum class Branch { both_forced, plus_only, minus_only, neither };
enum class FinalRule { zeroable, equal, sum_zero, generic };

const char* to_string(Branch b);
const char* to_string(FinalRule r);

/// One main-loop iteration's record. t_c is present exactly when the plus
/// side was entered (T_B <= k), t_d exactly when the minus side was.
struct LevelDecision {
    int level = 0;            // 1-based
    std::uint64_t l = 0;      // half-block length after this level's fold
    Branch branch = Branch::both_forced;
    std::int64_t t_b = 0;
    std::optional<std::int64_t> t_c;
    std::optional<std::int64_t> t_d;
    std::uint64_t c_increment = 0;
    std::int64_t table_min_sum = 0;          // of the adopted table
    std::vector<std::uint32_t> folded;       // nominal vector after the fold
};

struct KlcTrace {
    std::vector<LevelDecision> levels;
    FinalRule rule = FinalRule::zeroable;
    std::uint64_t c_final = 0;
};

struct FinalOutcome {
    FinalRule rule;
    std::uint64_t c_final;
};

/// Endgame on the two-element table: zero pair within budget adds 0, an
/// equal or zero-sum pair adds 1, anything else adds 2.
FinalOutcome finalize_klc(const CostTable& final_table, std::uint64_t c, std::uint64_t k);

struct KlcResult {
    std::uint64_t complexity;
    KlcTrace trace;
};

/// k-error linear complexity by per-level budget thresholds. Branch order:
/// the plus side is examined first and the minus side only when T_B > k.
/// For k = 0 this reduces exactly to wxc_lc's condition tests.
KlcResult k_error_lc(const PeriodicSequence& s, std::uint64_t k);

}  // namespace kelc
