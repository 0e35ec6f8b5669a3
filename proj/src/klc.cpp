#include "kelc/klc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace kelc {

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 4;

// Block factor of a fold step; the previous table must hold p*l positions.
std::size_t block_factor(const CostTable& prev, std::size_t l) {
    if (l == 0 || prev.half_len() % l != 0)
        throw std::invalid_argument("fold: table half-length is not a multiple of l");
    std::size_t p = prev.half_len() / l;
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("fold: block factor must be an odd number >= 3, got " +
                                    std::to_string(p));
    return p;
}

std::vector<std::uint32_t> fold_nominal(const std::vector<std::uint32_t>& a, std::size_t l,
                                        std::size_t p, std::uint32_t q, Branch branch) {
    const std::size_t half = p * l;
    std::vector<std::uint32_t> out(2 * l, 0);
    switch (branch) {
        case Branch::both_forced:
            for (std::size_t t = 0; t < l; ++t) {
                out[t] = a[t];
                out[l + t] = a[half + t];
            }
            break;
        case Branch::plus_only:
            for (std::size_t t = 0; t < l; ++t) {
                std::uint32_t s0 = 0, s1 = 0;
                for (std::size_t j = 0; j < p; ++j) {
                    if (j & 1) {
                        s0 = sub_mod(s0, a[j * l + t], q);
                        s1 = sub_mod(s1, a[half + j * l + t], q);
                    } else {
                        s0 = add_mod(s0, a[j * l + t], q);
                        s1 = add_mod(s1, a[half + j * l + t], q);
                    }
                }
                out[t] = s0;
                out[l + t] = s1;
            }
            break;
        case Branch::minus_only:
            for (std::size_t t = 0; t < l; ++t) {
                std::uint32_t s0 = 0, s1 = 0;
                for (std::size_t j = 0; j < p; ++j) {
                    s0 = add_mod(s0, a[j * l + t], q);
                    s1 = add_mod(s1, a[half + j * l + t], q);
                }
                out[t] = s0;
                out[l + t] = s1;
            }
            break;
        case Branch::neither:
            for (std::size_t t = 0; t < l; ++t) {
                std::uint32_t s0 = 0, s1 = 0;
                for (std::size_t b = 0; b < 2 * p; b += 2) {
                    s0 = add_mod(s0, a[b * l + t], q);
                    s1 = add_mod(s1, a[(b + 1) * l + t], q);
                }
                out[t] = s0;
                out[l + t] = s1;
            }
            break;
    }
    return out;
}

}  // namespace

std::int32_t CostTable::position_min(std::size_t i) const {
    std::int32_t best = kInf;
    for (std::uint32_t h0 = 0; h0 < q_; ++h0)
        for (std::uint32_t h1 = 0; h1 < q_; ++h1) best = std::min(best, at(i, h0, h1));
    return best;
}

std::int64_t CostTable::min_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < half_len_; ++i) s += position_min(i);
    return s;
}

std::int32_t BudgetTable::row_min(std::size_t i) const {
    std::int32_t best = kInf;
    for (std::uint32_t h = 0; h < q_; ++h) best = std::min(best, at(i, h));
    return best;
}

CostTable init_cost(const PeriodicSequence& s) {
    const std::uint32_t q = s.params().q;
    const std::size_t l = s.params().half_period();
    CostTable table(l, q);
    for (std::size_t i = 0; i < l; ++i)
        for (std::uint32_t h0 = 0; h0 < q; ++h0)
            for (std::uint32_t h1 = 0; h1 < q; ++h1)
                table.at(i, h0, h1) = (h0 != s[i]) + (h1 != s[i + l]);
    return table;
}

PlusBudget plus_budget(const CostTable& prev, std::size_t l) {
    const std::size_t p = block_factor(prev, l);
    const std::uint32_t q = prev.modulus();
    const std::size_t pl = prev.half_len();

    BudgetTable per(pl, q);
    for (std::size_t i = 0; i < pl; ++i)
        for (std::uint32_t h = 0; h < q; ++h) {
            std::int32_t best = kInf;
            for (std::uint32_t d0 = 0; d0 < q; ++d0)
                best = std::min(best, prev.at(i, d0, sub_mod(h, d0, q)));
            per.at(i, h) = best;
        }

    BudgetTable folded(l, q);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::uint32_t h = 0; h < q; ++h) {
            std::int32_t sum = 0;
            for (std::size_t j = 0; j < p; ++j) sum += per.at(i + j * l, h);
            folded.at(i, h) = sum;
        }
        total += folded.row_min(i);
    }
    return {std::move(per), std::move(folded), total};
}

BothForced both_forced_table(const CostTable& prev, std::size_t l) {
    const std::size_t p = block_factor(prev, l);
    const std::uint32_t q = prev.modulus();

    CostTable table(l, q);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::uint32_t h0 = 0; h0 < q; ++h0)
            for (std::uint32_t h1 = 0; h1 < q; ++h1) {
                std::int32_t sum = 0;
                for (std::size_t j = 0; j < p; ++j)
                    sum += (j & 1) ? prev.at(i + j * l, h1, h0) : prev.at(i + j * l, h0, h1);
                table.at(i, h0, h1) = sum;
            }
        total += table.position_min(i);
    }
    return {std::move(table), total};
}

CostTable fold_alt_sum_cost(const CostTable& prev, std::size_t l) {
    const std::size_t p = block_factor(prev, l);
    const std::uint32_t q = prev.modulus();

    // p odd forces the shared pair-sum to h0 + h1; minimize over per-offset
    // first-targets x_j whose alternating sum is h0.
    CostTable next(l, q);
    std::vector<std::int32_t> dp(q), ndp(q);
    for (std::size_t i = 0; i < l; ++i)
        for (std::uint32_t s = 0; s < q; ++s) {
            std::fill(dp.begin(), dp.end(), kInf);
            dp[0] = 0;
            for (std::size_t j = 0; j < p; ++j) {
                std::fill(ndp.begin(), ndp.end(), kInf);
                for (std::uint32_t acc = 0; acc < q; ++acc) {
                    if (dp[acc] >= kInf) continue;
                    for (std::uint32_t x = 0; x < q; ++x) {
                        const std::int32_t w = dp[acc] + prev.at(i + j * l, x, sub_mod(s, x, q));
                        const std::uint32_t nacc =
                            (j & 1) ? sub_mod(acc, x, q) : add_mod(acc, x, q);
                        ndp[nacc] = std::min(ndp[nacc], w);
                    }
                }
                dp.swap(ndp);
            }
            for (std::uint32_t h0 = 0; h0 < q; ++h0)
                next.at(i, h0, sub_mod(s, h0, q)) = dp[h0];
        }
    return next;
}

MinusBudget minus_budget(const CostTable& prev, std::size_t l) {
    const std::size_t p = block_factor(prev, l);
    const std::uint32_t q = prev.modulus();
    const std::size_t pl = prev.half_len();

    BudgetTable per(pl, q);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < l; ++i)
            for (std::uint32_t h = 0; h < q; ++h) {
                // (-1)^j (d1 - d0) = h
                std::int32_t best = kInf;
                for (std::uint32_t d0 = 0; d0 < q; ++d0) {
                    const std::uint32_t d1 =
                        (j & 1) ? sub_mod(d0, h, q) : add_mod(d0, h, q);
                    best = std::min(best, prev.at(i + j * l, d0, d1));
                }
                per.at(i + j * l, h) = best;
            }

    BudgetTable folded(l, q);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::uint32_t h = 0; h < q; ++h) {
            std::int32_t sum = 0;
            for (std::size_t j = 0; j < p; ++j) sum += per.at(i + j * l, h);
            folded.at(i, h) = sum;
        }
        total += folded.row_min(i);
    }
    return {std::move(per), std::move(folded), total};
}

CostTable fold_sum_cost(const CostTable& prev, std::size_t l) {
    const std::size_t p = block_factor(prev, l);
    const std::uint32_t q = prev.modulus();

    // p odd forces the shared signed difference to h1 - h0; minimize over
    // first-targets x_j with plain sum h0, partner pinned to x_j +- d.
    CostTable next(l, q);
    std::vector<std::int32_t> dp(q), ndp(q);
    for (std::size_t i = 0; i < l; ++i)
        for (std::uint32_t d = 0; d < q; ++d) {
            std::fill(dp.begin(), dp.end(), kInf);
            dp[0] = 0;
            for (std::size_t j = 0; j < p; ++j) {
                std::fill(ndp.begin(), ndp.end(), kInf);
                for (std::uint32_t acc = 0; acc < q; ++acc) {
                    if (dp[acc] >= kInf) continue;
                    for (std::uint32_t x = 0; x < q; ++x) {
                        const std::uint32_t y =
                            (j & 1) ? sub_mod(x, d, q) : add_mod(x, d, q);
                        const std::int32_t w = dp[acc] + prev.at(i + j * l, x, y);
                        const std::uint32_t nacc = add_mod(acc, x, q);
                        ndp[nacc] = std::min(ndp[nacc], w);
                    }
                }
                dp.swap(ndp);
            }
            for (std::uint32_t h0 = 0; h0 < q; ++h0)
                next.at(i, h0, add_mod(h0, d, q)) = dp[h0];
        }
    return next;
}

CostTable fold_interleave_cost(const CostTable& prev, std::size_t l) {
    const std::size_t p = block_factor(prev, l);
    const std::uint32_t q = prev.modulus();

    // Independent sum targets; at odd offsets h1 drives the first-half
    // element (stored cost is read with swapped arguments).
    CostTable next(l, q);
    std::vector<std::int32_t> dp(q * q), ndp(q * q);
    for (std::size_t i = 0; i < l; ++i) {
        std::fill(dp.begin(), dp.end(), kInf);
        dp[0] = 0;
        for (std::size_t j = 0; j < p; ++j) {
            std::fill(ndp.begin(), ndp.end(), kInf);
            for (std::uint32_t sx = 0; sx < q; ++sx)
                for (std::uint32_t sy = 0; sy < q; ++sy) {
                    const std::int32_t base = dp[sx * q + sy];
                    if (base >= kInf) continue;
                    for (std::uint32_t x = 0; x < q; ++x)
                        for (std::uint32_t y = 0; y < q; ++y) {
                            const std::int32_t w =
                                base + ((j & 1) ? prev.at(i + j * l, y, x)
                                                : prev.at(i + j * l, x, y));
                            auto& slot = ndp[add_mod(sx, x, q) * q + add_mod(sy, y, q)];
                            slot = std::min(slot, w);
                        }
                }
            dp.swap(ndp);
        }
        for (std::uint32_t h0 = 0; h0 < q; ++h0)
            for (std::uint32_t h1 = 0; h1 < q; ++h1) next.at(i, h0, h1) = dp[h0 * q + h1];
    }
    return next;
}

const char* to_string(Branch b) {
    switch (b) {
        case Branch::both_forced: return "BothForced";
        case Branch::plus_only: return "PlusOnly";
        case Branch::minus_only: return "MinusOnly";
        case Branch::neither: return "Neither";
    }
    return "?";
}

const char* to_string(FinalRule r) {
    switch (r) {
        case FinalRule::zeroable: return "zeroable";
        case FinalRule::equal: return "equal";
        case FinalRule::sum_zero: return "sum-zero";
        case FinalRule::generic: return "generic";
    }
    return "?";
}

FinalOutcome finalize_klc(const CostTable& final_table, std::uint64_t c, std::uint64_t k) {
    if (final_table.half_len() != 1)
        throw std::invalid_argument("finalize_klc: table must have l = 1");
    const std::uint32_t q = final_table.modulus();
    const auto within = [&](std::int32_t cost) {
        return cost >= 0 && static_cast<std::uint64_t>(cost) <= k;
    };

    if (within(final_table.at(0, 0, 0))) return {FinalRule::zeroable, c};
    for (std::uint32_t h = 0; h < q; ++h)
        if (within(final_table.at(0, h, h))) return {FinalRule::equal, c + 1};
    for (std::uint32_t h = 0; h < q; ++h)
        if (within(final_table.at(0, h, neg_mod(h, q)))) return {FinalRule::sum_zero, c + 1};
    return {FinalRule::generic, c + 2};
}

KlcResult k_error_lc(const PeriodicSequence& s, std::uint64_t k) {
    const std::uint32_t q = s.params().q;
    const std::size_t p = static_cast<std::size_t>(s.params().p);

    CostTable cost = init_cost(s);
    std::vector<std::uint32_t> a(s.values().begin(), s.values().end());

    KlcTrace trace;
    std::uint64_t c = 0;
    std::size_t l = s.params().half_period();
    int level = 0;
    while (l > 1) {
        l /= p;
        ++level;
        LevelDecision dec;
        dec.level = level;
        dec.l = l;

        PlusBudget pb = plus_budget(cost, l);
        dec.t_b = pb.total;
        if (static_cast<std::uint64_t>(pb.total) <= k) {
            BothForced bf = both_forced_table(cost, l);
            dec.t_c = bf.total;
            if (static_cast<std::uint64_t>(bf.total) <= k) {
                dec.branch = Branch::both_forced;
                dec.c_increment = 0;
                cost = std::move(bf.table);
            } else {
                dec.branch = Branch::plus_only;
                dec.c_increment = std::uint64_t(p - 1) * l;
                cost = fold_alt_sum_cost(cost, l);
            }
        } else {
            MinusBudget mb = minus_budget(cost, l);
            dec.t_d = mb.total;
            if (static_cast<std::uint64_t>(mb.total) <= k) {
                dec.branch = Branch::minus_only;
                dec.c_increment = std::uint64_t(p - 1) * l;
                cost = fold_sum_cost(cost, l);
            } else {
                dec.branch = Branch::neither;
                dec.c_increment = 2 * std::uint64_t(p - 1) * l;
                cost = fold_interleave_cost(cost, l);
            }
        }
        c += dec.c_increment;
        a = fold_nominal(a, l, p, q, dec.branch);
        dec.folded = a;
        dec.table_min_sum = cost.min_sum();
        // Proposition 2: the adopted table stays within budget at every level.
        if (static_cast<std::uint64_t>(dec.table_min_sum) > k)
            throw std::logic_error("budget invariant violated at level " + std::to_string(level));
        trace.levels.push_back(std::move(dec));
    }

    FinalOutcome fin = finalize_klc(cost, c, k);
    trace.rule = fin.rule;
    trace.c_final = fin.c_final;
    return {fin.c_final, std::move(trace)};
}

}  // namespace kelc
