#include "kelc/lc.hpp"

#include <stdexcept>

namespace kelc {

std::vector<std::vector<std::uint32_t>> split_blocks(std::span<const std::uint32_t> a,
                                                     std::size_t l) {
    if (l == 0 || a.size() % l != 0)
        throw std::invalid_argument("split_blocks: vector length is not a multiple of l");
    std::vector<std::vector<std::uint32_t>> blocks(a.size() / l);
    for (std::size_t j = 0; j < blocks.size(); ++j)
        blocks[j].assign(a.begin() + j * l, a.begin() + (j + 1) * l);
    return blocks;
}

bool check_plus(const std::vector<std::vector<std::uint32_t>>& blocks, std::uint32_t q) {
    const std::size_t p = blocks.size() / 2;
    if (blocks.size() != 2 * p || p == 0)
        throw std::invalid_argument("check_plus: expected 2p blocks");
    const std::size_t l = blocks[0].size();
    for (std::size_t j = 1; j < p; ++j)
        for (std::size_t t = 0; t < l; ++t)
            if (add_mod(blocks[j][t], blocks[p + j][t], q) !=
                add_mod(blocks[0][t], blocks[p][t], q))
                return false;
    return true;
}

bool check_minus(const std::vector<std::vector<std::uint32_t>>& blocks, std::uint32_t q) {
    const std::size_t p = blocks.size() / 2;
    if (blocks.size() != 2 * p || p == 0)
        throw std::invalid_argument("check_minus: expected 2p blocks");
    const std::size_t l = blocks[0].size();
    for (std::size_t j = 1; j < p; ++j)
        for (std::size_t t = 0; t < l; ++t) {
            std::uint32_t d = sub_mod(blocks[p + j][t], blocks[j][t], q);
            if (j & 1) d = neg_mod(d, q);
            if (d != sub_mod(blocks[p][t], blocks[0][t], q)) return false;
        }
    return true;
}

namespace {

int finalize_pair_raw(std::uint32_t a0, std::uint32_t a1, std::uint32_t q) {
    if (a0 == 0 && a1 == 0) return 0;
    if (a0 == a1) return 1;
    if (add_mod(a0, a1, q) == 0) return 1;
    return 2;
}

}  // namespace

int finalize_pair_lc(FieldElement a0, FieldElement a1) {
    if (!(a0.field() == a1.field()))
        throw std::invalid_argument("finalize_pair_lc: mismatched fields");
    return finalize_pair_raw(a0.value(), a1.value(), a0.field().modulus());
}

std::uint64_t wxc_lc(const PeriodicSequence& s) {
    WxcScratch scratch;
    return wxc_lc(s.values(), s.params(), scratch);
}

std::uint64_t wxc_lc(std::span<const std::uint32_t> period, const SequenceParams& params,
                     WxcScratch& scratch) {
    if (period.size() != params.period)
        throw std::invalid_argument("wxc_lc: vector length does not match the period");
    const std::uint32_t q = params.q;
    const std::size_t p = static_cast<std::size_t>(params.p);

    scratch.cur.assign(period.begin(), period.end());
    scratch.next.resize(period.size());
    std::uint32_t* a = scratch.cur.data();
    std::uint32_t* fold = scratch.next.data();

    std::uint64_t c = 0;
    std::size_t l = params.half_period();
    while (l > 1) {
        l /= p;
        const std::size_t half = p * l;  // current vector is a[0 .. 2*half)

        bool plus = true;
        for (std::size_t j = 1; j < p && plus; ++j)
            for (std::size_t t = 0; t < l; ++t)
                if (add_mod(a[j * l + t], a[half + j * l + t], q) !=
                    add_mod(a[t], a[half + t], q)) {
                    plus = false;
                    break;
                }
        bool minus = true;
        for (std::size_t j = 1; j < p && minus; ++j)
            for (std::size_t t = 0; t < l; ++t) {
                std::uint32_t d = sub_mod(a[half + j * l + t], a[j * l + t], q);
                if (j & 1) d = neg_mod(d, q);
                if (d != sub_mod(a[half + t], a[t], q)) {
                    minus = false;
                    break;
                }
            }

        if (plus && minus) {
            // a = (A_1, A_{p+1})
            for (std::size_t t = 0; t < l; ++t) {
                fold[t] = a[t];
                fold[l + t] = a[half + t];
            }
        } else if (plus) {
            c += std::uint64_t(p - 1) * l;
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
                fold[t] = s0;
                fold[l + t] = s1;
            }
        } else if (minus) {
            c += std::uint64_t(p - 1) * l;
            for (std::size_t t = 0; t < l; ++t) {
                std::uint32_t s0 = 0, s1 = 0;
                for (std::size_t j = 0; j < p; ++j) {
                    s0 = add_mod(s0, a[j * l + t], q);
                    s1 = add_mod(s1, a[half + j * l + t], q);
                }
                fold[t] = s0;
                fold[l + t] = s1;
            }
        } else {
            c += 2 * std::uint64_t(p - 1) * l;
            // odd-indexed blocks A_1, A_3, ... and even-indexed A_2, A_4, ...
            for (std::size_t t = 0; t < l; ++t) {
                std::uint32_t s0 = 0, s1 = 0;
                for (std::size_t b = 0; b < 2 * p; b += 2) {
                    s0 = add_mod(s0, a[b * l + t], q);
                    s1 = add_mod(s1, a[(b + 1) * l + t], q);
                }
                fold[t] = s0;
                fold[l + t] = s1;
            }
        }
        std::swap(a, fold);
    }
    return c + finalize_pair_raw(a[0], a[1], q);
}

std::uint64_t bm_lc(std::span<const std::uint32_t> prefix, std::uint32_t q) {
    BmScratch scratch;
    return bm_lc(prefix, q, scratch);
}

std::uint64_t bm_lc(std::span<const std::uint32_t> prefix, std::uint32_t q, BmScratch& scratch) {
    const std::size_t n = prefix.size();
    if (n == 0) throw std::invalid_argument("bm_lc: empty prefix");

    auto& c = scratch.c;
    auto& b = scratch.b;
    auto& t = scratch.t;
    c.assign(n + 1, 0);
    b.assign(n + 1, 0);
    c[0] = b[0] = 1;

    std::size_t L = 0, m = 1;
    std::uint32_t bd = 1;  // discrepancy that produced b
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t acc = prefix[i];
        for (std::size_t j = 1; j <= L; ++j)
            acc += std::uint64_t(c[j]) * prefix[i - j];
        const std::uint32_t d = static_cast<std::uint32_t>(acc % q);
        if (d == 0) {
            ++m;
            continue;
        }
        const std::uint32_t coef = mul_mod(d, inv_mod(bd, q), q);
        if (2 * L <= i) {
            t.assign(c.begin(), c.end());
            for (std::size_t j = 0; j + m <= n; ++j)
                c[j + m] = sub_mod(c[j + m], mul_mod(coef, b[j], q), q);
            L = i + 1 - L;
            b.swap(t);
            bd = d;
            m = 1;
        } else {
            for (std::size_t j = 0; j + m <= n; ++j)
                c[j + m] = sub_mod(c[j + m], mul_mod(coef, b[j], q), q);
            ++m;
        }
    }
    return L;
}

}  // namespace kelc
