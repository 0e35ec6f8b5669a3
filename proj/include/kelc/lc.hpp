#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kelc/sequence.hpp"

namespace kelc {

/// The 2p contiguous length-l blocks A_1..A_2p of a length-2pl vector
/// (returned 0-indexed: blocks[j] is A_{j+1}).
std::vector<std::vector<std::uint32_t>> split_blocks(std::span<const std::uint32_t> a,
                                                     std::size_t l);

/// True iff A_1 + A_{p+1} = A_2 + A_{p+2} = ... = A_p + A_{2p} as vectors
/// over GF(q).
bool check_plus(const std::vector<std::vector<std::uint32_t>>& blocks, std::uint32_t q);

/// True iff (-1)^j (A_{p+1+j} - A_{1+j}) is the same vector for
/// j = 0..p-1 over GF(q).
bool check_minus(const std::vector<std::vector<std::uint32_t>>& blocks, std::uint32_t q);

/// Linear complexity of the two-element tail: 0 for (0,0); 1 for a constant
/// nonzero pair or a pair summing to zero; 2 otherwise.
int finalize_pair_lc(FieldElement a0, FieldElement a1);

/// Reusable working buffers so the exhaustive oracle can evaluate millions
/// of candidates without allocating.
struct WxcScratch {
    std::vector<std::uint32_t> cur;
    std::vector<std::uint32_t> next;
};

/// Linear complexity of s by block folding (period 2 p^n specialization).
std::uint64_t wxc_lc(const PeriodicSequence& s);
std::uint64_t wxc_lc(std::span<const std::uint32_t> period, const SequenceParams& params,
                     WxcScratch& scratch);

struct BmScratch {
    std::vector<std::uint32_t> c;
    std::vector<std::uint32_t> b;
    std::vector<std::uint32_t> t;
};

/// Berlekamp-Massey over GF(q): length of the shortest LFSR generating the
/// prefix. Fed two full periods it returns the periodic sequence's LC; used
/// as the independent oracle for wxc_lc.
std::uint64_t bm_lc(std::span<const std::uint32_t> prefix, std::uint32_t q);
std::uint64_t bm_lc(std::span<const std::uint32_t> prefix, std::uint32_t q, BmScratch& scratch);

}  // namespace kelc
