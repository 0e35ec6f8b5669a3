#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kelc/sequence.hpp"

namespace kelc {

/// The enumeration is larger than the configured candidate cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("enumeration needs " + std::to_string(required) +
                             " candidates, above the cap of " + std::to_string(cap) +
                             "; lower k or N, or raise the cap"),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// C(n, r), throwing std::overflow_error beyond 64 bits.
std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t r);

/// Number of error patterns of weight <= k: sum of (q-1)^i * C(N, i).
/// Throws std::overflow_error if the exact value exceeds 64 bits.
std::uint64_t error_pattern_count(std::uint64_t n, std::uint32_t q, std::uint64_t k);

/// rank-th w-subset of [0, n) in lexicographic order.
std::vector<std::size_t> unrank_combination(std::uint64_t n, std::uint64_t w, std::uint64_t rank);

/// Advances to the lexicographic successor; false after the last subset.
bool next_combination(std::vector<std::size_t>& positions, std::uint64_t n);

struct OracleResult {
    std::uint64_t k = 0;
    std::uint64_t klc = 0;
    std::uint64_t candidates_examined = 0;
    ErrorPattern witness;           // first minimizer in canonical order
    std::uint64_t bm_spot_checks = 0;
};

struct OracleOptions {
    unsigned jobs = 0;                            // 0 = hardware concurrency
    std::uint64_t candidate_cap = std::uint64_t(1) << 32;
    unsigned bm_sample_percent = 1;               // 0 disables the cross-check
};

/// Ground-truth k-LC: evaluates LC(s + e) for every pattern of weight <= k.
/// Candidates are ordered by weight, then positions lexicographic, then
/// deltas lexicographic; the result (including the witness) is independent
/// of the parallelism degree.
OracleResult brute_force_klc(const PeriodicSequence& s, std::uint64_t k,
                             const OracleOptions& opts = {});

/// (k, k-LC) for k = 0..k_max, by the fast algorithm or the oracle.
std::vector<std::pair<std::uint64_t, std::uint64_t>> klc_spectrum(const PeriodicSequence& s,
                                                                  std::uint64_t k_max,
                                                                  bool use_fast,
                                                                  const OracleOptions& opts = {});

}  // namespace kelc
