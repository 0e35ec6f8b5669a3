#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kelc/field.hpp"
#include "kelc/params.hpp"

namespace kelc {

/// SplitMix64 (Steele/Lea/Flood 2014). Fixed here by its recurrence so that
/// seeded fixtures reproduce bit-for-bit on every platform:
///   state += 0x9e3779b97f4a7c15
///   z = state; z ^= z >> 30; z *= 0xbf58476d1ce4e5b9
///   z ^= z >> 27; z *= 0x94d049bb133111eb; z ^= z >> 31; output z
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection, so there is no modulo bias.
    std::uint32_t below(std::uint32_t bound) {
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t u;
        do {
            u = next();
        } while (u >= limit);
        return static_cast<std::uint32_t>(u % bound);
    }

private:
    std::uint64_t state_;
};

/// One period s^N = (a_0, ..., a_{N-1}) of a sequence over GF(q). Symbols
/// are stored as plain residues; the modulus travels in params.
class PeriodicSequence {
public:
    PeriodicSequence(SequenceParams params, std::vector<std::uint32_t> symbols);

    const SequenceParams& params() const noexcept { return params_; }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    std::span<const std::uint32_t> values() const noexcept { return symbols_; }
    std::uint32_t operator[](std::size_t i) const { return symbols_[i]; }
    FieldElement symbol(std::size_t i) const { return {symbols_.at(i), field_}; }

private:
    SequenceParams params_;
    PrimeField field_;
    std::vector<std::uint32_t> symbols_;
};

/// A sparse error vector: nonzero deltas at strictly increasing positions.
/// Its Hamming weight is the number of entries.
struct ErrorPattern {
    std::vector<std::size_t> positions;
    std::vector<std::uint32_t> deltas;

    std::size_t weight() const noexcept { return positions.size(); }
};

/// s + e: adds each delta to the symbol at its position (mod q).
PeriodicSequence apply_errors(const PeriodicSequence& s, const ErrorPattern& e);

/// Number of nonzero symbols in one period.
std::size_t hamming_weight(const PeriodicSequence& s);

/// Deterministic uniform random sequence; identical (params, seed) gives an
/// identical sequence on every platform.
PeriodicSequence random_sequence(const SequenceParams& params, std::uint64_t seed);

}  // namespace kelc
