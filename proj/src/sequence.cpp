#include "kelc/sequence.hpp"

#include <stdexcept>
#include <string>

namespace kelc {

PeriodicSequence::PeriodicSequence(SequenceParams params, std::vector<std::uint32_t> symbols)
    : params_(params), field_(params.q), symbols_(std::move(symbols)) {
    if (symbols_.size() != params_.period)
        throw std::invalid_argument("sequence has " + std::to_string(symbols_.size()) +
                                    " symbols, period N = " + std::to_string(params_.period));
    for (std::uint32_t v : symbols_)
        if (v >= params_.q)
            throw std::invalid_argument("symbol " + std::to_string(v) + " is outside GF(" +
                                        std::to_string(params_.q) + ")");
}

PeriodicSequence apply_errors(const PeriodicSequence& s, const ErrorPattern& e) {
    if (e.positions.size() != e.deltas.size())
        throw std::invalid_argument("error pattern has mismatched position/delta lengths");
    const std::uint32_t q = s.params().q;
    std::vector<std::uint32_t> out(s.values().begin(), s.values().end());
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < e.positions.size(); ++i) {
        const std::size_t pos = e.positions[i];
        if (pos >= out.size())
            throw std::out_of_range("error position " + std::to_string(pos) + " >= N");
        if (!first && pos <= prev)
            throw std::invalid_argument("error positions must be strictly increasing");
        if (e.deltas[i] == 0 || e.deltas[i] >= q)
            throw std::invalid_argument("error deltas must lie in [1, q)");
        out[pos] = add_mod(out[pos], e.deltas[i], q);
        prev = pos;
        first = false;
    }
    return {s.params(), std::move(out)};
}

std::size_t hamming_weight(const PeriodicSequence& s) {
    std::size_t w = 0;
    for (std::uint32_t v : s.values()) w += v != 0;
    return w;
}

PeriodicSequence random_sequence(const SequenceParams& params, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> symbols(params.period);
    for (auto& v : symbols) v = rng.below(params.q);
    return {params, std::move(symbols)};
}

}  // namespace kelc
