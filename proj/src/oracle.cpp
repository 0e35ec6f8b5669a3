#include "kelc/oracle.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "kelc/klc.hpp"
#include "kelc/lc.hpp"

namespace kelc {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > ~0ull) throw std::overflow_error("count exceeds 64-bit range");
    return static_cast<std::uint64_t>(r);
}

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    if (a > ~0ull - b) throw std::overflow_error("count exceeds 64-bit range");
    return a + b;
}

// Candidate identity in canonical order: weight, then combination rank,
// then delta rank. Results merge by (klc, key) minimum, which makes the
// outcome independent of scheduling.
struct CandidateKey {
    std::uint64_t weight = 0;
    std::uint64_t comb_rank = 0;
    std::uint64_t delta_rank = 0;

    bool operator<(const CandidateKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (comb_rank != o.comb_rank) return comb_rank < o.comb_rank;
        return delta_rank < o.delta_rank;
    }
};

struct BestCandidate {
    std::uint64_t klc = ~0ull;
    CandidateKey key;

    void offer(std::uint64_t lc, const CandidateKey& k) {
        if (lc < klc || (lc == klc && k < key)) {
            klc = lc;
            key = k;
        }
    }
    void merge(const BestCandidate& o) {
        if (o.klc < klc || (o.klc == klc && o.key < key)) *this = o;
    }
};

struct Chunk {
    std::uint64_t weight;
    std::uint64_t comb_start;
    std::uint64_t comb_count;
};

}  // namespace

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(acc) * (n - r + i) / i;
        if (t > ~0ull) throw std::overflow_error("binomial exceeds 64-bit range");
        acc = static_cast<std::uint64_t>(t);
    }
    return acc;
}

std::uint64_t error_pattern_count(std::uint64_t n, std::uint32_t q, std::uint64_t k) {
    std::uint64_t total = 0;
    std::uint64_t qpow = 1;  // (q-1)^i
    for (std::uint64_t i = 0; i <= k; ++i) {
        if (i > n) break;  // C(n, i) = 0 past n
        total = add_checked(total, mul_checked(qpow, binomial_checked(n, i)));
        if (i < k) qpow = mul_checked(qpow, q - 1);
    }
    return total;
}

std::vector<std::size_t> unrank_combination(std::uint64_t n, std::uint64_t w,
                                            std::uint64_t rank) {
    std::vector<std::size_t> out(w);
    std::uint64_t v = 0;
    for (std::uint64_t i = 0; i < w; ++i) {
        for (;; ++v) {
            std::uint64_t cnt = binomial_checked(n - 1 - v, w - 1 - i);
            if (rank < cnt) break;
            rank -= cnt;
        }
        out[i] = v++;
    }
    return out;
}

bool next_combination(std::vector<std::size_t>& positions, std::uint64_t n) {
    const std::size_t w = positions.size();
    std::size_t i = w;
    while (i > 0 && positions[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) return false;
    ++positions[i - 1];
    for (std::size_t j = i; j < w; ++j) positions[j] = positions[j - 1] + 1;
    return true;
}

OracleResult brute_force_klc(const PeriodicSequence& s, std::uint64_t k,
                             const OracleOptions& opts) {
    const SequenceParams& params = s.params();
    const std::uint64_t n = params.period;
    const std::uint32_t q = params.q;

    const std::uint64_t total = error_pattern_count(n, q, k);
    if (total > opts.candidate_cap) throw CapExceededError(total, opts.candidate_cap);

    const std::uint64_t kw = std::min(k, n);  // weights beyond N contribute nothing
    std::vector<std::uint64_t> weight_offset(kw + 2, 0);
    std::vector<std::uint64_t> deltas_per(kw + 1, 1);
    {
        std::uint64_t off = 0, qpow = 1;
        for (std::uint64_t w = 0; w <= kw; ++w) {
            weight_offset[w] = off;
            deltas_per[w] = qpow;
            off += qpow * binomial_checked(n, w);
            qpow *= q - 1;
        }
        weight_offset[kw + 1] = off;
    }

    // weight 0: the unmodified sequence
    BestCandidate best;
    {
        WxcScratch scratch;
        best.offer(wxc_lc(s.values(), params, scratch), CandidateKey{0, 0, 0});
    }

    std::vector<Chunk> chunks;
    for (std::uint64_t w = 1; w <= kw; ++w) {
        const std::uint64_t combos = binomial_checked(n, w);
        const std::uint64_t per_chunk = std::max<std::uint64_t>(1, (1ull << 16) / deltas_per[w]);
        for (std::uint64_t start = 0; start < combos; start += per_chunk)
            chunks.push_back({w, start, std::min(per_chunk, combos - start)});
    }

    unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks.size() ? chunks.size() : 1));

    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::uint64_t> examined{1};  // weight-0 candidate
    std::atomic<std::uint64_t> bm_checks{0};
    std::mutex error_mutex;
    std::string first_error;

    std::vector<BestCandidate> worker_best(jobs);
    auto worker = [&](unsigned wid) {
        WxcScratch scratch;
        BmScratch bm_scratch;
        std::vector<std::uint32_t> buf(s.values().begin(), s.values().end());
        std::vector<std::uint32_t> two_periods(2 * n);
        std::vector<std::uint32_t> digits;
        BestCandidate local;
        std::uint64_t local_examined = 0, local_bm = 0;

        try {
            for (;;) {
                const std::size_t ci = next_chunk.fetch_add(1);
                if (ci >= chunks.size()) break;
                const Chunk& ch = chunks[ci];
                const std::uint64_t w = ch.weight;
                const std::uint64_t dper = deltas_per[w];
                std::vector<std::size_t> pos = unrank_combination(n, w, ch.comb_start);

                for (std::uint64_t c = 0; c < ch.comb_count; ++c) {
                    const std::uint64_t comb_rank = ch.comb_start + c;
                    digits.assign(w, 1);  // delta tuple, lexicographic odometer
                    for (std::uint64_t dr = 0; dr < dper; ++dr) {
                        for (std::uint64_t i = 0; i < w; ++i)
                            buf[pos[i]] = add_mod(s[pos[i]], digits[i], q);
                        const std::uint64_t lc = wxc_lc(buf, params, scratch);
                        local.offer(lc, CandidateKey{w, comb_rank, dr});
                        ++local_examined;

                        if (opts.bm_sample_percent > 0) {
                            const std::uint64_t gid = weight_offset[w] + comb_rank * dper + dr;
                            if (mix64(gid) % 100 < opts.bm_sample_percent) {
                                std::copy(buf.begin(), buf.end(), two_periods.begin());
                                std::copy(buf.begin(), buf.end(), two_periods.begin() + n);
                                ++local_bm;
                                if (bm_lc(two_periods, q, bm_scratch) != lc)
                                    throw std::logic_error(
                                        "cross-check failed: wxc_lc != bm_lc at candidate " +
                                        std::to_string(gid));
                            }
                        }

                        // next delta tuple (last digit fastest)
                        for (std::size_t i = w; i-- > 0;) {
                            if (++digits[i] < q) break;
                            digits[i] = 1;
                        }
                    }
                    for (std::uint64_t i = 0; i < w; ++i) buf[pos[i]] = s[pos[i]];
                    if (c + 1 < ch.comb_count) next_combination(pos, n);
                }
            }
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (first_error.empty()) first_error = e.what();
        }
        worker_best[wid] = local;
        examined += local_examined;
        bm_checks += local_bm;
    };

    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
        for (auto& t : pool) t.join();
    }
    if (!first_error.empty()) throw std::logic_error(first_error);

    for (const auto& wb : worker_best) best.merge(wb);
    if (examined.load() != total)
        throw std::logic_error("candidate bookkeeping mismatch: examined " +
                               std::to_string(examined.load()) + " of " + std::to_string(total));

    OracleResult res;
    res.k = k;
    res.klc = best.klc;
    res.candidates_examined = examined.load();
    res.bm_spot_checks = bm_checks.load();
    if (best.key.weight > 0) {
        const std::uint64_t w = best.key.weight;
        auto pos = unrank_combination(n, w, best.key.comb_rank);
        std::vector<std::uint32_t> deltas(w);
        std::uint64_t dr = best.key.delta_rank;
        for (std::size_t i = w; i-- > 0;) {
            deltas[i] = static_cast<std::uint32_t>(dr % (q - 1)) + 1;
            dr /= q - 1;
        }
        res.witness = ErrorPattern{std::move(pos), std::move(deltas)};
    }
    return res;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> klc_spectrum(const PeriodicSequence& s,
                                                                  std::uint64_t k_max,
                                                                  bool use_fast,
                                                                  const OracleOptions& opts) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(k_max + 1);
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const std::uint64_t v =
            use_fast ? k_error_lc(s, k).complexity : brute_force_klc(s, k, opts).klc;
        out.emplace_back(k, v);
    }
    return out;
}

}  // namespace kelc
