#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kelc {

/// Why a (p, n, q) triple was rejected.
enum class ParamIssue {
    p_not_odd_prime,
    q_not_odd_prime,
    p_equals_q,
    q_not_primitive_root,
    period_too_large,
};

class ParamError : public std::invalid_argument {
public:
    ParamError(ParamIssue issue, const std::string& msg)
        : std::invalid_argument(msg), issue_(issue) {}
    ParamIssue issue() const noexcept { return issue_; }

private:
    ParamIssue issue_;
};

/// Deterministic primality test for any 64-bit m (Miller-Rabin with a base
/// set proven exact below 2^64).
bool is_prime(std::uint64_t m);

/// Least e >= 1 with q^e = 1 (mod m). Requires m >= 2 and gcd(q, m) = 1,
/// otherwise throws std::invalid_argument. Found by stripping prime factors
/// from the group order phi(m).
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m);

/// Validated parameter triple for sequences with period N = 2 p^n over
/// GF(q): p, q odd primes, p != q, and q a primitive root modulo p^2.
struct SequenceParams {
    std::uint64_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    std::uint64_t period = 0;  // N = 2 p^n

    std::uint64_t half_period() const noexcept { return period / 2; }  // p^n
};

/// Checks every precondition and derives N; throws ParamError with a
/// distinct ParamIssue per rejection reason.
///
/// n = 0 (N = 2) is accepted; the primitive-root condition is still
/// enforced so the same triple stays valid across all n.
SequenceParams validate_params(std::uint64_t p, std::uint32_t n, std::uint64_t q);

}  // namespace kelc
