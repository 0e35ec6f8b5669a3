#include "kelc/params.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace kelc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool miller_rabin(std::uint64_t m, std::uint64_t a) {
    std::uint64_t d = m - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    std::uint64_t x = powmod(a, d, m);
    if (x == 1 || x == m - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, m);
        if (x == m - 1) return true;
    }
    return false;
}

std::uint64_t pollard_rho(std::uint64_t m) {
    if ((m & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mulmod(x, x, m) + c) % m; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, m);
        }
        if (d != m) return d;
    }
}

void factorize(std::uint64_t m, std::vector<std::uint64_t>& primes) {
    if (m == 1) return;
    if (is_prime(m)) {
        primes.push_back(m);
        return;
    }
    std::uint64_t d = pollard_rho(m);
    factorize(d, primes);
    factorize(m / d, primes);
}

// Largest n with 2 * p^n representable in the cost tables' index space.
constexpr std::uint64_t kMaxPeriod = std::uint64_t(1) << 40;

}  // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == s) return true;
        if (m % s == 0) return false;
    }
    // Base set deterministic for all m < 2^64 (Sorenson & Webster).
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin(m, a)) return false;
    return true;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    if (std::gcd(q % m, m) != 1)
        throw std::invalid_argument("multiplicative_order: arguments are not coprime");

    // phi(m) from the prime factorization of m.
    std::vector<std::uint64_t> mfac;
    factorize(m, mfac);
    std::sort(mfac.begin(), mfac.end());
    mfac.erase(std::unique(mfac.begin(), mfac.end()), mfac.end());
    std::uint64_t phi = m;
    for (std::uint64_t f : mfac) phi = phi / f * (f - 1);

    std::vector<std::uint64_t> pfac;
    factorize(phi, pfac);
    std::uint64_t order = phi;
    for (std::uint64_t f : pfac)
        while (order % f == 0 && powmod(q, order / f, m) == 1) order /= f;
    return order;
}

SequenceParams validate_params(std::uint64_t p, std::uint32_t n, std::uint64_t q) {
    if (p < 3 || (p & 1) == 0 || !is_prime(p))
        throw ParamError(ParamIssue::p_not_odd_prime, "p is not an odd prime");
    if (q < 3 || (q & 1) == 0 || !is_prime(q))
        throw ParamError(ParamIssue::q_not_odd_prime, "q is not an odd prime");
    if (p == q)
        throw ParamError(ParamIssue::p_equals_q, "p and q must be distinct");
    if (q > 0x7fffffffull)
        throw ParamError(ParamIssue::q_not_odd_prime, "q exceeds the supported range");

    if (p > (std::uint64_t(1) << 20) || p * p > kMaxPeriod)
        throw ParamError(ParamIssue::period_too_large, "p exceeds the supported range");
    std::uint64_t ord = multiplicative_order(q, p * p);
    if (ord != p * (p - 1))
        throw ParamError(ParamIssue::q_not_primitive_root,
                         "q is not a primitive root mod p^2 (order " + std::to_string(ord) +
                             ", expected " + std::to_string(p * (p - 1)) + ")");

    std::uint64_t half = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (half > kMaxPeriod / (2 * p))
            throw ParamError(ParamIssue::period_too_large, "period 2 p^n exceeds the supported range");
        half *= p;
    }
    return SequenceParams{p, n, static_cast<std::uint32_t>(q), 2 * half};
}

}  // namespace kelc
