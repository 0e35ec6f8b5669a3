#pragma once

#include <cstdint>
#include <stdexcept>

namespace kelc {

// Raw residue arithmetic used by the hot paths; operands must already lie
// in [0, q). Addition/subtraction avoid division on purpose.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    std::uint32_t s = a + b;
    return s >= q ? s - q : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return a >= b ? a - b : a + q - b;
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t q) {
    return a == 0 ? 0 : q - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % q);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t q);

/// Multiplicative inverse in GF(q); throws std::domain_error on a = 0.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q);

/// The prime field GF(q) for an odd prime q; primality is checked at
/// construction.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);
    std::uint32_t modulus() const noexcept { return q_; }
    bool operator==(const PrimeField& other) const noexcept { return q_ == other.q_; }

private:
    std::uint32_t q_;
};

/// A canonical residue in [0, q) tied to its field. Values normalize on
/// construction and after every operation.
class FieldElement {
public:
    FieldElement(std::uint64_t value, const PrimeField& field)
        : value_(static_cast<std::uint32_t>(value % field.modulus())), field_(&field) {}

    std::uint32_t value() const noexcept { return value_; }
    const PrimeField& field() const noexcept { return *field_; }

    bool operator==(const FieldElement& other) const noexcept {
        return value_ == other.value_ && *field_ == *other.field_;
    }

private:
    std::uint32_t value_;
    const PrimeField* field_;
};

FieldElement add(FieldElement x, FieldElement y);
FieldElement sub(FieldElement x, FieldElement y);
FieldElement neg(FieldElement x);
FieldElement mul(FieldElement x, FieldElement y);
FieldElement inv(FieldElement x);
FieldElement pow(FieldElement x, std::uint64_t e);

inline FieldElement operator+(FieldElement x, FieldElement y) { return add(x, y); }
inline FieldElement operator-(FieldElement x, FieldElement y) { return sub(x, y); }
inline FieldElement operator-(FieldElement x) { return neg(x); }
inline FieldElement operator*(FieldElement x, FieldElement y) { return mul(x, y); }

}  // namespace kelc
