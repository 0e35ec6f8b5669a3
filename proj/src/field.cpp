#include "kelc/field.hpp"

#include "kelc/params.hpp"

namespace kelc {

namespace {

void require_same_field(FieldElement x, FieldElement y) {
    if (!(x.field() == y.field()))
        throw std::invalid_argument("field elements have mismatched moduli");
}

}  // namespace

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t q) {
    std::uint32_t acc = 1 % q;
    base %= q;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return acc;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
    if (a % q == 0) throw std::domain_error("inverse of zero");
    return pow_mod(a, q - 2, q);  // Fermat; q prime
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q < 3 || (q & 1) == 0 || !is_prime(q))
        throw std::invalid_argument("field modulus must be an odd prime");
}

FieldElement add(FieldElement x, FieldElement y) {
    require_same_field(x, y);
    return {add_mod(x.value(), y.value(), x.field().modulus()), x.field()};
}

FieldElement sub(FieldElement x, FieldElement y) {
    require_same_field(x, y);
    return {sub_mod(x.value(), y.value(), x.field().modulus()), x.field()};
}

FieldElement neg(FieldElement x) {
    return {neg_mod(x.value(), x.field().modulus()), x.field()};
}

FieldElement mul(FieldElement x, FieldElement y) {
    require_same_field(x, y);
    return {mul_mod(x.value(), y.value(), x.field().modulus()), x.field()};
}

FieldElement inv(FieldElement x) {
    return {inv_mod(x.value(), x.field().modulus()), x.field()};
}

FieldElement pow(FieldElement x, std::uint64_t e) {
    return {pow_mod(x.value(), e, x.field().modulus()), x.field()};
}

}  // namespace kelc
