#pragma once

#include <cstdint>
#include <string>

#include "fermat/errors.hpp"

namespace fermat {

inline constexpr int kMaxExt = 16;

/// Element of GF(2^e), 1 <= e <= 16, in the polynomial basis modulo a fixed
/// irreducible polynomial per e (the least irreducible of each degree under
/// the integer encoding of coefficient bits; see modulus_bits()).
///
/// Values are plain bit patterns, so elements serialize as the decimal
/// integer `bits` and arithmetic is reproducible bit for bit.
struct FieldElement {
    uint16_t bits = 0;
    uint8_t ext = 1;

    bool is_zero() const { return bits == 0; }
    bool operator==(const FieldElement&) const = default;
};

/// Modulus for GF(2^e), as coefficient bits with bit e set.
uint32_t modulus_bits(int ext);

FieldElement gf_zero(int ext);
FieldElement gf_one(int ext);
FieldElement gf_make(int ext, uint32_t bits); // checks bits < 2^ext

FieldElement add(FieldElement x, FieldElement y);
FieldElement mul(FieldElement x, FieldElement y);
FieldElement inv(FieldElement x);

/// x^4, i.e. the square of the Frobenius endomorphism. Additive and
/// multiplicative in characteristic 2.
FieldElement pow4(FieldElement x);

std::string to_string(FieldElement x);

} // namespace fermat
