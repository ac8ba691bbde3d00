#include "fermat/field.hpp"

namespace fermat {

namespace {

// Least irreducible polynomial of each degree over GF(2), encoded as
// coefficient bits with bit e set. Fixed once so that serialized field
// elements mean the same thing everywhere.
//
//   e :  1   2   3   4   5   6    7    8    9    10    11    12    13    14     15     16
constexpr uint32_t kModulus[kMaxExt + 1] = {
    0, 0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805,
    0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

void check_ext(int ext) {
    if (ext < 1 || ext > kMaxExt)
        throw Error(Errc::field_mismatch,
                    "extension degree must be in [1, 16], got " + std::to_string(ext));
}

void check_same(FieldElement x, FieldElement y) {
    if (x.ext != y.ext)
        throw Error(Errc::field_mismatch,
                    "field mismatch: GF(2^" + std::to_string(x.ext) + ") vs GF(2^" +
                        std::to_string(y.ext) + ")");
}

// Carry-less product reduced modulo the field polynomial.
uint32_t mulmod(uint32_t a, uint32_t b, int ext) {
    uint32_t prod = 0;
    while (b) {
        if (b & 1) prod ^= a;
        b >>= 1;
        a <<= 1;
    }
    const uint32_t mod = kModulus[ext];
    for (int bit = 30; bit >= ext; --bit)
        if (prod & (1u << bit)) prod ^= mod << (bit - ext);
    return prod;
}

} // namespace

uint32_t modulus_bits(int ext) {
    check_ext(ext);
    return kModulus[ext];
}

FieldElement gf_zero(int ext) {
    check_ext(ext);
    return {0, static_cast<uint8_t>(ext)};
}

FieldElement gf_one(int ext) {
    check_ext(ext);
    return {1, static_cast<uint8_t>(ext)};
}

FieldElement gf_make(int ext, uint32_t bits) {
    check_ext(ext);
    if (bits >> ext)
        throw Error(Errc::parse_error, "field element " + std::to_string(bits) +
                                           " out of range for GF(2^" + std::to_string(ext) + ")");
    return {static_cast<uint16_t>(bits), static_cast<uint8_t>(ext)};
}

FieldElement add(FieldElement x, FieldElement y) {
    check_same(x, y);
    return {static_cast<uint16_t>(x.bits ^ y.bits), x.ext};
}

FieldElement mul(FieldElement x, FieldElement y) {
    check_same(x, y);
    if (x.ext == 1) return {static_cast<uint16_t>(x.bits & y.bits), 1};
    return {static_cast<uint16_t>(mulmod(x.bits, y.bits, x.ext)), x.ext};
}

FieldElement inv(FieldElement x) {
    if (x.is_zero())
        throw Error(Errc::division_by_zero, "inverse of zero in GF(2^" + std::to_string(x.ext) + ")");
    // x^(2^e - 2) by square and multiply; the exponent is 111...10 in binary.
    FieldElement acc = gf_one(x.ext);
    FieldElement sq = x;
    for (int i = 1; i < x.ext; ++i) {
        sq = mul(sq, sq);
        acc = mul(acc, sq);
    }
    return acc;
}

FieldElement pow4(FieldElement x) {
    FieldElement sq = mul(x, x);
    return mul(sq, sq);
}

std::string to_string(FieldElement x) { return std::to_string(x.bits); }

} // namespace fermat
