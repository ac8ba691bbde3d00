#include "fermat/gf2poly.hpp"

#include <algorithm>
#include <bit>

namespace fermat::gf2 {

uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        r ^= a << std::countr_zero(b);
        b &= b - 1;
    }
    return r;
}

uint64_t spread4(uint32_t bits) {
    uint64_t r = 0;
    while (bits) {
        int j = std::countr_zero(bits);
        r |= uint64_t(1) << (4 * j);
        bits &= bits - 1;
    }
    return r;
}

uint64_t pow5(uint32_t bits) { return clmul(spread4(bits), bits); }

uint32_t reverse_bits(uint32_t bits, int width) {
    uint32_t r = 0;
    for (int i = 0; i < width; ++i)
        if (bits & (1u << i)) r |= 1u << (width - 1 - i);
    return r;
}

uint64_t gcd_poly(uint64_t a, uint64_t b) {
    while (b) {
        // a mod b
        int db = 63 - std::countl_zero(b);
        while (a && (63 - std::countl_zero(a)) >= db) a ^= b << ((63 - std::countl_zero(a)) - db);
        std::swap(a, b);
    }
    return a;
}

uint16_t form_gcd_enc(uint32_t bits_a, int deg_a, uint32_t bits_b, int deg_b) {
    if (bits_a == 0 && bits_b == 0) return 0;
    if (bits_a == 0) return form_gcd_enc(bits_b, deg_b, bits_b, deg_b);
    if (bits_b == 0) return form_gcd_enc(bits_a, deg_a, bits_a, deg_a);
    int tval = std::min(std::countr_zero(bits_a), std::countr_zero(bits_b));
    uint32_t ua = reverse_bits(bits_a, deg_a + 1);
    uint32_t ub = reverse_bits(bits_b, deg_b + 1);
    uint32_t g = static_cast<uint32_t>(gcd_poly(ua, ub));
    return static_cast<uint16_t>((tval << 12) | g);
}

uint16_t form_gcd_combine(uint16_t enc_a, uint16_t enc_b) {
    if (enc_a == 0) return enc_b;
    if (enc_b == 0) return enc_a;
    int tval = std::min(enc_a >> 12, enc_b >> 12);
    uint32_t g = static_cast<uint32_t>(gcd_poly(enc_a & 0xfff, enc_b & 0xfff));
    return static_cast<uint16_t>((tval << 12) | g);
}

bool primitive6(const uint16_t forms[6], int degree) {
    uint16_t acc = 0;
    for (int i = 0; i < 6; ++i) {
        acc = form_gcd_combine(acc, form_gcd_enc(forms[i], degree, forms[i], degree));
        if (acc == kGcdTrivial) return true;
    }
    return acc == kGcdTrivial;
}

} // namespace fermat::gf2
