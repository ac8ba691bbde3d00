#pragma once

#include <cstdint>

namespace fermat::gf2 {

// Word-packed homogeneous forms over GF(2). A form of declared degree d is
// the bit pattern with bit j = coefficient of S^(d-j) T^j, so multiplying by
// T^k is a left shift and the encoding round-trips losslessly for d <= 63.

/// Carry-less product; requires deg a + deg b <= 63.
uint64_t clmul(uint64_t a, uint64_t b);

/// Fourth power of a packed form: bit j moves to bit 4j (coefficients are
/// 0/1, so they are their own fourth powers). Input must fit in 16 bits.
uint64_t spread4(uint32_t bits);

/// Fifth power of a packed form of degree <= 12: spread4(b) carry-less
/// times b.
uint64_t pow5(uint32_t bits);

/// Reverse the low `width` bits (dehomogenization: coefficient of x^k in
/// F(x,1) is the coefficient of T^(d-k), so the reversed pattern is the
/// univariate in S).
uint32_t reverse_bits(uint32_t bits, int width);

/// gcd of packed univariate polynomials over GF(2) (0 allowed on one side).
uint64_t gcd_poly(uint64_t a, uint64_t b);

/// gcd of two homogeneous forms, encoded as (tval << 12) | univ where the
/// form gcd equals T^tval times the homogenization of the univariate `univ`.
/// Requires degrees <= 9 so the encoding fits 16 bits. The all-zero form is
/// represented by univ = 0.
uint16_t form_gcd_enc(uint32_t bits_a, int deg_a, uint32_t bits_b, int deg_b);
uint16_t form_gcd_combine(uint16_t enc_a, uint16_t enc_b);

inline constexpr uint16_t kGcdTrivial = 1; // tval 0, univariate 1

/// gcd over a 6-tuple of equal-degree packed forms; true iff it is 1.
bool primitive6(const uint16_t forms[6], int degree);

} // namespace fermat::gf2
