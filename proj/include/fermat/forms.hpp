#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermat/field.hpp"

namespace fermat {

/// Homogeneous polynomial in S, T of a declared degree over GF(2^e).
/// Coefficients are stored by ascending T-exponent: coeff(j) multiplies
/// S^(d-j) T^j. The zero form keeps its declared degree so that degree
/// bookkeeping in kernel bases stays uniform.
class BinaryForm {
  public:
    BinaryForm() : BinaryForm(0, 1) {}
    BinaryForm(int degree, int ext);
    explicit BinaryForm(std::vector<FieldElement> coeffs);

    static BinaryForm monomial(int ext, uint32_t coeff_bits, int s_exp, int t_exp);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int ext() const { return ext_; }
    bool is_zero() const;

    FieldElement coeff(int t_exp) const;
    void set_coeff(int t_exp, FieldElement c);

    bool operator==(const BinaryForm&) const = default;

    /// Coefficient bits packed into a word, bit j = coeff(j). Requires
    /// ext == 1 and degree <= 63; the inverse of unpack_gf2.
    uint64_t pack_gf2() const;
    static BinaryForm unpack_gf2(uint64_t bits, int degree);

  private:
    uint8_t ext_;
    std::vector<FieldElement> coeffs_;
};

BinaryForm add(const BinaryForm& f, const BinaryForm& g); // equal degrees
BinaryForm mul(const BinaryForm& f, const BinaryForm& g);
BinaryForm pow4(const BinaryForm& g);
BinaryForm pow5(const BinaryForm& g);

/// Product with the monomial S^s_exp T^t_exp (an index shift).
BinaryForm mul_monomial(const BinaryForm& f, int s_exp, int t_exp);

/// Monic generator of the ideal of common divisors. Powers of T are tracked
/// separately from the dehomogenization at T = 1, so gcd(S^2 T, S T^2) = S T.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

FieldElement evaluate(const BinaryForm& g, FieldElement s, FieldElement t);

std::string to_string(const BinaryForm& f);

} // namespace fermat
