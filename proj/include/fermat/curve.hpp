#pragma once

#include <array>
#include <string>
#include <vector>

#include "fermat/forms.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

/// A validated 6-tuple (G0, ..., G5) of equal-degree forms defining a
/// morphism from the projective line into the degree-5 Fermat hypersurface
/// in characteristic 2. Construction enforces, in this order:
///   - six forms of a common degree d >= 1 over a common field,
///   - not all zero,
///   - membership: G0^5 + ... + G5^5 is the zero form,
///   - primitivity: gcd(G0, ..., G5) = 1.
/// Immutable afterwards; re-validated whenever read back from a file.
class CurveMap {
  public:
    static CurveMap validate(std::array<BinaryForm, 6> forms);
    static CurveMap validate(std::vector<BinaryForm> forms);

    int degree() const { return forms_[0].degree(); }
    int ext() const { return forms_[0].ext(); }
    const BinaryForm& form(int i) const { return forms_[static_cast<size_t>(i)]; }
    const std::array<BinaryForm, 6>& forms() const { return forms_; }

    bool operator==(const CurveMap&) const = default;

  private:
    explicit CurveMap(std::array<BinaryForm, 6> forms) : forms_(std::move(forms)) {}
    std::array<BinaryForm, 6> forms_;
};

/// The 6 x (d+1) matrix whose row i is the coefficient sequence of G_i
/// by ascending T-exponent.
linalg::FMatrix coefficient_matrix(const CurveMap& c);

int matrix_rank(const linalg::FMatrix& m);

/// Whether sum_i a_{ij}^4 a_{iv} = 0 holds for every j, where a_{ij} are the
/// coefficient-matrix entries and v = `column`. These sums are coefficients
/// of sum G_i^5 exactly when no other T-exponent of the tuple's degree
/// collides with v modulo 4; requesting a column without that property is an
/// error. Valid pairs include degree 4 with v in {1,2,3} and degree 5 with
/// v in {2,3}.
bool check_frobenius_column_identity(const CurveMap& c, int column);
bool frobenius_column_is_pure(int degree, int column);

// ------------------------------------------------------------------- io --

/// Text format:
///   field: 2^e
///   degree: d
///   G0 = S^7*T
///   G1 = coeffs:[0,1,0,0,0]
///   ...
/// Forms are sums of monomials `c*S^a*T^b` (coefficient bits omitted when 1,
/// exponent suffix omitted when 1, `0` for the zero form), or the compact
/// coefficient list. '#' starts a comment. Round trips are bit exact.
CurveMap parse_curve(const std::string& text);
CurveMap load_curve(const std::string& path);
std::string curve_to_text(const CurveMap& c);

BinaryForm parse_form(const std::string& text, int degree, int ext);

} // namespace fermat
