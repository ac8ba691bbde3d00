#include "fermat/curve.hpp"

namespace fermat {

CurveMap CurveMap::validate(std::vector<BinaryForm> forms) {
    if (forms.size() != 6)
        throw Error(Errc::degree_mismatch,
                    "a curve needs exactly 6 forms, got " + std::to_string(forms.size()));
    std::array<BinaryForm, 6> a;
    for (size_t i = 0; i < 6; ++i) a[i] = std::move(forms[i]);
    return validate(std::move(a));
}

CurveMap CurveMap::validate(std::array<BinaryForm, 6> forms) {
    const int d = forms[0].degree();
    const int e = forms[0].ext();
    for (const auto& f : forms) {
        if (f.ext() != e) throw Error(Errc::field_mismatch, "forms over different fields");
        if (f.degree() != d)
            throw Error(Errc::degree_mismatch, "forms of unequal degrees " + std::to_string(d) +
                                                   " and " + std::to_string(f.degree()));
    }
    if (d < 1) throw Error(Errc::degree_mismatch, "curve degree must be >= 1");

    bool all_zero = true;
    for (const auto& f : forms) all_zero = all_zero && f.is_zero();
    if (all_zero) throw Error(Errc::all_zero, "all six forms are zero");

    BinaryForm sum(5 * d, e);
    for (const auto& f : forms) sum = add(sum, pow5(f));
    if (!sum.is_zero())
        throw Error(Errc::not_on_fermat,
                    "sum of fifth powers is " + to_string(sum) + ", not zero");

    BinaryForm g(0, e);
    bool have = false;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        g = have ? gcd(g, f) : gcd(f, f);
        have = true;
    }
    if (g.degree() >= 1)
        throw Error(Errc::not_primitive, "common factor " + to_string(g));

    return CurveMap(std::move(forms));
}

linalg::FMatrix coefficient_matrix(const CurveMap& c) {
    const int d = c.degree();
    linalg::FMatrix m(6, d + 1, c.ext());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j <= d; ++j) m.set(i, j, c.form(i).coeff(j));
    return m;
}

int matrix_rank(const linalg::FMatrix& m) { return m.rank(); }

bool frobenius_column_is_pure(int degree, int column) {
    if (column < 0 || column > degree) return false;
    for (int other = column % 4; other <= degree; other += 4)
        if (other != column) return false;
    return true;
}

bool check_frobenius_column_identity(const CurveMap& c, int column) {
    if (!frobenius_column_is_pure(c.degree(), column))
        throw Error(Errc::wrong_degree,
                    "column " + std::to_string(column) + " of a degree-" +
                        std::to_string(c.degree()) +
                        " curve is not a pure fifth-power coefficient pattern");
    for (int j = 0; j <= c.degree(); ++j) {
        FieldElement acc = gf_zero(c.ext());
        for (int i = 0; i < 6; ++i)
            acc = add(acc, mul(pow4(c.form(i).coeff(j)), c.form(i).coeff(column)));
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace fermat
