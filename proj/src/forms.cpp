#include "fermat/forms.hpp"

#include <algorithm>

#include "fermat/gf2poly.hpp"

namespace fermat {

namespace {

void check_same_field(const BinaryForm& f, const BinaryForm& g) {
    if (f.ext() != g.ext())
        throw Error(Errc::field_mismatch, "forms live in different fields");
}

// Univariate polynomials over GF(2^e) as coefficient vectors (index =
// x-exponent), used only for the gcd. Trailing zeros trimmed.
using Uni = std::vector<FieldElement>;

int uni_deg(const Uni& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

void uni_trim(Uni& p) { p.resize(static_cast<size_t>(uni_deg(p) + 1)); }

// p mod q, q != 0
Uni uni_mod(Uni p, const Uni& q) {
    int dq = uni_deg(q);
    FieldElement lead_inv = inv(q[dq]);
    for (int dp = uni_deg(p); dp >= dq; dp = uni_deg(p)) {
        FieldElement factor = mul(p[dp], lead_inv);
        for (int i = 0; i <= dq; ++i)
            p[dp - dq + i] = add(p[dp - dq + i], mul(factor, q[i]));
    }
    uni_trim(p);
    return p;
}

Uni uni_gcd(Uni a, Uni b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        Uni r = uni_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    int d = uni_deg(a);
    if (d >= 0) {
        FieldElement lead_inv = inv(a[d]);
        for (auto& c : a) c = mul(c, lead_inv);
    }
    return a;
}

// F(x, 1): coefficient of x^k is coeff(d - k).
Uni dehomogenize(const BinaryForm& f) {
    Uni p(static_cast<size_t>(f.degree() + 1), gf_zero(f.ext()));
    for (int j = 0; j <= f.degree(); ++j) p[f.degree() - j] = f.coeff(j);
    uni_trim(p);
    return p;
}

int t_valuation(const BinaryForm& f) {
    for (int j = 0; j <= f.degree(); ++j)
        if (!f.coeff(j).is_zero()) return j;
    return -1; // zero form
}

} // namespace

BinaryForm::BinaryForm(int degree, int ext) : ext_(static_cast<uint8_t>(ext)) {
    if (degree < 0) throw Error(Errc::degree_mismatch, "form degree must be >= 0");
    coeffs_.assign(static_cast<size_t>(degree + 1), gf_zero(ext));
}

BinaryForm::BinaryForm(std::vector<FieldElement> coeffs) {
    if (coeffs.empty()) throw Error(Errc::degree_mismatch, "empty coefficient list");
    ext_ = coeffs.front().ext;
    for (const auto& c : coeffs)
        if (c.ext != ext_) throw Error(Errc::field_mismatch, "mixed fields in coefficient list");
    coeffs_ = std::move(coeffs);
}

BinaryForm BinaryForm::monomial(int ext, uint32_t coeff_bits, int s_exp, int t_exp) {
    BinaryForm f(s_exp + t_exp, ext);
    f.set_coeff(t_exp, gf_make(ext, coeff_bits));
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](FieldElement c) { return c.is_zero(); });
}

FieldElement BinaryForm::coeff(int t_exp) const {
    if (t_exp < 0 || t_exp > degree()) return gf_zero(ext_);
    return coeffs_[static_cast<size_t>(t_exp)];
}

void BinaryForm::set_coeff(int t_exp, FieldElement c) {
    if (t_exp < 0 || t_exp > degree())
        throw Error(Errc::degree_mismatch, "T-exponent out of range for the declared degree");
    if (c.ext != ext_) throw Error(Errc::field_mismatch, "coefficient from a different field");
    coeffs_[static_cast<size_t>(t_exp)] = c;
}

uint64_t BinaryForm::pack_gf2() const {
    if (ext_ != 1 || degree() > 63)
        throw Error(Errc::internal_error, "packing requires a GF(2) form of degree <= 63");
    uint64_t bits = 0;
    for (int j = 0; j <= degree(); ++j)
        if (!coeff(j).is_zero()) bits |= uint64_t(1) << j;
    return bits;
}

BinaryForm BinaryForm::unpack_gf2(uint64_t bits, int degree) {
    BinaryForm f(degree, 1);
    for (int j = 0; j <= degree; ++j)
        if (bits & (uint64_t(1) << j)) f.set_coeff(j, gf_one(1));
    return f;
}

BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
    check_same_field(f, g);
    if (f.degree() != g.degree())
        throw Error(Errc::degree_mismatch,
                    "cannot add forms of degrees " + std::to_string(f.degree()) + " and " +
                        std::to_string(g.degree()));
    BinaryForm r(f.degree(), f.ext());
    for (int j = 0; j <= f.degree(); ++j) r.set_coeff(j, add(f.coeff(j), g.coeff(j)));
    return r;
}

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
    check_same_field(f, g);
    BinaryForm r(f.degree() + g.degree(), f.ext());
    for (int a = 0; a <= f.degree(); ++a) {
        if (f.coeff(a).is_zero()) continue;
        for (int b = 0; b <= g.degree(); ++b)
            r.set_coeff(a + b, add(r.coeff(a + b), mul(f.coeff(a), g.coeff(b))));
    }
    return r;
}

BinaryForm pow4(const BinaryForm& g) {
    BinaryForm r(4 * g.degree(), g.ext());
    for (int j = 0; j <= g.degree(); ++j)
        if (!g.coeff(j).is_zero()) r.set_coeff(4 * j, pow4(g.coeff(j)));
    return r;
}

BinaryForm pow5(const BinaryForm& g) { return mul(pow4(g), g); }

BinaryForm mul_monomial(const BinaryForm& f, int s_exp, int t_exp) {
    BinaryForm r(f.degree() + s_exp + t_exp, f.ext());
    for (int j = 0; j <= f.degree(); ++j) r.set_coeff(j + t_exp, f.coeff(j));
    return r;
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    check_same_field(f, g);
    const bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) throw Error(Errc::degree_mismatch, "gcd of two zero forms");
    if (fz) return gcd(g, g);
    if (gz) return gcd(f, f);

    int tval = std::min(t_valuation(f), t_valuation(g));
    Uni u = uni_gcd(dehomogenize(f), dehomogenize(g));
    int k = uni_deg(u);
    BinaryForm r(k + tval, f.ext());
    for (int i = 0; i <= k; ++i) r.set_coeff(k - i + tval, u[static_cast<size_t>(i)]);
    return r;
}

FieldElement evaluate(const BinaryForm& g, FieldElement s, FieldElement t) {
    // powers of s descending, powers of t ascending
    const int d = g.degree();
    std::vector<FieldElement> spow(static_cast<size_t>(d + 1), gf_one(g.ext()));
    for (int i = 1; i <= d; ++i) spow[static_cast<size_t>(i)] = mul(spow[static_cast<size_t>(i - 1)], s);
    FieldElement acc = gf_zero(g.ext());
    FieldElement tpow = gf_one(g.ext());
    for (int j = 0; j <= d; ++j) {
        acc = add(acc, mul(g.coeff(j), mul(spow[static_cast<size_t>(d - j)], tpow)));
        tpow = mul(tpow, t);
    }
    return acc;
}

std::string to_string(const BinaryForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int j = 0; j <= f.degree(); ++j) {
        FieldElement c = f.coeff(j);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const int a = f.degree() - j, b = j;
        std::string mono;
        if (a > 0) mono += (a == 1) ? "S" : "S^" + std::to_string(a);
        if (b > 0) {
            if (!mono.empty()) mono += "*";
            mono += (b == 1) ? "T" : "T^" + std::to_string(b);
        }
        if (c.bits != 1) {
            out += to_string(c);
            if (!mono.empty()) out += "*" + mono;
        } else {
            out += mono.empty() ? "1" : mono;
        }
    }
    return out;
}

} // namespace fermat
