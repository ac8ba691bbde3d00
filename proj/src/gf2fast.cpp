#include "fermat/gf2fast.hpp"

#include <bit>

#include "fermat/curve.hpp"
#include "fermat/errors.hpp"

namespace fermat::gf2fast {

namespace {

// xor-basis rank of up to 24 masks
int mask_rank(const uint32_t* v, int n) {
    uint32_t basis[24];
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        uint32_t x = v[i];
        for (int k = 0; k < rank; ++k) x = std::min(x, x ^ basis[k]);
        if (x) basis[rank++] = x;
    }
    return rank;
}

} // namespace

int coefficient_rank(const std::array<uint16_t, 6>& forms) {
    uint32_t v[6];
    for (int i = 0; i < 6; ++i) v[i] = forms[static_cast<size_t>(i)];
    return mask_rank(v, 6);
}

std::vector<int> omega_dims(const std::array<uint16_t, 6>& forms, int upto) {
    std::vector<int> dims;
    dims.reserve(static_cast<size_t>(upto + 1));
    for (int m = 0; m <= upto; ++m) {
        uint32_t v[24];
        int n = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j <= m; ++j) v[n++] = static_cast<uint32_t>(forms[static_cast<size_t>(i)]) << j;
        dims.push_back(n - mask_rank(v, n));
    }
    return dims;
}

bool free_screen(int degree, const std::array<uint16_t, 6>& forms) {
    const int bound = degree / 4;

    // Generator degrees sum to the curve degree. Two generators in degree
    // zero leave at most 3 * floor(d/4) < d for the other three, so a rank
    // below 5 settles the candidate by itself.
    const int dim0 = 6 - coefficient_rank(forms);
    if (dim0 >= 2) return false;

    std::vector<int> dims = omega_dims(forms, bound);
    // New generator counts from the free-module Hilbert recurrence.
    int counts[8] = {0};
    int total = 0, weighted = 0;
    for (int m = 0; m <= bound; ++m) {
        int predicted = 0;
        for (int g = 0; g < m; ++g) predicted += counts[g] * (m - g + 1);
        int c = dims[static_cast<size_t>(m)] - predicted;
        if (c < 0)
            throw Error(Errc::internal_error, "kernel dimensions violate freeness");
        counts[m] = c;
        total += c;
        weighted += c * m;
    }
    if (total < 5) return false;
    if (total > 5)
        throw Error(Errc::internal_error, "more than five generators in low degrees");
    // All five generators sit in degrees <= floor(d/4); their degrees must
    // then sum to d.
    if (weighted != degree)
        throw Error(Errc::internal_error, "generator degrees do not sum to the curve degree");
    return true;
}

bool column_identities_hold(int degree, const std::array<uint16_t, 6>& forms) {
    // column mask: bit i = coefficient j of form i
    uint8_t col[16] = {0};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j <= degree; ++j)
            if (forms[static_cast<size_t>(i)] & (1u << j)) col[j] |= static_cast<uint8_t>(1u << i);
    for (int v = 0; v <= degree; ++v) {
        if (!frobenius_column_is_pure(degree, v)) continue;
        for (int j = 0; j <= degree; ++j)
            if (std::popcount(static_cast<unsigned>(col[j] & col[v])) & 1) return false;
    }
    return true;
}

} // namespace fermat::gf2fast
