#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fermat::gf2fast {

// Word-packed helpers for curves over GF(2). Forms of degree d are the
// usual packed encoding (bit j = coefficient of S^(d-j) T^j).

/// Kernel dimensions of {(A_i) : deg A_i = m, sum A_i G_i = 0} for
/// m = 0..upto, via xor-basis rank over shifted form masks.
std::vector<int> omega_dims(const std::array<uint16_t, 6>& forms, int upto);

/// Exact freeness test: a curve is free iff all five plain-kernel generator
/// degrees are <= floor(d/4), which the kernel dimensions up to that bound
/// determine (the kernel is free and its generator degrees sum to d).
bool free_screen(int degree, const std::array<uint16_t, 6>& forms);

/// Rank of the 6 x (d+1) coefficient matrix over GF(2).
int coefficient_rank(const std::array<uint16_t, 6>& forms);

/// Over GF(2) the entrywise fourth-power matrix equals the matrix itself,
/// so the column identities sum_i a_{ij} a_{iv} reduce to popcount parity of
/// ANDed column masks. Returns true iff the identity holds for every j at
/// each pure column v of this degree.
bool column_identities_hold(int degree, const std::array<uint16_t, 6>& forms);

} // namespace fermat::gf2fast
