#pragma once

#include "fermat/curve.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

/// Defining data of a graded kernel: the map (A_0, ..., A_{n-1}) -> sum A_i H_i
/// where each stored target H_i is homogeneous of one common declared degree
/// (the weight). A multiplier tuple of plain degree m maps to a form of
/// degree m + weight.
struct KernelSpec {
    std::vector<BinaryForm> targets;

    static KernelSpec make(std::vector<BinaryForm> targets);
    int weight() const { return targets.front().degree(); }
    int ext() const { return targets.front().ext(); }
    int arity() const { return static_cast<int>(targets.size()); }
};

KernelSpec omega_spec(const CurveMap& c);    // targets G_i
KernelSpec extended_spec(const CurveMap& c); // targets G_i^4

struct GradedGenerator {
    int plain_degree = 0;           // common degree of the multiplier coordinates
    std::vector<BinaryForm> coords;
};

/// Minimal generators of a rank-(n-1) graded kernel, nondecreasing in plain
/// degree. For kernels attached to curves n = 6 and there are exactly five.
struct GradedKernelBasis {
    int weight = 0;
    std::vector<GradedGenerator> generators;
};

/// dim over the field of {(A_i) : deg A_i = m, sum A_i H_i = 0}, by exact
/// null space of the coefficient matrix of the defining map.
int kernel_dimension(const KernelSpec& spec, int m);

/// Matrix of the defining map in multiplier degree m. Rows are coefficients
/// of the degree-(m + weight) output by ascending T-exponent; columns are
/// (coordinate, multiplier T-exponent) pairs, coordinate-major — for m = 1
/// each coordinate contributes the column pair {S*H_i, T*H_i}.
linalg::FMatrix level_matrix(const KernelSpec& spec, int m);

GradedKernelBasis minimal_generators(const KernelSpec& spec);

/// Coordinate-wise fourth power. Takes a basis of the plain kernel of a
/// curve to a basis of its extended kernel; a generator of plain degree g
/// lands in plain degree 4g.
GradedKernelBasis frobenius_lift(const GradedKernelBasis& basis);

struct SplittingType {
    enum class Kind { omega, extended, tangent };
    Kind kind = Kind::omega;
    std::vector<int> entries; // ascending

    int min() const { return entries.front(); }
    int sum() const;
    bool operator==(const SplittingType&) const = default;
};

/// Sorts, then enforces the shape invariants: omega has 5 entries summing to
/// -6d, extended 5 entries summing to d, tangent 4 entries summing to d.
SplittingType make_splitting(SplittingType::Kind kind, std::vector<int> entries, int curve_degree);

std::string to_string(const SplittingType& t);

/// e_i = -d - g_i over the plain-kernel generator degrees g_i.
SplittingType omega_splitting(const CurveMap& c);

/// f_i = d - h_i over the extended-kernel generator degrees h_i, computed
/// directly from the extended kernel (not through the Frobenius lift).
SplittingType extended_splitting(const CurveMap& c);

/// Splitting type of the quotient of the extended kernel by the section
/// (G_0, ..., G_5). Computed exactly through the dual: writing the section
/// as sum p_i y_i over an extended-kernel basis, the quotient's reflexive
/// hull is free with type read off the kernel of (w_i) -> sum p_i w_i,
/// together with one entry f_i for every basis element the section misses.
SplittingType tangent_splitting(const CurveMap& c);

/// One-pass bundle of everything the classifier needs. The extended type is
/// derived from the Frobenius lift here; `extended_splitting` stays the
/// independent direct route.
struct CurveKernels {
    GradedKernelBasis omega;
    GradedKernelBasis extended; // Frobenius lift of `omega`
    SplittingType omega_type, extended_type, tangent_type;
    std::vector<int> omega_dims; // kernel dimensions at plain degrees 0, 1, 2
};
CurveKernels compute_kernels(const CurveMap& c);

} // namespace fermat
