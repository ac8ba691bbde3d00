#pragma once

#include <optional>

#include "fermat/graded.hpp"

namespace fermat {

/// Verdicts for one curve. `free_curve` holds iff every extended entry is
/// >= 0; `very_free` iff every tangent entry is >= 1; `case_4b` marks an
/// extended type with exactly one zero entry and the rest positive (a very
/// free curve with that shape would settle an open case and is surfaced
/// through audit_report).
struct ClassificationReport {
    int degree = 0;
    int ext = 1;
    SplittingType omega, extended, tangent;
    std::vector<int> omega_dims; // kernel dimensions at plain degrees 0, 1, 2
    bool free_curve = false;
    bool very_free = false;
    bool case_4b = false;
};

ClassificationReport classify(const CurveMap& c);

/// Report assembled from precomputed kernels (used by the packed pipeline
/// and wherever the kernels are needed alongside the verdicts).
ClassificationReport report_from_kernels(const CurveMap& c, const CurveKernels& k);

/// Degree-level constraints: every admissible type satisfies
/// sum e_i = -6d together with 4 e_i + 5d >= 0 (free) or > 0 (very free);
/// equivalently the f-entries are >= 0 (resp. > 0), congruent to d mod 4
/// and sum to d.
struct DegreeVerdict {
    int degree = 0;
    std::vector<std::vector<int>> free_e_types;      // ascending 5-tuples
    std::vector<std::vector<int>> very_free_e_types;
    bool free_possible() const { return !free_e_types.empty(); }
    bool very_free_possible() const { return !very_free_e_types.empty(); }
};

DegreeVerdict admissible_types(int d);

/// Machine-checkable trace showing a degree-4 or degree-5 curve is not free.
///
/// rank_deficient: the coefficient matrix has non-maximal rank, while the
/// unique admissible free type would force maximal rank.
///
/// frobenius_kernel (degree 4, maximal rank): columns 1 and 3 of the matrix
/// are independent left-kernel vectors of the entrywise fourth-power matrix,
/// so that matrix has corank >= 2, while freeness would force rank 5.
///
/// frobenius_invertible (degree 5, maximal rank): column 2 is a nonzero
/// left-kernel vector of the entrywise fourth-power matrix, while freeness
/// would force that matrix invertible.
struct RefutationTrace {
    enum class Path { rank_deficient, frobenius_kernel, frobenius_invertible };
    int degree = 0;
    Path path = Path::rank_deficient;
    int rank = 0;
    int max_rank = 0;
    int required_rank_if_free = 0;
    std::vector<int> forced_free_type;    // the unique admissible free e-type
    int frobenius_rank = -1;              // only on the maximal-rank paths
    bool products_vanish = false;
    bool witnesses_independent = false;
    bool concludes_not_free = false;
};

RefutationTrace refute_low_degree(const CurveMap& c); // degree 4 or 5 only

/// Replays every recorded step against the curve; throws trace_inconsistent
/// on any divergence, and cross-checks that classify() agrees the curve is
/// not free.
void validate_trace(const CurveMap& c, const RefutationTrace& t);

/// Throws CounterexampleError when a verdict contradicts the bundled
/// nonexistence facts: free in a degree whose admissible free list is empty
/// or in degrees 4/5, very free in a degree whose very-free list is empty,
/// or very free with case_4b set.
void audit_report(const ClassificationReport& r);

} // namespace fermat
