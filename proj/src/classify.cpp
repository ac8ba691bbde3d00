#include "fermat/classify.hpp"

#include <algorithm>

namespace fermat {

namespace {

bool is_case_4b(const SplittingType& extended) {
    int zeros = 0, positive = 0;
    for (int f : extended.entries) {
        if (f == 0) ++zeros;
        if (f > 0) ++positive;
    }
    return zeros == 1 && positive == 4;
}

} // namespace

ClassificationReport report_from_kernels(const CurveMap& c, const CurveKernels& k) {
    ClassificationReport r;
    r.degree = c.degree();
    r.ext = c.ext();
    r.omega = k.omega_type;
    r.extended = k.extended_type;
    r.tangent = k.tangent_type;
    r.omega_dims = k.omega_dims;
    r.free_curve = r.extended.min() >= 0;
    r.very_free = r.tangent.min() >= 1;
    r.case_4b = is_case_4b(r.extended);
    return r;
}

ClassificationReport classify(const CurveMap& c) {
    return report_from_kernels(c, compute_kernels(c));
}

DegreeVerdict admissible_types(int d) {
    if (d < 1) throw Error(Errc::wrong_degree, "degree must be >= 1");
    DegreeVerdict v;
    v.degree = d;
    // Enumerate nondecreasing f-tuples: entries congruent to d mod 4,
    // nonnegative, summing to d; e = (f - 5d) / 4.
    const int r = d % 4;
    std::vector<int> f(5);
    auto emit = [&](bool very) {
        std::vector<int> e(5);
        for (int i = 0; i < 5; ++i) e[static_cast<size_t>(i)] = (f[static_cast<size_t>(i)] - 5 * d) / 4;
        (very ? v.very_free_e_types : v.free_e_types).push_back(std::move(e));
    };
    auto rec = [&](auto&& self, int idx, int lo, int left) -> void {
        if (idx == 5) {
            if (left == 0) {
                emit(false);
                bool very = std::all_of(f.begin(), f.end(), [](int x) { return x > 0; });
                if (very) emit(true);
            }
            return;
        }
        for (int val = lo; val <= left; val += 4) {
            f[static_cast<size_t>(idx)] = val;
            self(self, idx + 1, val, left - val);
        }
    };
    rec(rec, 0, r == 0 ? 0 : r, d);
    return v;
}

namespace {

linalg::FMatrix frobenius_matrix(const linalg::FMatrix& m) {
    linalg::FMatrix fm(m.rows(), m.cols(), m.ext());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) fm.set(r, c, pow4(m.get(r, c)));
    return fm;
}

linalg::FVec column_of(const linalg::FMatrix& m, int c) {
    linalg::FVec v;
    for (int r = 0; r < m.rows(); ++r) v.push_back(m.get(r, c));
    return v;
}

// row vector times matrix
linalg::FVec vec_mat(const linalg::FVec& v, const linalg::FMatrix& m) {
    linalg::FVec out(static_cast<size_t>(m.cols()), gf_zero(m.ext()));
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            out[static_cast<size_t>(c)] =
                add(out[static_cast<size_t>(c)], mul(v[static_cast<size_t>(r)], m.get(r, c)));
    return out;
}

bool all_zero(const linalg::FVec& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x.is_zero(); });
}

bool independent_pair(const linalg::FVec& a, const linalg::FVec& b, int ext) {
    linalg::FReducer red(ext);
    return red.insert(a) && red.insert(b);
}

} // namespace

RefutationTrace refute_low_degree(const CurveMap& c) {
    const int d = c.degree();
    if (d != 4 && d != 5)
        throw Error(Errc::wrong_degree,
                    "refutation applies to degrees 4 and 5, got " + std::to_string(d));

    RefutationTrace t;
    t.degree = d;
    t.max_rank = std::min(6, d + 1);
    // A free curve would have the unique admissible type; its plain-kernel
    // generator degrees leave the degree-0 kernel of dimension 6 - max_rank,
    // forcing the coefficient matrix to maximal rank.
    DegreeVerdict verdict = admissible_types(d);
    const auto& forced = verdict.free_e_types;
    if (forced.size() != 1)
        throw Error(Errc::internal_error, "expected a unique admissible type");
    t.forced_free_type = forced.front();
    t.required_rank_if_free = t.max_rank;

    linalg::FMatrix m = coefficient_matrix(c);
    t.rank = m.rank();
    if (t.rank < t.max_rank) {
        t.path = RefutationTrace::Path::rank_deficient;
        t.concludes_not_free = true;
        return t;
    }

    linalg::FMatrix fm = frobenius_matrix(m);
    t.frobenius_rank = fm.rank();
    if (d == 4) {
        t.path = RefutationTrace::Path::frobenius_kernel;
        linalg::FVec c1 = column_of(m, 1), c3 = column_of(m, 3);
        t.products_vanish = all_zero(vec_mat(c1, fm)) && all_zero(vec_mat(c3, fm));
        t.witnesses_independent = independent_pair(c1, c3, c.ext());
        // Two independent left-kernel vectors force corank >= 2; freeness
        // would force frobenius rank 5. Both cannot hold.
        t.concludes_not_free =
            t.products_vanish && t.witnesses_independent && t.frobenius_rank <= t.max_rank - 2;
    } else {
        t.path = RefutationTrace::Path::frobenius_invertible;
        linalg::FVec c2 = column_of(m, 2);
        t.products_vanish = all_zero(vec_mat(c2, fm));
        t.witnesses_independent = !all_zero(c2);
        t.concludes_not_free =
            t.products_vanish && t.witnesses_independent && t.frobenius_rank <= t.max_rank - 1;
    }
    if (!t.concludes_not_free)
        throw Error(Errc::trace_inconsistent,
                    "maximal-rank refutation steps are mutually inconsistent on this curve");
    return t;
}

void validate_trace(const CurveMap& c, const RefutationTrace& t) {
    auto check = [](bool ok, const std::string& what) {
        if (!ok) throw Error(Errc::trace_inconsistent, "trace replay failed: " + what);
    };
    check(t.degree == c.degree(), "degree");
    check(t.degree == 4 || t.degree == 5, "refutation degree");
    check(t.max_rank == std::min(6, t.degree + 1), "maximal rank");
    check(t.required_rank_if_free == t.max_rank, "required rank under freeness");

    linalg::FMatrix m = coefficient_matrix(c);
    check(m.rank() == t.rank, "coefficient matrix rank");
    if (t.path == RefutationTrace::Path::rank_deficient) {
        check(t.rank < t.max_rank, "rank deficiency");
    } else {
        check(t.rank == t.max_rank, "maximal rank on a Frobenius path");
        linalg::FMatrix fm = frobenius_matrix(m);
        check(fm.rank() == t.frobenius_rank, "fourth-power matrix rank");
        if (t.path == RefutationTrace::Path::frobenius_kernel) {
            check(t.degree == 4, "path/degree");
            linalg::FVec c1 = column_of(m, 1), c3 = column_of(m, 3);
            check(t.products_vanish == (all_zero(vec_mat(c1, fm)) && all_zero(vec_mat(c3, fm))),
                  "column products");
            check(t.witnesses_independent == independent_pair(c1, c3, c.ext()), "independence");
            check(t.products_vanish && t.witnesses_independent, "witness properties");
            check(t.frobenius_rank <= t.max_rank - 2, "corank bound");
        } else {
            check(t.degree == 5, "path/degree");
            linalg::FVec c2 = column_of(m, 2);
            check(t.products_vanish == all_zero(vec_mat(c2, fm)), "column product");
            check(t.witnesses_independent == !all_zero(c2), "nonzero witness");
            check(t.products_vanish && t.witnesses_independent, "witness properties");
            check(t.frobenius_rank <= t.max_rank - 1, "singularity bound");
        }
    }
    check(t.concludes_not_free, "conclusion");
    check(!classify(c).free_curve, "classifier agreement");
}

void audit_report(const ClassificationReport& r) {
    DegreeVerdict v = admissible_types(r.degree);
    if (r.free_curve && (r.degree == 4 || r.degree == 5))
        throw CounterexampleError("a free curve of degree " + std::to_string(r.degree) +
                                  " would contradict the degree-4/5 nonexistence results");
    if (r.free_curve && !v.free_possible())
        throw CounterexampleError("a free curve of degree " + std::to_string(r.degree) +
                                  " is excluded by the degree constraints");
    if (r.very_free && !v.very_free_possible())
        throw CounterexampleError("a very free curve of degree " + std::to_string(r.degree) +
                                  " is excluded by the degree constraints");
    if (r.very_free && r.case_4b)
        throw CounterexampleError(
            "very free curve whose extended type has exactly one zero entry: " +
            to_string(r.extended) + " — this settles an open case; report it");
}

} // namespace fermat
