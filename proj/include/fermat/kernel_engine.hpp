#pragma once

#include <vector>

#include "fermat/errors.hpp"
#include "fermat/forms.hpp"
#include "fermat/gf2poly.hpp"
#include "fermat/linalg.hpp"

namespace fermat::detail {

// Minimal-generator extraction for kernels of graded maps
//
//     (A_0, ..., A_{n-1})  |->  sum_i A_i H_i
//
// where H_i is homogeneous of declared degree w_i (a "weight"; targets may
// be zero forms). At output level u the multiplier A_i is homogeneous of
// degree u - w_i, absent when that is negative. Kernels of such maps over
// k[S,T] are graded free of rank n-1 whenever the targets are not all zero.
//
// Generators are extracted level by level: the new generators at level u
// form a complement of S*K_{u-1} + T*K_{u-1} inside K_u, where K is the
// kernel. Multiplier coordinates are flattened coordinate-major with
// ascending T-exponent inside each block, and pivots scan that order, so
// the extracted vectors are deterministic.
//
// The engine is written against two interchangeable backends: exact dense
// rows of field elements, and word-packed GF(2) rows for the search paths.

struct GenLA {
    int ext;

    using Form = BinaryForm;
    using Vec = linalg::FVec;
    using Matrix = linalg::FMatrix;
    using Reducer = linalg::FReducer;

    Matrix matrix(int rows, int cols) const { return Matrix(rows, cols, ext); }
    Reducer reducer() const { return Reducer(ext); }
    Vec zero_vec(int n) const { return Vec(static_cast<size_t>(n), gf_zero(ext)); }

    static int deg(const Form& f) { return f.degree(); }
    static bool is_zero(const Form& f) { return f.is_zero(); }

    static void add_column(Matrix& m, int col, const Form& f, int row_off) {
        for (int k = 0; k <= f.degree(); ++k) {
            FieldElement c = f.coeff(k);
            if (!c.is_zero()) m.add_to(row_off + k, col, c);
        }
    }
    static std::vector<Vec> null_space(const Matrix& m) { return m.null_space(); }

    static void place(Vec& v, int pos, const Form& f, int t_shift) {
        for (int k = 0; k <= f.degree(); ++k)
            v[static_cast<size_t>(pos + t_shift + k)] =
                add(v[static_cast<size_t>(pos + t_shift + k)], f.coeff(k));
    }
    Form extract(const Vec& v, int pos, int count) const {
        std::vector<FieldElement> coeffs(v.begin() + pos, v.begin() + pos + count);
        return Form(std::move(coeffs));
    }
};

struct BitLA {
    struct Form {
        uint64_t bits = 0;
        int degree = 0;
    };
    using Vec = linalg::BitVec;
    using Matrix = linalg::BitMatrix;
    using Reducer = linalg::BitReducer;

    Matrix matrix(int rows, int cols) const { return Matrix(rows, cols); }
    Reducer reducer() const { return Reducer(); }
    Vec zero_vec(int n) const { return Vec(n); }

    static int deg(const Form& f) { return f.degree; }
    static bool is_zero(const Form& f) { return f.bits == 0; }

    static void add_column(Matrix& m, int col, const Form& f, int row_off) {
        for (uint64_t b = f.bits; b;) {
            int k = std::countr_zero(b);
            m.set(row_off + k, col); // entries are filled once, never summed
            b &= b - 1;
        }
    }
    static std::vector<Vec> null_space(const Matrix& m) { return m.null_space(); }

    static void place(Vec& v, int pos, const Form& f, int t_shift) {
        for (uint64_t b = f.bits; b;) {
            int k = std::countr_zero(b);
            v.set(pos + t_shift + k);
            b &= b - 1;
        }
    }
    Form extract(const Vec& v, int pos, int count) const {
        Form f;
        f.degree = count - 1;
        for (int k = 0; k < count; ++k)
            if (v.get(pos + k)) f.bits |= uint64_t(1) << k;
        return f;
    }
};

template <class LA>
class KernelEngine {
  public:
    using Form = typename LA::Form;
    using Vec = typename LA::Vec;
    using Matrix = typename LA::Matrix;

    struct Gen {
        int level;               // output degree of the relation it satisfies
        std::vector<Form> coords; // one per coordinate; zero where inactive
    };

    KernelEngine(LA la, std::vector<Form> targets, std::vector<int> weights)
        : la_(la), targets_(std::move(targets)), weights_(std::move(weights)) {
        if (targets_.size() != weights_.size() || targets_.empty())
            throw Error(Errc::internal_error, "kernel engine: malformed problem");
        min_weight_ = weights_[0];
        for (size_t i = 0; i < targets_.size(); ++i) {
            if (!LA::is_zero(targets_[i]) && LA::deg(targets_[i]) != weights_[i])
                throw Error(Errc::internal_error, "kernel engine: target degree != weight");
            if (weights_[i] < 0)
                throw Error(Errc::internal_error, "kernel engine: negative weight");
            min_weight_ = std::min(min_weight_, weights_[i]);
        }
    }

    struct Layout {
        int cols = 0;
        std::vector<int> offset; // -1 where the coordinate is inactive
        std::vector<int> mdeg;   // multiplier degree per coordinate
    };

    Layout layout(int level) const {
        Layout l;
        l.offset.resize(targets_.size());
        l.mdeg.resize(targets_.size());
        for (size_t i = 0; i < targets_.size(); ++i) {
            int m = level - weights_[i];
            l.mdeg[i] = m;
            if (m < 0) {
                l.offset[i] = -1;
            } else {
                l.offset[i] = l.cols;
                l.cols += m + 1;
            }
        }
        return l;
    }

    Matrix relation_matrix(int level) const {
        Layout l = layout(level);
        Matrix a = la_.matrix(level + 1, l.cols);
        for (size_t i = 0; i < targets_.size(); ++i) {
            if (l.offset[i] < 0 || LA::is_zero(targets_[i])) continue;
            for (int j = 0; j <= l.mdeg[i]; ++j)
                LA::add_column(a, l.offset[i] + j, targets_[i], j);
        }
        return a;
    }

    /// Dimension of the kernel at output level u.
    int dimension(int level) const {
        if (level < min_weight_) return 0;
        Layout l = layout(level);
        return l.cols - relation_matrix(level).rank();
    }

    std::vector<Gen> minimal_generators(size_t expected_rank, int level_cap) {
        std::vector<Gen> gens;
        int confirmations = 0;
        for (int level = std::max(min_weight_, 0); level <= level_cap; ++level) {
            Layout l = layout(level);
            Matrix a = relation_matrix(level);
            std::vector<Vec> kernel = LA::null_space(a);
            const int dim = static_cast<int>(kernel.size());

            auto red = la_.reducer();
            int old_dim = 0;
            for (const Gen& g : gens) {
                const int extra = level - g.level;
                for (int t_shift = 0; t_shift <= extra; ++t_shift) {
                    if (!red.insert(embed(g, t_shift, l)))
                        throw Error(Errc::internal_error,
                                    "kernel engine: dependent generator multiples");
                    ++old_dim;
                }
            }
            if (dim < old_dim)
                throw Error(Errc::internal_error, "kernel engine: span exceeds kernel");

            int new_here = 0;
            for (Vec& v : kernel) {
                if (!red.insert(v)) continue;
                Gen g;
                g.level = level;
                g.coords.reserve(targets_.size());
                for (size_t i = 0; i < targets_.size(); ++i) {
                    if (l.offset[i] < 0)
                        g.coords.push_back(Form{}); // inactive coordinate, zero
                    else
                        g.coords.push_back(la_.extract(v, l.offset[i], l.mdeg[i] + 1));
                }
                gens.push_back(std::move(g));
                ++new_here;
            }
            if (gens.size() > expected_rank)
                throw Error(Errc::generator_overflow,
                            "kernel has more than " + std::to_string(expected_rank) +
                                " minimal generators; the defining map is degenerate");
            if (gens.size() == expected_rank) {
                if (new_here == 0) {
                    if (++confirmations == 2) return gens;
                } else {
                    confirmations = 0;
                }
            }
        }
        throw Error(Errc::bound_exceeded,
                    "generator search exceeded level cap " + std::to_string(level_cap));
    }

  private:
    Vec embed(const Gen& g, int t_shift, const Layout& l) const {
        Vec v = la_.zero_vec(l.cols);
        for (size_t i = 0; i < g.coords.size(); ++i) {
            if (LA::is_zero(g.coords[i])) continue;
            if (l.offset[i] < 0)
                throw Error(Errc::internal_error, "kernel engine: generator uses inactive slot");
            LA::place(v, l.offset[i], g.coords[i], t_shift);
        }
        return v;
    }

    LA la_;
    std::vector<Form> targets_;
    std::vector<int> weights_;
    int min_weight_;
};

} // namespace fermat::detail
