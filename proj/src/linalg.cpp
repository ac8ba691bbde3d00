#include "fermat/linalg.hpp"

#include <bit>

#include "fermat/errors.hpp"

namespace fermat::linalg {

int BitVec::lowest_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
}

namespace {

// Row echelon over a copy; returns pivot columns (ascending) and leaves the
// reduced rows in `rows` (pivot row k corresponds to pivot_cols[k]).
std::vector<int> bit_rref(std::vector<BitVec>& rows, int cols) {
    std::vector<int> pivot_cols;
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i].xor_assign(rows[r]);
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

int BitMatrix::rank() const {
    std::vector<BitVec> rows = rows_;
    return static_cast<int>(bit_rref(rows, cols_).size());
}

std::vector<BitVec> BitMatrix::null_space() const {
    std::vector<BitVec> rows = rows_;
    std::vector<int> pivots = bit_rref(rows, cols_);
    std::vector<BitVec> basis;
    size_t next_pivot = 0;
    for (int c = 0; c < cols_; ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        BitVec v(cols_);
        v.set(c);
        for (size_t k = 0; k < pivots.size(); ++k)
            if (rows[k].get(c)) v.set(pivots[k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool BitReducer::insert(BitVec v) {
    for (size_t k = 0; k < rows_.size(); ++k)
        if (v.get(pivots_[k])) v.xor_assign(rows_[k]);
    int p = v.lowest_set();
    if (p < 0) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

// --------------------------------------------------------------- generic --

namespace {

struct FRref {
    std::vector<FVec> rows;
    std::vector<int> pivot_cols;
};

FRref f_rref(const FMatrix& m) {
    FRref out;
    out.rows.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        FVec row(static_cast<size_t>(m.cols()), gf_zero(m.ext()));
        for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m.get(r, c);
        out.rows.push_back(std::move(row));
    }
    size_t r = 0;
    for (int c = 0; c < m.cols() && r < out.rows.size(); ++c) {
        size_t sel = r;
        while (sel < out.rows.size() && out.rows[sel][static_cast<size_t>(c)].is_zero()) ++sel;
        if (sel == out.rows.size()) continue;
        std::swap(out.rows[r], out.rows[sel]);
        FieldElement piv_inv = inv(out.rows[r][static_cast<size_t>(c)]);
        for (auto& x : out.rows[r]) x = mul(x, piv_inv);
        for (size_t i = 0; i < out.rows.size(); ++i) {
            if (i == r) continue;
            FieldElement f = out.rows[i][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (size_t j = static_cast<size_t>(c); j < out.rows[i].size(); ++j)
                out.rows[i][j] = add(out.rows[i][j], mul(f, out.rows[r][j]));
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

} // namespace

int FMatrix::rank() const { return static_cast<int>(f_rref(*this).pivot_cols.size()); }

std::vector<FVec> FMatrix::null_space() const {
    FRref rr = f_rref(*this);
    std::vector<FVec> basis;
    size_t next_pivot = 0;
    for (int c = 0; c < cols_; ++c) {
        if (next_pivot < rr.pivot_cols.size() && rr.pivot_cols[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        FVec v(static_cast<size_t>(cols_), gf_zero(ext_));
        v[static_cast<size_t>(c)] = gf_one(ext_);
        // char 2: the negated RREF entry is the entry itself
        for (size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[static_cast<size_t>(rr.pivot_cols[k])] = rr.rows[k][static_cast<size_t>(c)];
        basis.push_back(std::move(v));
    }
    return basis;
}

FVec FMatrix::solve_unique(const FVec& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw Error(Errc::internal_error, "solve: right-hand side has the wrong length");
    FMatrix aug(rows_, cols_ + 1, ext_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_, b[static_cast<size_t>(r)]);
    }
    FRref rr = f_rref(aug);
    FVec x(static_cast<size_t>(cols_), gf_zero(ext_));
    size_t n_pivots = rr.pivot_cols.size();
    for (size_t k = 0; k < n_pivots; ++k) {
        if (rr.pivot_cols[k] == cols_)
            throw Error(Errc::internal_error, "solve: inconsistent linear system");
        x[static_cast<size_t>(rr.pivot_cols[k])] = rr.rows[k][static_cast<size_t>(cols_)];
    }
    if (static_cast<int>(n_pivots) != cols_)
        throw Error(Errc::internal_error, "solve: system is underdetermined");
    return x;
}

bool FReducer::insert(FVec v) {
    for (size_t k = 0; k < rows_.size(); ++k) {
        FieldElement f = v[static_cast<size_t>(pivots_[k])];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = add(v[j], mul(f, rows_[k][j]));
    }
    int p = -1;
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) {
            p = static_cast<int>(j);
            break;
        }
    if (p < 0) return false;
    FieldElement piv_inv = inv(v[static_cast<size_t>(p)]);
    for (auto& x : v) x = mul(x, piv_inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

} // namespace fermat::linalg
