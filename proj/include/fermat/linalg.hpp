#pragma once

#include <cstdint>
#include <vector>

#include "fermat/field.hpp"

namespace fermat::linalg {

// Dense exact linear algebra over GF(2^e), with a word-packed GF(2)
// specialization. Pivots are always chosen scanning columns in ascending
// order, so ranks, null-space bases and solutions are deterministic.

// ---------------------------------------------------------------- packed --

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int width) : width_(width), w_(static_cast<size_t>((width + 63) / 64), 0) {}

    int width() const { return width_; }
    bool get(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
    void xor_assign(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }
    int lowest_set() const; // -1 if zero

  private:
    int width_ = 0;
    std::vector<uint64_t> w_;
};

class BitMatrix {
  public:
    BitMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<size_t>(rows), BitVec(cols)) {}

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return rows_[static_cast<size_t>(r)].get(c); }
    void set(int r, int c) { rows_[static_cast<size_t>(r)].set(c); }
    BitVec& row(int r) { return rows_[static_cast<size_t>(r)]; }

    int rank() const;
    /// Basis of {x : A x = 0}, one vector per free column, ascending.
    std::vector<BitVec> null_space() const;

  private:
    int cols_;
    std::vector<BitVec> rows_;
};

/// Incremental independence tracking: insert() reduces against the rows kept
/// so far and keeps the remainder when nonzero.
class BitReducer {
  public:
    bool insert(BitVec v);
    int dim() const { return static_cast<int>(rows_.size()); }

  private:
    std::vector<BitVec> rows_; // each with a distinct lowest_set pivot
    std::vector<int> pivots_;
};

// --------------------------------------------------------------- generic --

using FVec = std::vector<FieldElement>;

class FMatrix {
  public:
    FMatrix(int rows, int cols, int ext)
        : rows_(rows), cols_(cols), ext_(ext),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), gf_zero(ext)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int ext() const { return ext_; }
    FieldElement get(int r, int c) const { return a_[idx(r, c)]; }
    void set(int r, int c, FieldElement v) { a_[idx(r, c)] = v; }
    void add_to(int r, int c, FieldElement v) { a_[idx(r, c)] = add(a_[idx(r, c)], v); }

    int rank() const;
    std::vector<FVec> null_space() const;

    /// Unique solution of A x = b; throws if the system is inconsistent or
    /// underdetermined.
    FVec solve_unique(const FVec& b) const;

  private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }
    int rows_, cols_, ext_;
    std::vector<FieldElement> a_;
};

class FReducer {
  public:
    explicit FReducer(int ext) : ext_(ext) {}
    bool insert(FVec v);
    int dim() const { return static_cast<int>(rows_.size()); }

  private:
    int ext_;
    std::vector<FVec> rows_;
    std::vector<int> pivots_;
};

} // namespace fermat::linalg
