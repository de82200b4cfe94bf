// Sparse exact linear algebra: matrices over an exact field, fraction-free
// elimination with Markowitz-style pivoting, rank / kernel / homology counts.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cychom/field.hpp"

namespace cychom {

// Sparse vector: sorted (index, value) pairs, no explicit zeros.
struct SparseVec {
    std::vector<std::pair<std::int64_t, Scalar>> entries;

    bool is_zero() const { return entries.empty(); }
    void push(std::int64_t i, Scalar v) { entries.emplace_back(i, std::move(v)); }
    // Sorts by index, merges duplicates, drops zeros.
    void normalize();
    SparseVec scaled(const Scalar& s) const;
    bool operator==(const SparseVec&) const = default;
};

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_sub(const SparseVec& a, const SparseVec& b);

// Column-major sparse matrix with entries in one field.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(FieldSpec fs, std::int64_t rows, std::int64_t cols)
        : fs_(fs), rows_(rows), cols_(cols), col_(static_cast<std::size_t>(cols)) {}

    const FieldSpec& field() const { return fs_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    // Accumulates v at (r, c); call normalize() once after building.
    void add_entry(std::int64_t r, std::int64_t c, Scalar v);
    void set_column(std::int64_t c, SparseVec col);
    const SparseVec& column(std::int64_t c) const { return col_[static_cast<std::size_t>(c)]; }
    void normalize();

    std::int64_t nnz() const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const;

    static SparseMatrix identity(const FieldSpec& fs, std::int64_t n);
    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& s) const;
    SparseVec apply(const SparseVec& x) const;

    // Columns of a followed by columns of b (same row count and field).
    static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

private:
    FieldSpec fs_{};
    std::int64_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec> col_;
};

struct RankKernel {
    std::int64_t rank = 0;
    std::vector<SparseVec> kernel; // basis of { v : Mv = 0 }
};

// Rank by fraction-free (Bareiss) elimination with sparsity-aware pivoting.
std::int64_t sparse_rank(const SparseMatrix& m);

// Rank plus an exact kernel basis.
RankKernel sparse_rank_kernel(const SparseMatrix& m);

// rank([A|B]) without materializing the concatenation twice.
std::int64_t rank_augmented(const SparseMatrix& a, const SparseMatrix& b);

// rank of [cols | B] where cols is a list of sparse vectors in B's row space.
std::int64_t rank_augmented(const std::vector<SparseVec>& cols, std::int64_t rows,
                            const SparseMatrix& b);

// dim ker(d_out) - rank(d_in) for a complex position  X --d_in--> C --d_out--> Y;
// throws not_a_complex unless d_out * d_in == 0 exactly.
std::int64_t homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

} // namespace cychom
