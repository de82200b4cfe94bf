#include "cychom/sparse.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cychom {

// ---------------------------------------------------------------------------
// SparseVec

void SparseVec::normalize() {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::int64_t, Scalar>> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!e.second.is_zero()) {
            out.push_back(std::move(e));
        }
    }
    entries = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& s) const {
    SparseVec r;
    if (s.is_zero()) return r;
    r.entries.reserve(entries.size());
    for (const auto& [i, v] : entries) r.entries.emplace_back(i, v * s);
    return r;
}

namespace {

SparseVec merge(const SparseVec& a, const SparseVec& b, bool subtract) {
    SparseVec r;
    r.entries.reserve(a.entries.size() + b.entries.size());
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j >= b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            r.entries.push_back(a.entries[i++]);
        } else if (i >= a.entries.size() || b.entries[j].first < a.entries[i].first) {
            r.entries.push_back(b.entries[j]);
            if (subtract) r.entries.back().second = -r.entries.back().second;
            ++j;
        } else {
            Scalar v = subtract ? a.entries[i].second - b.entries[j].second
                                : a.entries[i].second + b.entries[j].second;
            if (!v.is_zero()) r.entries.emplace_back(a.entries[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return merge(a, b, false); }
SparseVec sv_sub(const SparseVec& a, const SparseVec& b) { return merge(a, b, true); }

// ---------------------------------------------------------------------------
// SparseMatrix

void SparseMatrix::add_entry(std::int64_t r, std::int64_t c, Scalar v) {
    if (v.is_zero()) return;
    col_[static_cast<std::size_t>(c)].push(r, std::move(v));
}

void SparseMatrix::set_column(std::int64_t c, SparseVec col) {
    col_[static_cast<std::size_t>(c)] = std::move(col);
}

void SparseMatrix::normalize() {
    for (auto& c : col_) c.normalize();
}

std::int64_t SparseMatrix::nnz() const {
    std::int64_t n = 0;
    for (const auto& c : col_) n += static_cast<std::int64_t>(c.entries.size());
    return n;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : col_)
        if (!c.entries.empty()) return false;
    return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return fs_ == o.fs_ && rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
}

SparseMatrix SparseMatrix::identity(const FieldSpec& fs, std::int64_t n) {
    SparseMatrix m(fs, n, n);
    for (std::int64_t i = 0; i < n; ++i) m.add_entry(i, i, Scalar::one(fs));
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(fs_, cols_, rows_);
    for (std::int64_t c = 0; c < cols_; ++c)
        for (const auto& [r, v] : col_[static_cast<std::size_t>(c)].entries)
            t.add_entry(c, r, v);
    t.normalize();
    return t;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    std::map<std::int64_t, Scalar> acc;
    for (const auto& [k, v] : x.entries) {
        for (const auto& [r, a] : col_[static_cast<std::size_t>(k)].entries) {
            auto it = acc.find(r);
            if (it == acc.end()) acc.emplace(r, a * v);
            else it->second += a * v;
        }
    }
    SparseVec out;
    for (auto& [r, v] : acc)
        if (!v.is_zero()) out.entries.emplace_back(r, std::move(v));
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (!(fs_ == o.fs_)) throw field_mismatch("matrix product");
    if (cols_ != o.rows_) throw error("matrix product: shape mismatch");
    SparseMatrix r(fs_, rows_, o.cols_);
    for (std::int64_t j = 0; j < o.cols_; ++j)
        r.set_column(j, apply(o.column(j)));
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (!(fs_ == o.fs_)) throw field_mismatch("matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix sum: shape mismatch");
    SparseMatrix r(fs_, rows_, cols_);
    for (std::int64_t j = 0; j < cols_; ++j)
        r.set_column(j, sv_add(column(j), o.column(j)));
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (!(fs_ == o.fs_)) throw field_mismatch("matrix difference");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix difference: shape mismatch");
    SparseMatrix r(fs_, rows_, cols_);
    for (std::int64_t j = 0; j < cols_; ++j)
        r.set_column(j, sv_sub(column(j), o.column(j)));
    return r;
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
    SparseMatrix r(fs_, rows_, cols_);
    for (std::int64_t j = 0; j < cols_; ++j) r.set_column(j, column(j).scaled(s));
    return r;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (!(a.field() == b.field())) throw field_mismatch("hstack");
    if (a.rows() != b.rows()) throw error("hstack: row mismatch");
    SparseMatrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::int64_t j = 0; j < a.cols(); ++j) r.set_column(j, a.column(j));
    for (std::int64_t j = 0; j < b.cols(); ++j) r.set_column(a.cols() + j, b.column(j));
    return r;
}

// ---------------------------------------------------------------------------
// Elimination.  Works on a row-major copy.  Fraction-free single-step updates
// (Bareiss): row' <- (pivot * row' - row'[c] * pivot_row) / previous_pivot,
// with pivots chosen to keep rows short (Markowitz-flavoured selection).

namespace {

struct Eliminator {
    using Row = std::vector<std::pair<std::int64_t, Scalar>>; // sorted by col

    FieldSpec fs;
    std::vector<Row> rowdat;
    std::vector<std::vector<std::int32_t>> col_rows; // col -> row ids (lazily pruned)
    std::vector<std::int64_t> col_count;
    std::vector<bool> row_done;
    std::vector<std::pair<std::int32_t, std::int64_t>> pivots; // (row, col) in order
    std::int64_t ncols = 0;

    explicit Eliminator(const SparseMatrix& m) : fs(m.field()), ncols(m.cols()) {
        std::vector<Row> rows(static_cast<std::size_t>(m.rows()));
        for (std::int64_t c = 0; c < m.cols(); ++c)
            for (const auto& [r, v] : m.column(c).entries)
                rows[static_cast<std::size_t>(r)].emplace_back(c, v);
        // drop empty rows entirely; they never matter
        for (auto& r : rows)
            if (!r.empty()) rowdat.push_back(std::move(r));
        col_rows.assign(static_cast<std::size_t>(ncols), {});
        col_count.assign(static_cast<std::size_t>(ncols), 0);
        for (std::size_t i = 0; i < rowdat.size(); ++i) {
            std::sort(rowdat[i].begin(), rowdat[i].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [c, v] : rowdat[i]) {
                col_rows[static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(i));
                ++col_count[static_cast<std::size_t>(c)];
            }
        }
        row_done.assign(rowdat.size(), false);
    }

    static const Scalar* find(const Row& row, std::int64_t c) {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::int64_t col) { return e.first < col; });
        if (it != row.end() && it->first == c) return &it->second;
        return nullptr;
    }

    void run() {
        // lazy min-heap on (row length, row id)
        using QE = std::pair<std::int64_t, std::int32_t>;
        std::priority_queue<QE, std::vector<QE>, std::greater<QE>> q;
        for (std::size_t i = 0; i < rowdat.size(); ++i)
            q.emplace(static_cast<std::int64_t>(rowdat[i].size()), static_cast<std::int32_t>(i));

        Scalar prev_pivot = Scalar::one(fs);
        while (!q.empty()) {
            auto [len, ri] = q.top();
            q.pop();
            if (row_done[ri] || rowdat[ri].empty()) continue;
            if (static_cast<std::int64_t>(rowdat[ri].size()) != len) {
                q.emplace(static_cast<std::int64_t>(rowdat[ri].size()), ri);
                continue;
            }
            // choose the entry in the sparsest column
            std::int64_t pc = -1, best = -1;
            for (const auto& [c, v] : rowdat[ri]) {
                std::int64_t cc = col_count[static_cast<std::size_t>(c)];
                if (best < 0 || cc < best) {
                    best = cc;
                    pc = c;
                }
            }
            const Scalar pv = *find(rowdat[ri], pc);
            pivots.emplace_back(ri, pc);
            row_done[ri] = true;
            for (const auto& [c, v] : rowdat[ri]) --col_count[static_cast<std::size_t>(c)];

            auto& touch = col_rows[static_cast<std::size_t>(pc)];
            for (std::int32_t rj : touch) {
                if (rj == ri || row_done[rj]) continue;
                const Scalar* f = find(rowdat[rj], pc);
                if (!f) continue; // stale listing (entry cancelled earlier)
                eliminate(rj, rowdat[ri], pv, *f, prev_pivot);
                q.emplace(static_cast<std::int64_t>(rowdat[rj].size()), rj);
            }
            touch.clear();
            prev_pivot = pv;
        }
    }

    // rowdat[rj] <- (pv * rowdat[rj] - f * pivot_row) / prev.  Fill-in entries
    // (columns coming only from the pivot row) are registered in col_rows so
    // later pivots see them.
    void eliminate(std::int32_t rj, const Row& pivot_row, const Scalar& pv, const Scalar& f,
                   const Scalar& prev) {
        Row& row = rowdat[static_cast<std::size_t>(rj)];
        Row out;
        out.reserve(row.size() + pivot_row.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot_row.size()) {
            if (j >= pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
                Scalar v = (row[i].second * pv) / prev;
                if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
                ++i;
            } else if (i >= row.size() || pivot_row[j].first < row[i].first) {
                Scalar v = -(f * pivot_row[j].second) / prev;
                if (!v.is_zero()) {
                    std::int64_t c = pivot_row[j].first;
                    out.emplace_back(c, std::move(v));
                    col_rows[static_cast<std::size_t>(c)].push_back(rj);
                    ++col_count[static_cast<std::size_t>(c)];
                }
                ++j;
            } else {
                Scalar v = (row[i].second * pv - f * pivot_row[j].second) / prev;
                if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row = std::move(out);
    }
};

} // namespace

std::int64_t sparse_rank(const SparseMatrix& m) {
    Eliminator e(m);
    e.run();
    return static_cast<std::int64_t>(e.pivots.size());
}

RankKernel sparse_rank_kernel(const SparseMatrix& m) {
    Eliminator e(m);
    e.run();
    RankKernel rk;
    rk.rank = static_cast<std::int64_t>(e.pivots.size());

    // Back-substitute one kernel vector per free column.
    std::vector<bool> is_pivot_col(static_cast<std::size_t>(m.cols()), false);
    for (const auto& [r, c] : e.pivots) is_pivot_col[static_cast<std::size_t>(c)] = true;
    const FieldSpec fs = m.field();
    for (std::int64_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot_col[static_cast<std::size_t>(fc)]) continue;
        std::map<std::int64_t, Scalar> v;
        v.emplace(fc, Scalar::one(fs));
        for (std::size_t pi = e.pivots.size(); pi-- > 0;) {
            const auto& [ri, pc] = e.pivots[pi];
            Scalar acc = Scalar::zero(fs);
            const Scalar* pivot_val = nullptr;
            for (const auto& [c, val] : e.rowdat[static_cast<std::size_t>(ri)]) {
                if (c == pc) {
                    pivot_val = &val;
                    continue;
                }
                auto it = v.find(c);
                if (it != v.end()) acc += val * it->second;
            }
            if (!acc.is_zero())
                v.emplace(pc, -(acc / *pivot_val));
        }
        SparseVec kv;
        for (auto& [i, s] : v)
            if (!s.is_zero()) kv.entries.emplace_back(i, std::move(s));
        rk.kernel.push_back(std::move(kv));
    }
    return rk;
}

std::int64_t rank_augmented(const SparseMatrix& a, const SparseMatrix& b) {
    return sparse_rank(SparseMatrix::hstack(a, b));
}

std::int64_t rank_augmented(const std::vector<SparseVec>& cols, std::int64_t rows,
                            const SparseMatrix& b) {
    SparseMatrix m(b.field(), rows, static_cast<std::int64_t>(cols.size()) + b.cols());
    for (std::size_t j = 0; j < cols.size(); ++j)
        m.set_column(static_cast<std::int64_t>(j), cols[j]);
    for (std::int64_t j = 0; j < b.cols(); ++j)
        m.set_column(static_cast<std::int64_t>(cols.size()) + j, b.column(j));
    return sparse_rank(m);
}

std::int64_t homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw error("homology_dim: shapes do not compose");
    if (!(d_out * d_in).is_zero())
        throw not_a_complex("d_out * d_in != 0");
    std::int64_t middle = d_out.cols();
    return (middle - sparse_rank(d_out)) - sparse_rank(d_in);
}

} // namespace cychom
