#include <doctest.h>

#include "cychom/sparse.hpp"

#include <random>

using namespace cychom;

TEST_SUITE_BEGIN("sparse");

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseMatrix from_dense(const FieldSpec& fs, const std::vector<std::vector<int>>& rows) {
    SparseMatrix m(fs, static_cast<std::int64_t>(rows.size()),
                   rows.empty() ? 0 : static_cast<std::int64_t>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0)
                m.add_entry(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c),
                            Scalar::of(fs, rows[r][c]));
    m.normalize();
    return m;
}

// Dense Gaussian elimination oracle, O(n^3), exact.
std::int64_t dense_rank(const SparseMatrix& m) {
    std::vector<std::vector<Scalar>> a(
        static_cast<std::size_t>(m.rows()),
        std::vector<Scalar>(static_cast<std::size_t>(m.cols()), Scalar::zero(m.field())));
    for (std::int64_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c).entries)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    std::int64_t rank = 0;
    std::size_t pr = 0;
    const std::size_t ncols = a.empty() ? 0 : a[0].size();
    for (std::size_t pc = 0; pc < ncols; ++pc) {
        std::size_t sel = pr;
        while (sel < a.size() && a[sel][pc].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[pr]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == pr || a[r][pc].is_zero()) continue;
            Scalar f = a[r][pc] / a[pr][pc];
            for (std::size_t c = pc; c < a[r].size(); ++c)
                a[r][c] = a[r][c] - f * a[pr][c];
        }
        ++pr;
        ++rank;
        if (pr == a.size()) break;
    }
    return rank;
}

SparseMatrix random_sparse(const FieldSpec& fs, std::int64_t rows, std::int64_t cols,
                           double fill, std::mt19937& rng) {
    SparseMatrix m(fs, rows, cols);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> val(-4, 4);
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c = 0; c < cols; ++c)
            if (u(rng) < fill) m.add_entry(r, c, Scalar::of(fs, val(rng)));
    m.normalize();
    return m;
}

} // namespace

TEST_CASE("identity and simple kernels") {
    auto id2 = SparseMatrix::identity(Q, 2);
    auto rk = sparse_rank_kernel(id2);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.empty());

    auto m = from_dense(Q, {{1, -1}});
    rk = sparse_rank_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    // kernel spanned by (1,1)
    const auto& k = rk.kernel[0].entries;
    REQUIRE(k.size() == 2);
    CHECK(k[0].second == k[1].second);

    auto z = SparseMatrix(Q, 1, 1); // zero 1x1: the degree-1 boundary of Q[x]/(x^2)... rank 0
    CHECK(sparse_rank(z) == 0);
}

TEST_CASE("kernel vectors satisfy Mv = 0 exactly") {
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        auto m = random_sparse(Q, 8, 12, 0.3, rng);
        auto rk = sparse_rank_kernel(m);
        CHECK(rk.rank + static_cast<std::int64_t>(rk.kernel.size()) == m.cols());
        for (const auto& v : rk.kernel)
            CHECK(m.apply(v).is_zero());
        // kernel vectors are linearly independent
        SparseMatrix kmat(Q, m.cols(), static_cast<std::int64_t>(rk.kernel.size()));
        for (std::size_t j = 0; j < rk.kernel.size(); ++j)
            kmat.set_column(static_cast<std::int64_t>(j), rk.kernel[j]);
        CHECK(sparse_rank(kmat) == static_cast<std::int64_t>(rk.kernel.size()));
    }
}

TEST_CASE("rank equals dense oracle and transpose rank, all fields") {
    std::mt19937 rng(99);
    for (FieldSpec fs : {FieldSpec::rationals(), FieldSpec::cyclotomic(4),
                         FieldSpec::rational_functions(FieldSpec::rationals())}) {
        for (int it = 0; it < 12; ++it) {
            auto m = random_sparse(fs, 9, 7, 0.35, rng);
            auto r = sparse_rank(m);
            CHECK(r == dense_rank(m));
            CHECK(r == sparse_rank(m.transpose()));
        }
    }
}

TEST_CASE("rank invariant under row permutation") {
    std::mt19937 rng(3);
    for (int it = 0; it < 10; ++it) {
        auto m = random_sparse(Q, 10, 10, 0.3, rng);
        std::vector<std::int64_t> perm(10);
        for (int i = 0; i < 10; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SparseMatrix p(Q, 10, 10);
        for (std::int64_t c = 0; c < 10; ++c)
            for (const auto& [r, v] : m.column(c).entries)
                p.add_entry(perm[static_cast<std::size_t>(r)], c, v);
        p.normalize();
        CHECK(sparse_rank(m) == sparse_rank(p));
    }
}

TEST_CASE("homology_dim basics") {
    // both maps zero on a 3-dim space -> 3
    SparseMatrix din(Q, 3, 0), dout(Q, 0, 3);
    CHECK(homology_dim(din, dout) == 3);

    // d_in = [1,-1]^T into 2-dim, d_out = [1,1]: exact in the middle
    auto in2 = from_dense(Q, {{1}, {-1}});
    auto out2 = from_dense(Q, {{1, 1}});
    CHECK(homology_dim(in2, out2) == 0);

    // non-complex pairs are rejected
    auto bad_out = from_dense(Q, {{1, 0}});
    CHECK_THROWS_AS(homology_dim(in2, bad_out), not_a_complex);
}

TEST_CASE("homology_dim agrees with dense ranks on random complexes") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 15; ++it) {
        // build a genuine complex: d_out := projection killing im(d_in)
        auto din = random_sparse(Q, 9, 5, 0.4, rng);
        // take d_out's rows = kernel vectors of din^T (so d_out * d_in = 0)
        auto rk = sparse_rank_kernel(din.transpose());
        SparseMatrix dout(Q, static_cast<std::int64_t>(rk.kernel.size()), 9);
        for (std::size_t i = 0; i < rk.kernel.size(); ++i)
            for (const auto& [c, v] : rk.kernel[i].entries)
                dout.add_entry(static_cast<std::int64_t>(i), c, v);
        dout.normalize();
        std::int64_t h = homology_dim(din, dout);
        std::int64_t expect = (9 - dense_rank(dout)) - dense_rank(din);
        CHECK(h == expect);
        CHECK(h >= 0);
    }
}

TEST_CASE("augmented rank helper") {
    auto a = from_dense(Q, {{1, 0}, {0, 1}});
    auto b = from_dense(Q, {{1}, {1}});
    CHECK(rank_augmented(a, b) == 2);
    std::vector<SparseVec> cols = {b.column(0)};
    CHECK(rank_augmented(cols, 2, a) == 2);
}

TEST_SUITE_END();
