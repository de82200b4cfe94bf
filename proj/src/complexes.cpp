#include "cychom/complexes.hpp"

#include <algorithm>

namespace cychom {

// ---------------------------------------------------------------------------
// ChainContext

std::int64_t ChainContext::space_dim(int n) const {
    std::int64_t d = alg_->dim(), r = 1;
    for (int i = 0; i <= n; ++i) r *= d;
    return r;
}

std::int64_t ChainContext::checked_dim(int n) const {
    std::int64_t d = space_dim(n);
    if (d > cap_) throw size_cap_error(d, cap_);
    return d;
}

std::vector<int> ChainContext::decode(int n, std::int64_t idx) const {
    const std::int64_t d = alg_->dim();
    std::vector<int> t(static_cast<std::size_t>(n + 1));
    for (int j = n; j >= 0; --j) {
        t[static_cast<std::size_t>(j)] = static_cast<int>(idx % d);
        idx /= d;
    }
    return t;
}

std::int64_t ChainContext::encode(const std::vector<int>& tuple) const {
    const std::int64_t d = alg_->dim();
    std::int64_t idx = 0;
    for (int i : tuple) idx = idx * d + i;
    return idx;
}

void ChainContext::add_b_terms(int n, const std::vector<int>& t, bool include_last,
                               SparseVec& out) const {
    for (int p = 0; p < n; ++p) {
        bool neg = (p % 2) != 0;
        std::vector<int> img(t.begin(), t.end());
        img.erase(img.begin() + p);
        for (const auto& [k, c] : alg_->basis_product(t[static_cast<std::size_t>(p)],
                                                      t[static_cast<std::size_t>(p + 1)])) {
            img[static_cast<std::size_t>(p)] = k;
            out.push(encode(img), neg ? -c : c);
        }
    }
    if (include_last) {
        // (-1)^n (a_n a_0 (x) a_1 ... a_{n-1})
        bool neg = (n % 2) != 0;
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int j = 1; j < n; ++j) img[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j)];
        for (const auto& [k, c] : alg_->basis_product(t[static_cast<std::size_t>(n)], t[0])) {
            img[0] = k;
            out.push(encode(img), neg ? -c : c);
        }
    }
}

namespace {

// index of (a_n (x) a_0 ... a_{n-1}) given the index of (a_0 ... a_n);
// pow_n = d^n so the index space is d^{n+1}
inline std::int64_t rotate_idx(std::int64_t idx, std::int64_t d, std::int64_t pow_n) {
    return (idx % d) * pow_n + idx / d;
}

} // namespace

SparseVec ChainContext::column(ChainOp op, int n, std::int64_t idx) const {
    const FieldSpec& fs = alg_->field();
    const std::int64_t d = alg_->dim();
    std::int64_t pow_n = 1;
    for (int i = 0; i < n; ++i) pow_n *= d;
    SparseVec out;
    switch (op) {
        case ChainOp::b:
            if (n >= 1) {
                std::vector<int> t = decode(n, idx);
                add_b_terms(n, t, true, out);
            }
            break;
        case ChainOp::b_prime:
            if (n >= 1) {
                std::vector<int> t = decode(n, idx);
                add_b_terms(n, t, false, out);
            }
            break;
        case ChainOp::lambda: {
            Scalar sgn = (n % 2) ? Scalar::of(fs, -1) : Scalar::one(fs);
            out.push(rotate_idx(idx, d, pow_n), std::move(sgn));
            break;
        }
        case ChainOp::n_op: {
            // 1 + lambda + ... + lambda^n; lambda^k rotates k steps, sign (-1)^{nk}
            const Scalar one = Scalar::one(fs);
            const Scalar neg = Scalar::of(fs, -1);
            std::int64_t cur = idx;
            for (int k = 0; k <= n; ++k) {
                bool flip = (n % 2) != 0 && (k % 2) != 0;
                out.push(cur, flip ? neg : one);
                cur = rotate_idx(cur, d, pow_n);
            }
            break;
        }
        case ChainOp::s: {
            // 1 (x) a_0 ... a_n, expanding the unit over the basis
            const std::int64_t pow_np1 = pow_n * d;
            for (int u = 0; u < alg_->dim(); ++u) {
                const Scalar& c = alg_->unit_coeffs()[static_cast<std::size_t>(u)];
                if (c.is_zero()) continue;
                out.push(u * pow_np1 + idx, c);
            }
            break;
        }
        case ChainOp::connes_b: {
            // B = (1 - lambda) s N: apply N on C_n, then s, then 1 - lambda
            // on C_{n+1}; everything is index arithmetic plus unit weights.
            const std::int64_t pow_np1 = pow_n * d;
            const bool sign_np1 = ((n + 1) % 2) != 0; // sign of lambda on C_{n+1}
            std::int64_t cur = idx;
            for (int k = 0; k <= n; ++k) {
                bool flip = (n % 2) != 0 && (k % 2) != 0;
                for (int u = 0; u < alg_->dim(); ++u) {
                    const Scalar& c = alg_->unit_coeffs()[static_cast<std::size_t>(u)];
                    if (c.is_zero()) continue;
                    std::int64_t sidx = u * pow_np1 + cur;
                    out.push(sidx, flip ? -c : c);
                    // minus lambda of the inserted chain
                    bool m = flip == sign_np1; // -(sign_np1 ? -1 : 1)*(flip ? -1 : 1) < 0 ?
                    out.push(rotate_idx(sidx, d, pow_np1), m ? -c : c);
                }
                cur = rotate_idx(cur, d, pow_n);
            }
            break;
        }
    }
    out.normalize();
    return out;
}

SparseMatrix ChainContext::matrix(ChainOp op, int n) const {
    int target = n;
    switch (op) {
        case ChainOp::b:
        case ChainOp::b_prime: target = n - 1; break;
        case ChainOp::lambda:
        case ChainOp::n_op: target = n; break;
        case ChainOp::s:
        case ChainOp::connes_b: target = n + 1; break;
    }
    std::int64_t cols = checked_dim(n);
    std::int64_t rows = target < 0 ? 0 : checked_dim(target);
    SparseMatrix m(alg_->field(), rows, cols);
    if (target >= 0)
        for (std::int64_t c = 0; c < cols; ++c) m.set_column(c, column(op, n, c));
    return m;
}

std::int64_t ChainContext::deformation_dim(int n) const { return space_dim(n); }

SparseMatrix ChainContext::deformation_delta(int n) const {
    // C^n(A,A) = Hom(A^(x)n, A), coordinate (argument tuple, output basis)
    // with index = encode(args) * d + out.
    const FieldSpec& fs = alg_->field();
    const std::int64_t d = alg_->dim();
    std::int64_t cols = checked_dim(n);
    std::int64_t rows = checked_dim(n + 1);
    SparseMatrix m(fs, rows, cols);

    auto encode_args = [&](const std::vector<int>& args) {
        std::int64_t idx = 0;
        for (int i : args) idx = idx * d + i;
        return idx;
    };
    std::int64_t nargs = 1;
    for (int i = 0; i < n; ++i) nargs *= d;

    std::vector<std::vector<std::tuple<int, int, Scalar>>> rev(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, c] : alg_->basis_product(i, j))
                rev[static_cast<std::size_t>(k)].emplace_back(i, j, c);

    for (std::int64_t a = 0; a < nargs; ++a) {
        std::vector<int> args(static_cast<std::size_t>(n));
        std::int64_t tmp = a;
        for (int j = n - 1; j >= 0; --j) {
            args[static_cast<std::size_t>(j)] = static_cast<int>(tmp % d);
            tmp /= d;
        }
        for (int k = 0; k < d; ++k) {
            std::int64_t colidx = a * d + k;
            SparseVec col;
            // (delta f)(j, args) gains e_j * f(args) = e_j e_k
            for (int j = 0; j < d; ++j) {
                std::vector<int> xargs;
                xargs.push_back(j);
                xargs.insert(xargs.end(), args.begin(), args.end());
                std::int64_t base = encode_args(xargs) * d;
                for (const auto& [mm, c] : alg_->basis_product(j, k)) col.push(base + mm, c);
            }
            // middle faces: the i-th argument of f is a product
            for (int i = 1; i <= n; ++i) {
                bool neg = (i % 2) != 0;
                int r = args[static_cast<std::size_t>(i - 1)];
                for (const auto& [ji, jj, c] : rev[static_cast<std::size_t>(r)]) {
                    std::vector<int> xargs(args.begin(), args.end());
                    xargs[static_cast<std::size_t>(i - 1)] = ji;
                    xargs.insert(xargs.begin() + i, jj);
                    col.push(encode_args(xargs) * d + k, neg ? -c : c);
                }
            }
            // last face: f(args) * e_j with sign (-1)^{n+1}
            bool negl = ((n + 1) % 2) != 0;
            for (int j = 0; j < d; ++j) {
                std::vector<int> xargs(args.begin(), args.end());
                xargs.push_back(j);
                std::int64_t base = encode_args(xargs) * d;
                for (const auto& [mm, c] : alg_->basis_product(k, j))
                    col.push(base + mm, negl ? -c : c);
            }
            col.normalize();
            m.set_column(colidx, std::move(col));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Complex assembly

void ChainComplex::verify() {
    for (std::size_t n = 2; n < boundary.size(); ++n)
        if (!(boundary[n - 1] * boundary[n]).is_zero())
            throw not_a_complex("boundary composition nonzero at degree " + std::to_string(n));
}

ChainComplex hochschild_complex(const ChainContext& ctx, int max_n) {
    ChainComplex c;
    c.fs = ctx.algebra().field();
    for (int n = 0; n <= max_n; ++n) c.dims.push_back(ctx.checked_dim(n));
    c.boundary.emplace_back();
    for (int n = 1; n <= max_n; ++n) c.boundary.push_back(ctx.matrix(ChainOp::b, n));
    c.verify();
    return c;
}

namespace {

TotalComplex assemble(const ChainContext& ctx, int max_n, TotalComplex::Kind kind,
                      bool verify_squares) {
    TotalComplex tot;
    tot.kind = kind;
    tot.fs = ctx.algebra().field();
    for (int m = 0; m <= max_n; ++m) {
        std::vector<std::pair<int, std::int64_t>> blocks;
        std::int64_t off = 0;
        if (kind == TotalComplex::Kind::Cyclic) {
            for (int p = 0; p <= m; ++p) { // column p holds C_{m-p}
                blocks.emplace_back(m - p, off);
                off += ctx.checked_dim(m - p);
            }
        } else {
            for (int j = 0; 2 * j <= m; ++j) { // C_{m-2j}
                blocks.emplace_back(m - 2 * j, off);
                off += ctx.checked_dim(m - 2 * j);
            }
        }
        tot.blocks.push_back(std::move(blocks));
        tot.dims.push_back(off);
    }
    tot.boundary.emplace_back();
    for (int m = 1; m <= max_n; ++m) {
        SparseMatrix d(tot.fs, tot.dims[static_cast<std::size_t>(m - 1)],
                       tot.dims[static_cast<std::size_t>(m)]);
        const auto& src_blocks = tot.blocks[static_cast<std::size_t>(m)];
        const auto& dst_blocks = tot.blocks[static_cast<std::size_t>(m - 1)];
        for (std::size_t bi = 0; bi < src_blocks.size(); ++bi) {
            auto [q, off] = src_blocks[bi];
            std::int64_t dim_q = ctx.space_dim(q);
            if (kind == TotalComplex::Kind::Cyclic) {
                int p = m - q; // column index
                for (std::int64_t c = 0; c < dim_q; ++c) {
                    SparseVec acc;
                    if (q >= 1) {
                        // vertical: b on even columns, -b' on odd columns;
                        // the target block keeps column index p
                        SparseVec v = ctx.column(p % 2 == 0 ? ChainOp::b : ChainOp::b_prime, q, c);
                        std::int64_t doff = dst_blocks[static_cast<std::size_t>(p)].second;
                        for (const auto& [r, val] : v.entries)
                            acc.push(doff + r, p % 2 == 1 ? -val : val);
                    }
                    if (p >= 1) {
                        // horizontal into column p-1: 1-lambda out of odd p, N out of even p
                        std::int64_t doff = dst_blocks[static_cast<std::size_t>(p - 1)].second;
                        if (p % 2 == 1) {
                            acc.push(doff + c, Scalar::one(tot.fs));
                            SparseVec l = ctx.column(ChainOp::lambda, q, c);
                            for (const auto& [r, val] : l.entries) acc.push(doff + r, -val);
                        } else {
                            SparseVec nv = ctx.column(ChainOp::n_op, q, c);
                            for (const auto& [r, val] : nv.entries) acc.push(doff + r, val);
                        }
                    }
                    acc.normalize();
                    d.set_column(off + c, std::move(acc));
                }
            } else {
                int j = static_cast<int>(bi);
                for (std::int64_t c = 0; c < dim_q; ++c) {
                    SparseVec acc;
                    if (q >= 1) {
                        SparseVec v = ctx.column(ChainOp::b, q, c);
                        std::int64_t doff = dst_blocks[static_cast<std::size_t>(j)].second;
                        for (const auto& [r, val] : v.entries) acc.push(doff + r, val);
                    }
                    if (j >= 1) {
                        SparseVec bb = ctx.column(ChainOp::connes_b, q, c);
                        std::int64_t doff = dst_blocks[static_cast<std::size_t>(j - 1)].second;
                        for (const auto& [r, val] : bb.entries) acc.push(doff + r, val);
                    }
                    acc.normalize();
                    d.set_column(off + c, std::move(acc));
                }
            }
        }
        tot.boundary.push_back(std::move(d));
    }
    if (verify_squares)
        for (std::size_t m = 2; m < tot.boundary.size(); ++m)
            if (!(tot.boundary[m - 1] * tot.boundary[m]).is_zero())
                throw not_a_complex("total differential does not square to zero at degree " +
                                    std::to_string(m));
    return tot;
}

} // namespace

TotalComplex cyclic_total_complex(const ChainContext& ctx, int max_n, bool verify_squares) {
    return assemble(ctx, max_n, TotalComplex::Kind::Cyclic, verify_squares);
}

TotalComplex bb_total_complex(const ChainContext& ctx, int max_n, bool verify_squares) {
    return assemble(ctx, max_n, TotalComplex::Kind::BB, verify_squares);
}

SparseMatrix tot_inclusion_of_hochschild(const ChainContext& ctx, const TotalComplex& tot, int m) {
    if (tot.kind != TotalComplex::Kind::Cyclic)
        throw error("inclusion defined on the cyclic total complex");
    std::int64_t dim_m = ctx.space_dim(m);
    SparseMatrix inc(tot.fs, tot.dims[static_cast<std::size_t>(m)], dim_m);
    // column-0 block sits at offset 0 with chain degree m
    for (std::int64_t c = 0; c < dim_m; ++c) inc.add_entry(c, c, Scalar::one(tot.fs));
    inc.normalize();
    return inc;
}

SparseMatrix tot_truncation(const TotalComplex& tot, int m) {
    if (tot.kind != TotalComplex::Kind::Cyclic)
        throw error("truncation defined on the cyclic total complex");
    if (m < 2) throw error("truncation needs total degree >= 2");
    const auto& src = tot.blocks[static_cast<std::size_t>(m)];
    const auto& dst = tot.blocks[static_cast<std::size_t>(m - 2)];
    SparseMatrix tr(tot.fs, tot.dims[static_cast<std::size_t>(m - 2)],
                    tot.dims[static_cast<std::size_t>(m)]);
    // drop columns 0 and 1; column p >= 2 keeps its chain degree at column p-2
    for (std::size_t p = 2; p < src.size(); ++p) {
        auto [q, soff] = src[p];
        (void)q;
        std::int64_t doff = dst[p - 2].second;
        std::int64_t len =
            (p + 1 < src.size() ? src[p + 1].second : tot.dims[static_cast<std::size_t>(m)]) - soff;
        for (std::int64_t i = 0; i < len; ++i)
            tr.add_entry(doff + i, soff + i, Scalar::one(tot.fs));
    }
    tr.normalize();
    return tr;
}

SparseMatrix tot_top_projection(const ChainContext& ctx, const TotalComplex& tot, int m) {
    if (tot.kind != TotalComplex::Kind::Cyclic)
        throw error("projection defined on the cyclic total complex");
    std::int64_t dim_m = ctx.space_dim(m);
    SparseMatrix pr(tot.fs, dim_m, tot.dims[static_cast<std::size_t>(m)]);
    for (std::int64_t c = 0; c < dim_m; ++c) pr.add_entry(c, c, Scalar::one(tot.fs));
    pr.normalize();
    return pr;
}

// ---------------------------------------------------------------------------
// Bimodule 2-cocycle defect (independent route for the extension check)

std::optional<std::string> two_cocycle_defect(const Algebra& a, const BimoduleData& m,
                                              const TwoCochain& f) {
    const int n = a.dim();
    const int dm = static_cast<int>(m.labels.size());
    const FieldSpec& fs = a.field();
    auto fval = [&](int i, int j) -> const std::vector<Scalar>& {
        return f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    auto fcomb = [&](const StructRow& row, int fixed, bool row_first) {
        std::vector<Scalar> acc(static_cast<std::size_t>(dm), Scalar::zero(fs));
        for (const auto& [k, c] : row) {
            const auto& v = row_first ? fval(k, fixed) : fval(fixed, k);
            for (int p = 0; p < dm; ++p)
                acc[static_cast<std::size_t>(p)] += c * v[static_cast<std::size_t>(p)];
        }
        return acc;
    };
    auto act = [&](const std::vector<std::vector<Scalar>>& mat, const std::vector<Scalar>& v) {
        std::vector<Scalar> acc(static_cast<std::size_t>(dm), Scalar::zero(fs));
        for (int x = 0; x < dm; ++x)
            for (int y = 0; y < dm; ++y)
                acc[static_cast<std::size_t>(x)] +=
                    mat[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] *
                    v[static_cast<std::size_t>(y)];
        return acc;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // delta f(i,j,k) = e_i f(j,k) - f(ij,k) + f(i,jk) - f(i,j) e_k
                auto t1 = act(m.left[static_cast<std::size_t>(i)], fval(j, k));
                auto t2 = fcomb(a.basis_product(i, j), k, true);
                auto t3 = fcomb(a.basis_product(j, k), i, false);
                auto t4 = act(m.right[static_cast<std::size_t>(k)], fval(i, j));
                for (int p = 0; p < dm; ++p) {
                    Scalar v = t1[static_cast<std::size_t>(p)] - t2[static_cast<std::size_t>(p)] +
                               t3[static_cast<std::size_t>(p)] - t4[static_cast<std::size_t>(p)];
                    if (!v.is_zero())
                        return "(" + a.labels()[static_cast<std::size_t>(i)] + ", " +
                               a.labels()[static_cast<std::size_t>(j)] + ", " +
                               a.labels()[static_cast<std::size_t>(k)] + ")";
                }
            }
    return std::nullopt;
}

} // namespace cychom
