#include "cychom/homology.hpp"

#include <chrono>

namespace cychom {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

} // namespace

std::vector<std::int64_t> HomologyReport::dim_vector() const {
    std::vector<std::int64_t> v;
    for (int n = 0; n <= max_degree; ++n) {
        auto it = dims.find(n);
        v.push_back(it == dims.end() ? -1 : it->second);
    }
    return v;
}

HomologyReport hochschild_homology(const Algebra& a, int max_n, std::int64_t size_cap) {
    auto t0 = Clock::now();
    ChainContext ctx(a, size_cap);
    HomologyReport rep;
    rep.algebra_id = a.name();
    rep.theory = "hh";
    rep.max_degree = max_n;

    std::vector<std::int64_t> b_rank(static_cast<std::size_t>(max_n + 2), 0);
    for (int n = 1; n <= max_n + 1; ++n) {
        b_rank[static_cast<std::size_t>(n)] = sparse_rank(ctx.matrix(ChainOp::b, n));
        rep.ranks["rank_b_" + std::to_string(n)] = b_rank[static_cast<std::size_t>(n)];
    }
    for (int n = 0; n <= max_n; ++n) {
        std::int64_t kernel = ctx.space_dim(n) - b_rank[static_cast<std::size_t>(n)];
        rep.dims[n] = kernel - b_rank[static_cast<std::size_t>(n + 1)];
    }
    // degree-0 cross-check against the commutator quotient
    std::int64_t cq = a.commutator_quotient_dim();
    rep.ranks["commutator_quotient"] = cq;
    if (rep.dims[0] != cq)
        throw validation_error("MethodDisagreement",
                               "HH_0 != dim A/[A,A] (" + std::to_string(rep.dims[0]) + " vs " +
                                   std::to_string(cq) + ")");
    rep.elapsed_ms = elapsed_ms(t0);
    return rep;
}

HomologyReport hochschild_cohomology(const Algebra& a, CohCoeff coeff, int max_n,
                                     std::int64_t size_cap) {
    auto t0 = Clock::now();
    ChainContext ctx(a, size_cap);
    HomologyReport rep;
    rep.algebra_id = a.name();
    rep.max_degree = max_n;

    if (coeff == CohCoeff::A_dual) {
        rep.theory = "hcoh-Adual";
        // cochain differential = transpose of the chain-level b
        std::vector<std::int64_t> r(static_cast<std::size_t>(max_n + 2), 0);
        for (int n = 1; n <= max_n + 1; ++n) {
            r[static_cast<std::size_t>(n)] = sparse_rank(ctx.matrix(ChainOp::b, n).transpose());
            rep.ranks["rank_bT_" + std::to_string(n)] = r[static_cast<std::size_t>(n)];
        }
        for (int n = 0; n <= max_n; ++n)
            rep.dims[n] = ctx.space_dim(n) - r[static_cast<std::size_t>(n + 1)] -
                          r[static_cast<std::size_t>(n)];
    } else {
        rep.theory = "hcoh-A";
        std::vector<std::int64_t> r(static_cast<std::size_t>(max_n + 2), 0);
        for (int n = 0; n <= max_n; ++n) {
            r[static_cast<std::size_t>(n + 1)] = sparse_rank(ctx.deformation_delta(n));
            rep.ranks["rank_delta_" + std::to_string(n)] = r[static_cast<std::size_t>(n + 1)];
        }
        // H^n = dim C^n - rank(delta_n) - rank(delta_{n-1});
        // r[n+1] stores rank(delta_n)
        for (int n = 0; n <= max_n; ++n)
            rep.dims[n] = ctx.deformation_dim(n) - r[static_cast<std::size_t>(n + 1)] -
                          r[static_cast<std::size_t>(n)];
    }
    rep.elapsed_ms = elapsed_ms(t0);
    return rep;
}

HomologyReport cyclic_homology(const Algebra& a, int max_n, CyclicMethod method,
                               std::int64_t size_cap) {
    auto t0 = Clock::now();
    ChainContext ctx(a, size_cap);
    HomologyReport rep;
    rep.algebra_id = a.name();
    rep.max_degree = max_n;

    switch (method) {
        case CyclicMethod::Quotient: {
            rep.theory = "hc-quotient";
            // HC_n = dim C_n^lambda - rank(bbar_n) - rank(bbar_{n+1}) computed
            // through augmented ranks:
            //   dim C_n^lambda           = d^{n+1} - rank(1-lambda_n)
            //   rank(bbar_m)             = rank([b_m | 1-lambda_{m-1}]) - rank(1-lambda_{m-1})
            std::vector<std::int64_t> rl(static_cast<std::size_t>(max_n + 2), 0);
            std::vector<std::int64_t> aug(static_cast<std::size_t>(max_n + 2), 0);
            for (int n = 0; n <= max_n + 1; ++n) {
                SparseMatrix one_minus_lambda =
                    SparseMatrix::identity(a.field(), ctx.checked_dim(n)) -
                    ctx.matrix(ChainOp::lambda, n);
                rl[static_cast<std::size_t>(n)] = sparse_rank(one_minus_lambda);
                rep.ranks["rank_1-lambda_" + std::to_string(n)] = rl[static_cast<std::size_t>(n)];
                if (n >= 1) {
                    SparseMatrix prev =
                        SparseMatrix::identity(a.field(), ctx.checked_dim(n - 1)) -
                        ctx.matrix(ChainOp::lambda, n - 1);
                    aug[static_cast<std::size_t>(n)] =
                        rank_augmented(ctx.matrix(ChainOp::b, n), prev);
                    rep.ranks["rank_[b|1-lambda]_" + std::to_string(n)] =
                        aug[static_cast<std::size_t>(n)];
                }
            }
            for (int n = 0; n <= max_n; ++n) {
                std::int64_t quotient_dim = ctx.space_dim(n) - rl[static_cast<std::size_t>(n)];
                std::int64_t rank_in =
                    aug[static_cast<std::size_t>(n + 1)] - rl[static_cast<std::size_t>(n)];
                std::int64_t rank_out =
                    n >= 1 ? aug[static_cast<std::size_t>(n)] - rl[static_cast<std::size_t>(n - 1)]
                           : 0;
                rep.dims[n] = quotient_dim - rank_out - rank_in;
            }
            break;
        }
        case CyclicMethod::CyclicBicomplex: {
            rep.theory = "hc-cyclic";
            TotalComplex tot = cyclic_total_complex(ctx, max_n + 1);
            std::vector<std::int64_t> r(static_cast<std::size_t>(max_n + 2), 0);
            for (int m = 1; m <= max_n + 1; ++m) {
                r[static_cast<std::size_t>(m)] =
                    sparse_rank(tot.boundary[static_cast<std::size_t>(m)]);
                rep.ranks["rank_D_" + std::to_string(m)] = r[static_cast<std::size_t>(m)];
            }
            for (int n = 0; n <= max_n; ++n)
                rep.dims[n] = tot.dims[static_cast<std::size_t>(n)] -
                              r[static_cast<std::size_t>(n)] - r[static_cast<std::size_t>(n + 1)];
            break;
        }
        case CyclicMethod::BBBicomplex: {
            rep.theory = "hc-bB";
            TotalComplex tot = bb_total_complex(ctx, max_n + 1);
            std::vector<std::int64_t> r(static_cast<std::size_t>(max_n + 2), 0);
            for (int m = 1; m <= max_n + 1; ++m) {
                r[static_cast<std::size_t>(m)] =
                    sparse_rank(tot.boundary[static_cast<std::size_t>(m)]);
                rep.ranks["rank_DbB_" + std::to_string(m)] = r[static_cast<std::size_t>(m)];
            }
            for (int n = 0; n <= max_n; ++n)
                rep.dims[n] = tot.dims[static_cast<std::size_t>(n)] -
                              r[static_cast<std::size_t>(n)] - r[static_cast<std::size_t>(n + 1)];
            break;
        }
    }
    rep.elapsed_ms = elapsed_ms(t0);
    return rep;
}

HomologyReport cyclic_homology_checked(const Algebra& a, int max_n, std::int64_t size_cap) {
    HomologyReport q = cyclic_homology(a, max_n, CyclicMethod::Quotient, size_cap);
    HomologyReport c = cyclic_homology(a, max_n, CyclicMethod::CyclicBicomplex, size_cap);
    HomologyReport b = cyclic_homology(a, max_n, CyclicMethod::BBBicomplex, size_cap);
    if (q.dims != c.dims || q.dims != b.dims)
        throw validation_error("MethodDisagreement", "cyclic homology methods disagree on " +
                                                         a.name());
    // merge rank tables for the report
    for (const auto& [k, v] : c.ranks) q.ranks[k] = v;
    for (const auto& [k, v] : b.ranks) q.ranks[k] = v;
    q.theory = "hc";
    return q;
}

HomologyReport periodic_cyclic(const Algebra& a, int parity, int window, std::int64_t size_cap) {
    if (parity != 0 && parity != 1) throw error("parity must be 0 or 1");
    auto t0 = Clock::now();
    ChainContext ctx(a, size_cap);
    HomologyReport rep;
    rep.algebra_id = a.name();
    rep.theory = parity == 0 ? "hp-even" : "hp-odd";
    rep.max_degree = window;

    TotalComplex tot = cyclic_total_complex(ctx, window + 1);
    const int n0 = parity;
    if (n0 > window) throw error("window too small for requested parity");

    // boundaries into the anchor degree
    const SparseMatrix& bnd0 = tot.boundary[static_cast<std::size_t>(n0 + 1)];
    std::int64_t rank_bnd0 = sparse_rank(bnd0);

    // rank ladder: r_k = dim of the image of HC_{n0+2k} in HC_{n0} under the
    // k-fold truncation
    std::vector<std::int64_t> ladder;
    for (int k = 0; n0 + 2 * k <= window; ++k) {
        int m = n0 + 2 * k;
        auto rk = sparse_rank_kernel(tot.boundary.size() > static_cast<std::size_t>(m) && m >= 1
                                         ? tot.boundary[static_cast<std::size_t>(m)]
                                         : SparseMatrix(a.field(), 0, tot.dims[static_cast<std::size_t>(m)]));
        // cycles in Tot_m
        std::vector<SparseVec> cycles = rk.kernel;
        // push down k times
        for (int step = 0; step < k; ++step) {
            SparseMatrix tr = tot_truncation(tot, m - 2 * step);
            for (auto& v : cycles) v = tr.apply(v);
        }
        std::int64_t r = rank_augmented(cycles, tot.dims[static_cast<std::size_t>(n0)], bnd0) -
                         rank_bnd0;
        ladder.push_back(r);
        rep.ranks["s_image_rank_" + std::to_string(k)] = r;
    }
    // stabilized when two consecutive ranks agree
    std::int64_t stable = -1;
    for (std::size_t k = 0; k + 1 < ladder.size(); ++k)
        if (ladder[k] == ladder[k + 1]) {
            stable = ladder[k];
            break;
        }
    if (stable >= 0) {
        rep.dims[parity] = stable;
        rep.notes[parity] = "stabilized";
    } else {
        rep.notes[parity] = "not stabilized in window";
    }
    rep.elapsed_ms = elapsed_ms(t0);
    return rep;
}

} // namespace cychom
