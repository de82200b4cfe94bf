#include "cychom/cochain.hpp"

#include <algorithm>

namespace cychom {

// ---------------------------------------------------------------------------
// FinCochain

FinCochain FinCochain::dense(const Algebra& a, int degree, std::vector<Scalar> values) {
    FinCochain c;
    c.alg_ = &a;
    c.degree_ = degree;
    c.dense_repr_ = true;
    std::int64_t want = 1;
    for (int i = 0; i <= degree; ++i) want *= a.dim();
    if (static_cast<std::int64_t>(values.size()) != want)
        throw error("dense cochain table has wrong size");
    c.values_ = std::move(values);
    return c;
}

FinCochain FinCochain::rule(const Algebra& a, int degree,
                            std::function<Scalar(const std::vector<int>&)> r) {
    FinCochain c;
    c.alg_ = &a;
    c.degree_ = degree;
    c.rule_ = std::move(r);
    return c;
}

FinCochain FinCochain::from_trace(const Trace& tau) {
    const Algebra& a = *tau.alg;
    std::vector<Scalar> vals = tau.values;
    return dense(a, 0, std::move(vals));
}

Scalar FinCochain::eval_basis(const std::vector<int>& tuple) const {
    if (dense_repr_) {
        std::int64_t idx = 0;
        for (int i : tuple) idx = idx * alg_->dim() + i;
        return values_[static_cast<std::size_t>(idx)];
    }
    return rule_(tuple);
}

Scalar FinCochain::operator()(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != degree_ + 1)
        throw degree_mismatch("cochain expects " + std::to_string(degree_ + 1) + " arguments");
    const FieldSpec& fs = alg_->field();
    Scalar acc = Scalar::zero(fs);
    std::vector<int> tuple(args.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t pos, const Scalar& coeff) {
        if (pos == args.size()) {
            acc += coeff * eval_basis(tuple);
            return;
        }
        for (int i = 0; i < alg_->dim(); ++i) {
            const Scalar& c = args[pos].coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            tuple[pos] = i;
            rec(pos + 1, coeff * c);
        }
    };
    rec(0, Scalar::one(fs));
    return acc;
}

namespace {

// (b phi)(a_0, ..., a_{n+1}) evaluated through the multilinear extension
template <class Cochain, class Elem>
Scalar cochain_b(const Cochain& phi, const std::vector<Elem>& args) {
    const int n = phi.degree();
    const FieldSpec& fs = args[0].alg->field();
    Scalar acc = Scalar::zero(fs);
    for (int i = 0; i <= n; ++i) {
        std::vector<Elem> cut;
        cut.reserve(args.size() - 1);
        for (int j = 0; j < static_cast<int>(args.size()); ++j) {
            if (j == i) {
                cut.push_back(args[static_cast<std::size_t>(i)] *
                              args[static_cast<std::size_t>(i + 1)]);
                ++j;
            } else {
                cut.push_back(args[static_cast<std::size_t>(j)]);
            }
        }
        Scalar v = phi(std::span<const Elem>(cut.data(), cut.size()));
        acc += (i % 2) ? -v : v;
    }
    {
        // (-1)^{n+1} phi(a_{n+1} a_0, a_1, ..., a_n)
        std::vector<Elem> cut;
        cut.push_back(args.back() * args.front());
        for (int j = 1; j <= n; ++j) cut.push_back(args[static_cast<std::size_t>(j)]);
        Scalar v = phi(std::span<const Elem>(cut.data(), cut.size()));
        acc += ((n + 1) % 2) ? -v : v;
    }
    return acc;
}

} // namespace

FinCochain validate_cyclic_cocycle(FinCochain phi) {
    const Algebra& a = phi.carrier();
    const int n = phi.degree();
    std::int64_t total = 1;
    for (int i = 0; i <= n; ++i) total *= a.dim();
    std::vector<int> tuple(static_cast<std::size_t>(n + 1));
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t tmp = idx;
        for (int j = n; j >= 0; --j) {
            tuple[static_cast<std::size_t>(j)] = static_cast<int>(tmp % a.dim());
            tmp /= a.dim();
        }
        std::vector<int> rot(static_cast<std::size_t>(n + 1));
        rot[0] = tuple[static_cast<std::size_t>(n)];
        for (int j = 0; j < n; ++j) rot[static_cast<std::size_t>(j + 1)] = tuple[static_cast<std::size_t>(j)];
        Scalar lhs = phi.eval_basis(rot);
        Scalar rhs = phi.eval_basis(tuple);
        if (n % 2) rhs = -rhs;
        if (!(lhs == rhs)) {
            std::string lbl = "(";
            for (int j = 0; j <= n; ++j)
                lbl += (j ? ", " : "") + a.labels()[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
            throw validation_error("NotCyclic", lbl + ")");
        }
    }
    std::string ce;
    if (!is_hochschild_cocycle(phi, &ce)) throw validation_error("NotClosed", ce);
    phi.cyclic_verified_ = true;
    return phi;
}

bool is_hochschild_cocycle(const FinCochain& phi, std::string* counterexample) {
    const Algebra& a = phi.carrier();
    const int n = phi.degree();
    std::int64_t total = 1;
    for (int i = 0; i <= n + 1; ++i) total *= a.dim();
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::vector<Element> args;
        std::int64_t tmp = idx;
        std::vector<int> tuple(static_cast<std::size_t>(n + 2));
        for (int j = n + 1; j >= 0; --j) {
            tuple[static_cast<std::size_t>(j)] = static_cast<int>(tmp % a.dim());
            tmp /= a.dim();
        }
        for (int j = 0; j <= n + 1; ++j) args.push_back(a.basis(tuple[static_cast<std::size_t>(j)]));
        if (!cochain_b(phi, args).is_zero()) {
            if (counterexample) {
                *counterexample = "(";
                for (int j = 0; j <= n + 1; ++j)
                    *counterexample += (j ? ", " : "") +
                                       a.labels()[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
                *counterexample += ")";
            }
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// BasedCochain

BasedCochain BasedCochain::rule(const BasedAlgebra& a, int degree,
                                std::function<Scalar(const std::vector<BLabel>&)> r) {
    BasedCochain c;
    c.alg_ = &a;
    c.degree_ = degree;
    c.rule_ = std::move(r);
    return c;
}

BasedCochain BasedCochain::from_trace(const BasedTrace& tau) {
    BasedCochain c;
    c.alg_ = tau.alg;
    c.degree_ = 0;
    auto rule = tau.rule;
    c.rule_ = [rule](const std::vector<BLabel>& t) { return rule(t[0]); };
    c.window_ = tau.window;
    c.cyclic_verified_ = !tau.window.empty(); // a validated trace is a cyclic 0-cocycle
    return c;
}

Scalar BasedCochain::eval_labels(const std::vector<BLabel>& tuple) const { return rule_(tuple); }

Scalar BasedCochain::operator()(std::span<const BasedElement> args) const {
    if (static_cast<int>(args.size()) != degree_ + 1)
        throw degree_mismatch("cochain expects " + std::to_string(degree_ + 1) + " arguments");
    const FieldSpec& fs = alg_->field();
    Scalar acc = Scalar::zero(fs);
    std::vector<BLabel> tuple(args.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t pos, const Scalar& coeff) {
        if (pos == args.size()) {
            acc += coeff * eval_labels(tuple);
            return;
        }
        for (const auto& [l, c] : args[pos].coeffs) {
            tuple[pos] = l;
            rec(pos + 1, coeff * c);
        }
    };
    rec(0, Scalar::one(fs));
    return acc;
}

namespace {

void for_each_tuple(const std::vector<BLabel>& window, int len,
                    const std::function<bool(const std::vector<BLabel>&)>& fn) {
    std::vector<BLabel> tuple(static_cast<std::size_t>(len));
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == len) return fn(tuple);
        for (const auto& l : window) {
            tuple[static_cast<std::size_t>(pos)] = l;
            if (!rec(pos + 1)) return false;
        }
        return true;
    };
    rec(0);
}

std::string tuple_str(const BasedAlgebra& a, const std::vector<BLabel>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + a.label_str(t[i]);
    return s + ")";
}

} // namespace

BasedCochain validate_cyclic_cocycle(BasedCochain phi, std::vector<BLabel> window) {
    const BasedAlgebra& a = phi.carrier();
    const int n = phi.degree();
    std::string fail;
    for_each_tuple(window, n + 1, [&](const std::vector<BLabel>& t) {
        std::vector<BLabel> rot(t.size());
        rot[0] = t.back();
        for (std::size_t j = 0; j + 1 < t.size(); ++j) rot[j + 1] = t[j];
        Scalar lhs = phi.eval_labels(rot);
        Scalar rhs = phi.eval_labels(t);
        if (n % 2) rhs = -rhs;
        if (!(lhs == rhs)) {
            fail = tuple_str(a, t);
            return false;
        }
        return true;
    });
    if (!fail.empty()) throw validation_error("NotCyclic", fail);
    std::string ce;
    if (!is_hochschild_cocycle(phi, window, &ce)) throw validation_error("NotClosed", ce);
    phi.cyclic_verified_ = true;
    phi.window_ = std::move(window);
    return phi;
}

bool is_hochschild_cocycle(const BasedCochain& phi, const std::vector<BLabel>& window,
                           std::string* counterexample) {
    const BasedAlgebra& a = phi.carrier();
    const int n = phi.degree();
    bool ok = true;
    for_each_tuple(window, n + 2, [&](const std::vector<BLabel>& t) {
        std::vector<BasedElement> args;
        args.reserve(t.size());
        for (const auto& l : t) args.push_back(a.monomial(l, Scalar::one(a.field())));
        if (!cochain_b(phi, args).is_zero()) {
            ok = false;
            if (counterexample) *counterexample = tuple_str(a, t);
            return false;
        }
        return true;
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Group cocycles

namespace {

// delta c (g_1..g_{n+1}) with trivial coefficients
template <class G, class Mul, class Val>
Scalar group_delta(const FieldSpec& fs, int n, const std::vector<G>& args, const Mul& mul,
                   const Val& val) {
    Scalar acc = Scalar::zero(fs);
    {
        std::vector<G> rest(args.begin() + 1, args.end());
        acc += val(rest);
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<G> merged;
        for (int j = 0; j < static_cast<int>(args.size()); ++j) {
            if (j == i - 1) {
                merged.push_back(mul(args[static_cast<std::size_t>(i - 1)],
                                     args[static_cast<std::size_t>(i)]));
                ++j;
            } else {
                merged.push_back(args[static_cast<std::size_t>(j)]);
            }
        }
        Scalar v = val(merged);
        acc += (i % 2) ? -v : v;
    }
    {
        std::vector<G> head(args.begin(), args.end() - 1);
        Scalar v = val(head);
        acc += ((n + 1) % 2) ? -v : v;
    }
    return acc;
}

} // namespace

void validate_group_cocycle(const FieldSpec& fs, const FiniteGroupCocycle& c) {
    const FiniteGroup& g = *c.group;
    const int n = c.degree;
    const int ng = static_cast<int>(g.labels.size());
    if (n == 0) return; // empty-argument cochains are exempt from normalization
    std::vector<int> tuple(static_cast<std::size_t>(n));
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= ng;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t tmp = idx;
        for (int j = n - 1; j >= 0; --j) {
            tuple[static_cast<std::size_t>(j)] = static_cast<int>(tmp % ng);
            tmp /= ng;
        }
        bool has_e = false;
        int prod = g.identity;
        for (int v : tuple) {
            if (v == g.identity) has_e = true;
            prod = g.mult[static_cast<std::size_t>(prod)][static_cast<std::size_t>(v)];
        }
        if ((has_e || prod == g.identity) && !c.values(tuple).is_zero())
            throw validation_error("NotNormalized", "tuple index " + std::to_string(idx));
    }
    std::vector<int> args(static_cast<std::size_t>(n + 1));
    total *= ng;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t tmp = idx;
        for (int j = n; j >= 0; --j) {
            args[static_cast<std::size_t>(j)] = static_cast<int>(tmp % ng);
            tmp /= ng;
        }
        Scalar d = group_delta(
            fs, n, args,
            [&](int x, int y) { return g.mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; },
            [&](const std::vector<int>& t) { return c.values(t); });
        if (!d.is_zero())
            throw validation_error("NotAGroupCocycle", "tuple index " + std::to_string(idx));
    }
}

void validate_group_cocycle(const FieldSpec& fs, const LatticeGroupCocycle& c,
                            const std::vector<BLabel>& window) {
    const int n = c.degree;
    if (n == 0) return;
    auto is_e = [&](const BLabel& v) {
        for (auto x : v)
            if (x != 0) return false;
        return true;
    };
    auto add = [&](const BLabel& x, const BLabel& y) {
        BLabel r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
        return r;
    };
    std::string fail;
    for_each_tuple(window, n, [&](const std::vector<BLabel>& t) {
        bool has_e = false;
        BLabel prod(static_cast<std::size_t>(c.rank), 0);
        for (const auto& v : t) {
            if (is_e(v)) has_e = true;
            prod = add(prod, v);
        }
        if ((has_e || is_e(prod)) && !c.values(t).is_zero()) {
            fail = "normalization fails";
            return false;
        }
        return true;
    });
    if (!fail.empty()) throw validation_error("NotNormalized", fail);
    for_each_tuple(window, n + 1, [&](const std::vector<BLabel>& t) {
        Scalar d = group_delta(fs, n, t, add,
                               [&](const std::vector<BLabel>& x) { return c.values(x); });
        if (!d.is_zero()) {
            fail = "cocycle identity fails";
            return false;
        }
        return true;
    });
    if (!fail.empty()) throw validation_error("NotAGroupCocycle", fail);
}

FinCochain group_cocycle_to_cyclic(const Algebra& group_alg, const FiniteGroup& g,
                                   const FiniteGroupCocycle& c) {
    validate_group_cocycle(group_alg.field(), c);
    const FiniteGroup* gp = c.group;
    auto values = c.values;
    const FieldSpec fs = group_alg.field();
    FinCochain phi = FinCochain::rule(
        group_alg, c.degree, [gp, values, fs](const std::vector<int>& tuple) {
            int prod = gp->identity;
            for (int v : tuple)
                prod = gp->mult[static_cast<std::size_t>(prod)][static_cast<std::size_t>(v)];
            if (prod != gp->identity) return Scalar::zero(fs);
            std::vector<int> rest(tuple.begin() + 1, tuple.end());
            return values(rest);
        });
    (void)g;
    return validate_cyclic_cocycle(std::move(phi));
}

BasedCochain group_cocycle_to_cyclic(const LatticeAlgebra& a, const LatticeGroupCocycle& c,
                                     const std::vector<BLabel>& validation_window) {
    validate_group_cocycle(a.field(), c, validation_window);
    auto values = c.values;
    const FieldSpec fs = a.field();
    const int rank = c.rank;
    BasedCochain phi = BasedCochain::rule(
        a, c.degree, [values, fs, rank](const std::vector<BLabel>& tuple) {
            BLabel prod(static_cast<std::size_t>(rank), 0);
            for (const auto& v : tuple)
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += v[i];
            for (auto x : prod)
                if (x != 0) return Scalar::zero(fs);
            std::vector<BLabel> rest(tuple.begin() + 1, tuple.end());
            return values(rest);
        });
    return validate_cyclic_cocycle(std::move(phi), validation_window);
}

// ---------------------------------------------------------------------------
// Lie action cocycles

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

} // namespace

FinCochain lie_action_to_cyclic(const Trace& tau, const std::vector<Derivation>& ds,
                                const std::map<std::vector<int>, Scalar>& wedge,
                                bool require_cyclic) {
    const Algebra& a = *tau.alg;
    auto inv = check_invariant_trace(tau, ds);
    if (!inv.invariant) throw validation_error("NotInvariant", inv.counterexample);
    int n = wedge.empty() ? 0 : static_cast<int>(wedge.begin()->first.size());
    for (const auto& [subset, coeff] : wedge) {
        if (static_cast<int>(subset.size()) != n) throw error("mixed wedge degrees");
        (void)coeff;
    }
    auto perms = permutations_of(n);
    Trace tau_copy = tau;
    std::vector<Derivation> ds_copy = ds;
    auto wedge_copy = wedge;
    const Algebra* ap = &a;
    FinCochain phi = FinCochain::rule(
        a, n, [tau_copy, ds_copy, wedge_copy, perms, ap, n](const std::vector<int>& tuple) {
            Scalar acc = Scalar::zero(ap->field());
            for (const auto& [subset, coeff] : wedge_copy) {
                for (const auto& p : perms) {
                    Element prod = ap->basis(tuple[0]);
                    for (int j = 1; j <= n; ++j) {
                        const Derivation& d =
                            ds_copy[static_cast<std::size_t>(subset[static_cast<std::size_t>(
                                p[static_cast<std::size_t>(j - 1)])])];
                        prod = ap->mul(prod, d(ap->basis(tuple[static_cast<std::size_t>(j)])));
                    }
                    Scalar v = coeff * tau_copy(prod);
                    acc += perm_sign(p) > 0 ? v : -v;
                }
            }
            return acc;
        });
    if (require_cyclic) return validate_cyclic_cocycle(std::move(phi));
    return phi;
}

BasedCochain lie_action_to_cyclic(const BasedTrace& tau, const std::vector<BasedDerivation>& ds,
                                  const std::map<std::vector<int>, Scalar>& wedge,
                                  const std::vector<BLabel>& window, bool require_cyclic) {
    const BasedAlgebra& a = *tau.alg;
    auto inv = check_invariant_trace(tau, ds, window);
    if (!inv.invariant) throw validation_error("NotInvariant", inv.counterexample);
    int n = wedge.empty() ? 0 : static_cast<int>(wedge.begin()->first.size());
    auto perms = permutations_of(n);
    BasedTrace tau_copy = tau;
    std::vector<BasedDerivation> ds_copy = ds;
    auto wedge_copy = wedge;
    const BasedAlgebra* ap = &a;
    BasedCochain phi = BasedCochain::rule(
        a, n, [tau_copy, ds_copy, wedge_copy, perms, ap, n](const std::vector<BLabel>& tuple) {
            Scalar acc = Scalar::zero(ap->field());
            for (const auto& [subset, coeff] : wedge_copy) {
                for (const auto& p : perms) {
                    BasedElement prod = ap->monomial(tuple[0], Scalar::one(ap->field()));
                    for (int j = 1; j <= n; ++j) {
                        const BasedDerivation& d =
                            ds_copy[static_cast<std::size_t>(subset[static_cast<std::size_t>(
                                p[static_cast<std::size_t>(j - 1)])])];
                        prod = prod * d(ap->monomial(tuple[static_cast<std::size_t>(j)],
                                                     Scalar::one(ap->field())));
                    }
                    Scalar v = coeff * tau_copy(prod);
                    acc += perm_sign(p) > 0 ? v : -v;
                }
            }
            return acc;
        });
    if (require_cyclic) return validate_cyclic_cocycle(std::move(phi), window);
    return phi;
}

// ---------------------------------------------------------------------------
// Coboundaries

FinCochain coboundary(const FinCochain& phi) {
    const Algebra* a = &phi.carrier();
    FinCochain copy = phi;
    return FinCochain::rule(*a, phi.degree() + 1, [copy, a](const std::vector<int>& tuple) {
        std::vector<Element> args;
        args.reserve(tuple.size());
        for (int i : tuple) args.push_back(a->basis(i));
        return cochain_b(copy, args);
    });
}

BasedCochain coboundary(const BasedCochain& phi) {
    const BasedAlgebra* a = &phi.carrier();
    BasedCochain copy = phi;
    return BasedCochain::rule(*a, phi.degree() + 1, [copy, a](const std::vector<BLabel>& tuple) {
        std::vector<BasedElement> args;
        args.reserve(tuple.size());
        for (const auto& l : tuple) args.push_back(a->monomial(l, Scalar::one(a->field())));
        return cochain_b(copy, args);
    });
}

// ---------------------------------------------------------------------------
// Cyclic cochain basis (dense tables) for property tests

std::vector<std::vector<Scalar>> cyclic_cochain_basis(const Algebra& a, int n,
                                                      std::int64_t size_cap) {
    ChainContext ctx(a, size_cap);
    std::int64_t dim = ctx.checked_dim(n);
    SparseMatrix m = SparseMatrix::identity(a.field(), dim) -
                     ctx.matrix(ChainOp::lambda, n).transpose();
    auto rk = sparse_rank_kernel(m);
    std::vector<std::vector<Scalar>> out;
    for (const auto& v : rk.kernel) {
        std::vector<Scalar> dense_vals(static_cast<std::size_t>(dim), Scalar::zero(a.field()));
        for (const auto& [i, c] : v.entries) dense_vals[static_cast<std::size_t>(i)] = c;
        out.push_back(std::move(dense_vals));
    }
    return out;
}

} // namespace cychom
