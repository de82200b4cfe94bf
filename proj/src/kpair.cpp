#include "cychom/kpair.hpp"

namespace cychom {

// ---------------------------------------------------------------------------
// Matrix helpers

template <class Alg, class Elem>
AlgMat<Alg, Elem> make_alg_mat(const Alg& a, int k) {
    AlgMat<Alg, Elem> m;
    m.alg = &a;
    m.k = k;
    m.entries.assign(static_cast<std::size_t>(k),
                     std::vector<Elem>(static_cast<std::size_t>(k), a.zero()));
    return m;
}

template <class Alg, class Elem>
AlgMat<Alg, Elem> identity_mat(const Alg& a, int k) {
    auto m = make_alg_mat<Alg, Elem>(a, k);
    for (int i = 0; i < k; ++i)
        m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = a.one();
    return m;
}

template <class Alg, class Elem>
AlgMat<Alg, Elem> mat_mul(const AlgMat<Alg, Elem>& x, const AlgMat<Alg, Elem>& y) {
    if (x.alg != y.alg || x.k != y.k) throw carrier_mismatch();
    auto r = make_alg_mat<Alg, Elem>(*x.alg, x.k);
    for (int i = 0; i < x.k; ++i)
        for (int j = 0; j < x.k; ++j) {
            Elem acc = x.alg->zero();
            for (int l = 0; l < x.k; ++l) acc = acc + x.at(i, l) * y.at(l, j);
            r.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    return r;
}

template <class Alg, class Elem>
bool mat_eq(const AlgMat<Alg, Elem>& x, const AlgMat<Alg, Elem>& y) {
    if (x.alg != y.alg || x.k != y.k) return false;
    for (int i = 0; i < x.k; ++i)
        for (int j = 0; j < x.k; ++j)
            if (!(x.at(i, j) == y.at(i, j))) return false;
    return true;
}

template <class Alg, class Elem>
AlgMat<Alg, Elem> certify_idempotent(AlgMat<Alg, Elem> e) {
    if (!mat_eq(mat_mul(e, e), e)) throw validation_error("NotIdempotent", "e*e != e");
    e.idempotent_certified = true;
    return e;
}

template <class Alg, class Elem>
AlgMat<Alg, Elem> certify_invertible(AlgMat<Alg, Elem> u,
                                     std::vector<std::vector<Elem>> witness) {
    AlgMat<Alg, Elem> w;
    w.alg = u.alg;
    w.k = u.k;
    w.entries = witness;
    auto id = identity_mat<Alg, Elem>(*u.alg, u.k);
    if (!mat_eq(mat_mul(u, w), id) || !mat_eq(mat_mul(w, u), id))
        throw validation_error("NotInvertible", "witness is not a two-sided inverse");
    u.invertible_certified = true;
    u.inverse = std::move(witness);
    return u;
}

// explicit instantiations
template struct AlgMat<Algebra, Element>;
template struct AlgMat<BasedAlgebra, BasedElement>;
template AlgMat<Algebra, Element> make_alg_mat<Algebra, Element>(const Algebra&, int);
template AlgMat<BasedAlgebra, BasedElement> make_alg_mat<BasedAlgebra, BasedElement>(
    const BasedAlgebra&, int);
template AlgMat<Algebra, Element> identity_mat<Algebra, Element>(const Algebra&, int);
template AlgMat<BasedAlgebra, BasedElement> identity_mat<BasedAlgebra, BasedElement>(
    const BasedAlgebra&, int);
template AlgMat<Algebra, Element> mat_mul(const AlgMat<Algebra, Element>&,
                                          const AlgMat<Algebra, Element>&);
template AlgMat<BasedAlgebra, BasedElement> mat_mul(const AlgMat<BasedAlgebra, BasedElement>&,
                                                    const AlgMat<BasedAlgebra, BasedElement>&);
template bool mat_eq(const AlgMat<Algebra, Element>&, const AlgMat<Algebra, Element>&);
template bool mat_eq(const AlgMat<BasedAlgebra, BasedElement>&,
                     const AlgMat<BasedAlgebra, BasedElement>&);
template AlgMat<Algebra, Element> certify_idempotent(AlgMat<Algebra, Element>);
template AlgMat<BasedAlgebra, BasedElement> certify_idempotent(AlgMat<BasedAlgebra, BasedElement>);
template AlgMat<Algebra, Element> certify_invertible(AlgMat<Algebra, Element>,
                                                     std::vector<std::vector<Element>>);
template AlgMat<BasedAlgebra, BasedElement> certify_invertible(
    AlgMat<BasedAlgebra, BasedElement>, std::vector<std::vector<BasedElement>>);

// ---------------------------------------------------------------------------
// Chern chains

namespace {

// expands the generalized-trace contraction of the given cyclic factors
// (factors[j] supplies the matrix used in slot j) into a chain
SparseVec trace_contract(const Algebra& a, const std::vector<const FinMat*>& factors,
                         std::int64_t size_cap) {
    const int m = static_cast<int>(factors.size()); // chain degree + 1
    ChainContext ctx(a, size_cap);
    std::int64_t dim = ctx.checked_dim(m - 1);
    (void)dim;
    const int k = factors[0]->k;
    SparseVec chain;
    // sum over index cycles (i_0, ..., i_{m-1}); tensor factor j is
    // entries[i_j][i_{j+1 mod m}] of factors[j]
    std::vector<int> cyc(static_cast<std::size_t>(m), 0);
    std::function<void(int)> rec_cycle = [&](int pos) {
        if (pos == m) {
            // expand the tensor product of the chosen elements
            std::vector<const Element*> elems;
            for (int j = 0; j < m; ++j)
                elems.push_back(&factors[static_cast<std::size_t>(j)]->at(
                    cyc[static_cast<std::size_t>(j)], cyc[static_cast<std::size_t>((j + 1) % m)]));
            std::vector<int> tuple(static_cast<std::size_t>(m));
            std::function<void(int, const Scalar&)> rec_tensor = [&](int p, const Scalar& coeff) {
                if (p == m) {
                    chain.push(ctx.encode(tuple), coeff);
                    return;
                }
                for (int r = 0; r < a.dim(); ++r) {
                    const Scalar& c = elems[static_cast<std::size_t>(p)]->coeffs[static_cast<std::size_t>(r)];
                    if (c.is_zero()) continue;
                    tuple[static_cast<std::size_t>(p)] = r;
                    rec_tensor(p + 1, coeff * c);
                }
            };
            rec_tensor(0, Scalar::one(a.field()));
            return;
        }
        for (int i = 0; i < k; ++i) {
            cyc[static_cast<std::size_t>(pos)] = i;
            rec_cycle(pos + 1);
        }
    };
    rec_cycle(0);
    chain.normalize();
    return chain;
}

} // namespace

SparseVec chern_even(const FinMat& e, int n, std::int64_t size_cap) {
    if (!e.idempotent_certified) throw no_certificate("chern_even needs an idempotent");
    std::vector<const FinMat*> factors(static_cast<std::size_t>(2 * n + 1), &e);
    return trace_contract(*e.alg, factors, size_cap);
}

SparseVec chern_odd(const FinMat& u, int n, std::int64_t size_cap) {
    if (!u.invertible_certified) throw no_certificate("chern_odd needs an invertible");
    // alternating factors u^-1 - 1, u - 1 (2n+2 of them)
    FinMat um = make_alg_mat<Algebra, Element>(*u.alg, u.k);
    FinMat uinvm = make_alg_mat<Algebra, Element>(*u.alg, u.k);
    auto id = identity_mat<Algebra, Element>(*u.alg, u.k);
    for (int i = 0; i < u.k; ++i)
        for (int j = 0; j < u.k; ++j) {
            um.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u.at(i, j) - id.at(i, j);
            uinvm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u.inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - id.at(i, j);
        }
    std::vector<const FinMat*> factors;
    for (int j = 0; j < 2 * n + 2; ++j) factors.push_back(j % 2 == 0 ? &uinvm : &um);
    return trace_contract(*u.alg, factors, size_cap);
}

// ---------------------------------------------------------------------------
// Pairings

namespace {

template <class Cochain, class Alg, class Elem>
Scalar pair_matrix(const Cochain& phi, const std::vector<const AlgMat<Alg, Elem>*>& factors) {
    const Alg& a = *factors[0]->alg;
    const int m = static_cast<int>(factors.size());
    const int k = factors[0]->k;
    Scalar acc = Scalar::zero(a.field());
    std::vector<int> cyc(static_cast<std::size_t>(m), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == m) {
            std::vector<Elem> args;
            args.reserve(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                args.push_back(factors[static_cast<std::size_t>(j)]->at(
                    cyc[static_cast<std::size_t>(j)], cyc[static_cast<std::size_t>((j + 1) % m)]));
            acc += phi(std::span<const Elem>(args.data(), args.size()));
            return;
        }
        for (int i = 0; i < k; ++i) {
            cyc[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1);
        }
    };
    rec(0);
    return acc;
}

template <class Cochain, class Alg, class Elem>
Scalar pair_even_impl(const Cochain& phi, const AlgMat<Alg, Elem>& e) {
    if (!e.idempotent_certified) throw no_certificate("even pairing needs an idempotent");
    if (phi.degree() % 2 != 0) throw degree_mismatch("even pairing needs an even cocycle");
    if (&phi.carrier() != e.alg) throw carrier_mismatch();
    std::vector<const AlgMat<Alg, Elem>*> factors(static_cast<std::size_t>(phi.degree() + 1), &e);
    return pair_matrix<Cochain, Alg, Elem>(phi, factors);
}

template <class Cochain, class Alg, class Elem>
Scalar pair_odd_impl(const Cochain& phi, const AlgMat<Alg, Elem>& u) {
    if (!u.invertible_certified) throw no_certificate("odd pairing needs an invertible");
    if (phi.degree() % 2 != 1) throw degree_mismatch("odd pairing needs an odd cocycle");
    if (&phi.carrier() != u.alg) throw carrier_mismatch();
    const Alg& a = *u.alg;
    auto id = identity_mat<Alg, Elem>(a, u.k);
    AlgMat<Alg, Elem> um = make_alg_mat<Alg, Elem>(a, u.k);
    AlgMat<Alg, Elem> uinvm = make_alg_mat<Alg, Elem>(a, u.k);
    for (int i = 0; i < u.k; ++i)
        for (int j = 0; j < u.k; ++j) {
            um.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u.at(i, j) - id.at(i, j);
            uinvm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u.inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - id.at(i, j);
        }
    std::vector<const AlgMat<Alg, Elem>*> factors;
    for (int j = 0; j < phi.degree() + 1; ++j) factors.push_back(j % 2 == 0 ? &uinvm : &um);
    return pair_matrix<Cochain, Alg, Elem>(phi, factors);
}

} // namespace

Scalar pair_even(const FinCochain& phi, const FinMat& e) {
    return pair_even_impl<FinCochain, Algebra, Element>(phi, e);
}
Scalar pair_even(const BasedCochain& phi, const BasedMat& e) {
    return pair_even_impl<BasedCochain, BasedAlgebra, BasedElement>(phi, e);
}
Scalar pair_odd(const FinCochain& phi, const FinMat& u) {
    return pair_odd_impl<FinCochain, Algebra, Element>(phi, u);
}
Scalar pair_odd(const BasedCochain& phi, const BasedMat& u) {
    return pair_odd_impl<BasedCochain, BasedAlgebra, BasedElement>(phi, u);
}

// ---------------------------------------------------------------------------
// Murray-von Neumann equivalence

namespace {

template <class Alg, class Elem>
MvnVerdict mvn_impl(const AlgMat<Alg, Elem>& e, const AlgMat<Alg, Elem>& f,
                    const AlgMat<Alg, Elem>& u, const AlgMat<Alg, Elem>& v) {
    if (e.alg != f.alg || e.alg != u.alg || e.alg != v.alg) throw carrier_mismatch();
    MvnVerdict out;
    bool uv = mat_eq(mat_mul(u, v), e);
    bool vu = mat_eq(mat_mul(v, u), f);
    out.equivalent = uv && vu;
    if (!uv) out.residual = "u v != e";
    else if (!vu) out.residual = "v u != f";
    return out;
}

} // namespace

MvnVerdict mvn_check(const FinMat& e, const FinMat& f, const FinMat& u, const FinMat& v) {
    return mvn_impl(e, f, u, v);
}
MvnVerdict mvn_check(const BasedMat& e, const BasedMat& f, const BasedMat& u, const BasedMat& v) {
    return mvn_impl(e, f, u, v);
}

// ---------------------------------------------------------------------------
// Conjugation invariance over Q(t)

ConjugationVerdict conjugation_invariance_test(const FinCochain& phi, const FinMat& e,
                                               const FinMat& u) {
    if (!u.invertible_certified) throw no_certificate("conjugation family needs a witness");
    if (!e.idempotent_certified) throw no_certificate("conjugation family needs an idempotent");
    if (!e.alg->field().func_field)
        throw error("conjugation families live over a rational-function field");
    FinMat uinv;
    uinv.alg = u.alg;
    uinv.k = u.k;
    uinv.entries = u.inverse;
    FinMat conj = mat_mul(mat_mul(u, e), uinv);
    conj = certify_idempotent(std::move(conj)); // u e u^-1 is idempotent again
    ConjugationVerdict out{false, false, Scalar::zero(e.alg->field()),
                           Scalar::zero(e.alg->field())};
    out.value = pair_even(phi, conj);
    out.base_value = pair_even(phi, e);
    out.constant = out.value.is_constant();
    out.matches_base = out.value == out.base_value;
    return out;
}

// ---------------------------------------------------------------------------
// Dimension functions

Scalar dimension_function(const Trace& tau, const FinMat& e) {
    if (!e.idempotent_certified) throw no_certificate("dimension function needs an idempotent");
    Scalar acc = Scalar::zero(e.alg->field());
    for (int i = 0; i < e.k; ++i) acc += tau(e.at(i, i));
    return acc;
}

Scalar dimension_function(const BasedTrace& tau, const BasedMat& e) {
    if (!e.idempotent_certified) throw no_certificate("dimension function needs an idempotent");
    Scalar acc = Scalar::zero(e.alg->field());
    for (int i = 0; i < e.k; ++i) acc += tau(e.at(i, i));
    return acc;
}

} // namespace cychom
