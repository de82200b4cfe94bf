// Matrices over an algebra with idempotent / invertibility certificates,
// Chern character chains, the even and odd index pairings, Murray-von
// Neumann equivalence, conjugation families, and dimension functions.
#pragma once

#include "cychom/cochain.hpp"

namespace cychom {

// k x k matrix over a finite or based algebra.  Certificates are stamped by
// the certify_* functions after checking the defining equations exactly.
template <class Alg, class Elem>
struct AlgMat {
    const Alg* alg = nullptr;
    int k = 0;
    std::vector<std::vector<Elem>> entries;
    bool idempotent_certified = false;
    bool invertible_certified = false;
    std::vector<std::vector<Elem>> inverse; // witness, when invertible_certified

    const Elem& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

using FinMat = AlgMat<Algebra, Element>;
using BasedMat = AlgMat<BasedAlgebra, BasedElement>;

template <class Alg, class Elem>
AlgMat<Alg, Elem> make_alg_mat(const Alg& a, int k);
template <class Alg, class Elem>
AlgMat<Alg, Elem> identity_mat(const Alg& a, int k);
template <class Alg, class Elem>
AlgMat<Alg, Elem> mat_mul(const AlgMat<Alg, Elem>& x, const AlgMat<Alg, Elem>& y);
template <class Alg, class Elem>
bool mat_eq(const AlgMat<Alg, Elem>& x, const AlgMat<Alg, Elem>& y);

// e*e == e, exactly; throws validation_error("NotIdempotent") otherwise.
template <class Alg, class Elem>
AlgMat<Alg, Elem> certify_idempotent(AlgMat<Alg, Elem> e);
// u*w == w*u == 1 for the provided witness w.
template <class Alg, class Elem>
AlgMat<Alg, Elem> certify_invertible(AlgMat<Alg, Elem> u, std::vector<std::vector<Elem>> witness);

extern template struct AlgMat<Algebra, Element>;
extern template struct AlgMat<BasedAlgebra, BasedElement>;

// ---------------------------------------------------------------------------
// Chern character chains (finite carrier): exact sparse chains in C_m(A).

// Tr(e (x) e ... (x) e), 2n+1 factors, as a chain in C_{2n}(A).
SparseVec chern_even(const FinMat& e, int n, std::int64_t size_cap = 200000);
// Tr((u^-1 - 1) (x) (u - 1) (x) ...), 2n+2 factors, a chain in C_{2n+1}(A).
SparseVec chern_odd(const FinMat& u, int n, std::int64_t size_cap = 200000);

// ---------------------------------------------------------------------------
// Pairings: <phi, e> = (tr # phi)(e, ..., e) and the odd analogue.

Scalar pair_even(const FinCochain& phi, const FinMat& e);
Scalar pair_even(const BasedCochain& phi, const BasedMat& e);
Scalar pair_odd(const FinCochain& phi, const FinMat& u);
Scalar pair_odd(const BasedCochain& phi, const BasedMat& u);

// ---------------------------------------------------------------------------
// Murray-von Neumann equivalence: u v = e and v u = f, exactly.

struct MvnVerdict {
    bool equivalent = false;
    std::string residual; // which equation failed
};

MvnVerdict mvn_check(const FinMat& e, const FinMat& f, const FinMat& u, const FinMat& v);
MvnVerdict mvn_check(const BasedMat& e, const BasedMat& f, const BasedMat& u, const BasedMat& v);

// ---------------------------------------------------------------------------
// Conjugation families over a rational-function field

struct ConjugationVerdict {
    bool constant = false;
    bool matches_base = false;
    Scalar value;          // the pairing <phi, u e u^-1> as a function of t
    Scalar base_value;     // <phi, e>
};

// Requires the carrier's field to be a function field and u invertible with
// a certified witness; evaluates the pairing of phi against u e u^-1 and
// checks it is the constant <phi, e>.
ConjugationVerdict conjugation_invariance_test(const FinCochain& phi, const FinMat& e,
                                               const FinMat& u);

// ---------------------------------------------------------------------------
// Dimension functions

Scalar dimension_function(const Trace& tau, const FinMat& e);
Scalar dimension_function(const BasedTrace& tau, const BasedMat& e);

} // namespace cychom
