// Builders for the algebra gallery: matrix algebras, group and groupoid
// algebras, crossed products, truncated polynomials, sums and tensor
// products, finite and polynomial noncommutative tori, abelian extensions
// from 2-cochains, and rewriting-presented coordinate algebras.
#pragma once

#include <memory>
#include <optional>

#include "cychom/algebra.hpp"
#include "cychom/based.hpp"

namespace cychom {

// ---------------------------------------------------------------------------
// Group / groupoid / action data

struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mult; // mult[i][j] = index of g_i * g_j
    int identity = 0;
    std::vector<int> inverses;
};

// Checks the group axioms exhaustively; throws validation_error("NotAGroup").
void validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n); // n <= 5 is plenty at desk scale

struct GroupoidData {
    std::vector<std::string> objects;
    std::vector<std::string> morphisms;
    std::vector<int> source, target;               // per morphism
    std::map<std::pair<int, int>, int> compose;    // (g1,g2) -> g1∘g2, iff s(g1)=t(g2)
    std::vector<int> identity;                     // per object
    std::vector<int> inverse;                      // per morphism
};

void validate_groupoid(const GroupoidData& g); // throws validation_error("NotAGroupoid")

GroupoidData pairs_groupoid(int n);
// Connected groupoid on n objects whose isotropy group is g.
GroupoidData connected_groupoid(int n, const FiniteGroup& g);
GroupoidData disjoint_union(const GroupoidData& a, const GroupoidData& b);

// Finite group acting on a finite-dimensional algebra by automorphisms.
struct ActionData {
    FiniteGroup group;
    std::vector<std::vector<std::vector<Scalar>>> maps; // per element, dim x dim
};

// Unital automorphism + homomorphism checks against the target algebra;
// throws validation_error("NotAnAction", g) / ("NotAHomomorphism", (g,h)).
void validate_action(const Algebra& a, const ActionData& act);

// ---------------------------------------------------------------------------
// Bimodule data for abelian extensions

struct BimoduleData {
    std::vector<std::string> labels;                // basis of M
    std::vector<std::vector<std::vector<Scalar>>> left;  // per algebra basis index
    std::vector<std::vector<std::vector<Scalar>>> right;
};

void validate_bimodule(const Algebra& a, const BimoduleData& m); // "NotABimodule"

// ---------------------------------------------------------------------------
// Constructions (every output passes full validation)

std::shared_ptr<Algebra> matrix_algebra(const FieldSpec& f, int n);
std::shared_ptr<Algebra> group_algebra(const FieldSpec& f, const FiniteGroup& g);
std::shared_ptr<LatticeAlgebra> lattice_group_algebra(const FieldSpec& f, int rank);
std::shared_ptr<Algebra> groupoid_algebra(const FieldSpec& f, const GroupoidData& g);
std::shared_ptr<Algebra> truncated_poly(const FieldSpec& f, int m);
std::shared_ptr<Algebra> direct_sum(const Algebra& a, const Algebra& b);
std::shared_ptr<Algebra> tensor_product(const Algebra& a, const Algebra& b);
std::shared_ptr<Algebra> opposite(const Algebra& a);
std::shared_ptr<Algebra> matrix_over(const Algebra& a, int k); // M_k(A)
std::shared_ptr<Algebra> crossed_product(const Algebra& a, const ActionData& act);

// Finite Weyl torus: relations V U = zeta^p U V, U^q = V^q = 1 over Q(zeta_q)
// (plain Q for q <= 2).  Throws validation_error("NotCoprime") otherwise.
std::shared_ptr<Algebra> weyl_torus(int p, int q);

// Canonical trace of the finite torus: the coefficient of U^0 V^0.
Trace weyl_torus_trace(const Algebra& torus);

// Polynomial noncommutative torus over Q(t) bundled with its canonical trace
// and the two coordinate-scaling derivations, pre-validated on a window.
struct PolynomialTorus {
    std::shared_ptr<LatticeAlgebra> alg;
    BasedTrace tau;
    BasedDerivation x1, x2;
};
PolynomialTorus polynomial_torus(int validation_window = 2);

std::shared_ptr<RewritingAlgebra> rewriting_algebra(const FieldSpec& f,
                                                    std::vector<std::string> generators,
                                                    std::vector<RewritingAlgebra::Rule> rules,
                                                    std::int64_t fuel = 100000,
                                                    std::string name = "");

// The coordinate algebra of the 2-sphere over Q(zeta_4) presented by
// rewriting (commuting generators, x3^2 -> 1 - x1^2 - x2^2).
std::shared_ptr<RewritingAlgebra> sphere_algebra();

// Podles-sphere relations over Q(t) (t plays the deformation parameter).
std::shared_ptr<RewritingAlgebra> podles_algebra();

// A 2-cochain on A with values in M: f[i][j] = coefficients of f(e_i, e_j).
using TwoCochain = std::vector<std::vector<std::vector<Scalar>>>;

// Builds the algebra on A (+) M with product
//   (a,m)(a',m') = (aa', a m' + m a' + f(a,a')),
// discovering the unit; throws validation_error("NotACocycle", triple) when
// the product is not associative.
std::shared_ptr<Algebra> extension_from_2cocycle(const Algebra& a, const BimoduleData& m,
                                                 const TwoCochain& f);

} // namespace cychom
