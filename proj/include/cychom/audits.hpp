// Mechanical verification suites: the chain-level operator identities, the
// SBI long exact sequence, Morita trace/inclusion maps, inner automorphism
// and inner derivation actions on homology, and the Chevalley-Eilenberg
// differential on a Lie algebra of derivations.
#pragma once

#include "cychom/homology.hpp"

namespace cychom {

struct IdentityCheck {
    std::string identity;
    int degree = 0;
    bool pass = false;
    bool skipped = false; // space exceeded the cap
    std::string detail;
};

// Verifies, per degree n <= max_n (streamed column-by-column, exact):
//   b b = 0, b' b' = 0, b(1-lambda) = (1-lambda)b', N b = b' N,
//   b' s + s b' = id, B B = 0, b B + B b = 0,
// and row exactness via (1-lambda)N = N(1-lambda) = 0 together with
// rank(1-lambda) + rank(N) = dim C_n.
std::vector<IdentityCheck> operator_identity_audit(const Algebra& a, int max_n,
                                                   std::int64_t size_cap = 20000);

bool all_pass(const std::vector<IdentityCheck>& checks);

struct SbiNode {
    int degree = 0;          // the n of the node's group
    std::string node;        // "HC_n (I->S)", "HC_n (S->B)", "HH_n (B->I)"
    std::int64_t homology_dim = 0;
    std::int64_t rank_in = 0;
    std::int64_t rank_out = 0;
    bool composite_zero = false;
    bool exact = false;
};

struct SbiReport {
    bool all_exact = true;
    std::vector<SbiNode> nodes;
    std::map<std::string, std::int64_t> ranks;
};

// Audits exactness of ... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ...
// at every node with degree <= max_n, using chain-level I (column-0
// inclusion), S (truncation) and B (the Connes boundary applied to the
// column-0 component of a total cycle).
SbiReport sbi_audit(const Algebra& a, int max_n, std::int64_t size_cap = 20000);

// Chain-level generalized trace C_n(M_k(A)) -> C_n(A) and the corner
// inclusion in the other direction (basis indexing as built by matrix_over).
SparseMatrix generalized_trace_chain(const Algebra& a, int k, int n,
                                     std::int64_t size_cap = 20000);
SparseMatrix inclusion_chain(const Algebra& a, int k, int n, std::int64_t size_cap = 20000);

struct MoritaReport {
    bool trace_splits_inclusion = false; // Tr o i_* = id, all degrees
    bool chain_maps_commute = false;     // both commute with b
    bool hh_dims_match = false;
    bool induced_iso = false;            // Tr_* is an isomorphism on HH
    std::vector<std::int64_t> hh_a, hh_mk;

    bool all() const {
        return trace_splits_inclusion && chain_maps_commute && hh_dims_match && induced_iso;
    }
};

MoritaReport morita_audit(const Algebra& a, int k, int max_n, std::int64_t size_cap = 20000);

struct InnerActionReport {
    bool theta_acts_as_identity = true; // on HH up to max degree
    bool la_acts_as_zero = true;
    std::vector<std::string> details;
};

// Conjugation by an invertible u and the summed commutator insertion L_a;
// verifies (Theta - id) and L_a send cycles into boundaries in each degree.
InnerActionReport inner_action_audit(const Algebra& a, const Element& u, const Element& x,
                                     int max_n, std::int64_t size_cap = 20000);

// Trivial-coefficient Chevalley-Eilenberg differential Lambda^n -> Lambda^{n-1}
// on the span of the given derivations (bracket closure checked; throws
// validation_error("NotClosedUnderBracket")).
SparseMatrix chevalley_eilenberg_differential(const std::vector<Derivation>& ds, int n);

// Same, for an abstract Lie algebra given by structure constants
// [x_i, x_j] = sum_k c[i][j][k] x_k.
SparseMatrix chevalley_eilenberg_differential(const FieldSpec& fs,
                                              const std::vector<std::vector<std::vector<Scalar>>>& bracket,
                                              int n);

// Structure constants of the Lie algebra spanned by the derivations.
std::vector<std::vector<std::vector<Scalar>>> derivation_bracket_constants(
    const std::vector<Derivation>& ds);

} // namespace cychom
