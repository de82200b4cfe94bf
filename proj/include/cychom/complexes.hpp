// Chain-level operators of the Hochschild and cyclic theory: b, b', the
// signed cyclic permutation, its symmetrizer N, the extra degeneracy s, and
// the Connes boundary B, realized as exact sparse matrices on the tensor
// spaces C_n = A^(x)(n+1) indexed lexicographically.  Also assembles the two
// total complexes (cyclic bicomplex and (b,B)-bicomplex).
#pragma once

#include "cychom/algebra.hpp"
#include "cychom/constructions.hpp"

namespace cychom {

enum class ChainOp { b, b_prime, lambda, n_op, s, connes_b };

inline const char* chain_op_name(ChainOp op) {
    switch (op) {
        case ChainOp::b: return "b";
        case ChainOp::b_prime: return "b'";
        case ChainOp::lambda: return "lambda";
        case ChainOp::n_op: return "N";
        case ChainOp::s: return "s";
        case ChainOp::connes_b: return "B";
    }
    return "?";
}

// Operator factory for one algebra.  Columns are generated on demand so big
// identity checks can stream without materializing products.
class ChainContext {
public:
    explicit ChainContext(const Algebra& a, std::int64_t size_cap = 20000)
        : alg_(&a), cap_(size_cap) {}

    const Algebra& algebra() const { return *alg_; }
    std::int64_t size_cap() const { return cap_; }

    // dim C_n = d^(n+1); does not enforce the cap by itself.
    std::int64_t space_dim(int n) const;
    // Throws size_cap_error when dim C_n exceeds the cap.
    std::int64_t checked_dim(int n) const;

    std::vector<int> decode(int n, std::int64_t idx) const;
    std::int64_t encode(const std::vector<int>& tuple) const;

    // Column `idx` of the operator out of degree n.  Target degrees:
    // b, b': n-1;  lambda, N: n;  s, B: n+1.
    SparseVec column(ChainOp op, int n, std::int64_t idx) const;

    // Materialized operator matrix out of degree n (cap applies to the
    // larger of source/target dimension).
    SparseMatrix matrix(ChainOp op, int n) const;

    // Hochschild cochain differential on the deformation complex
    // C^n(A, A) = Hom(A^(x)n, A); returns the matrix C^n -> C^(n+1).
    SparseMatrix deformation_delta(int n) const;
    std::int64_t deformation_dim(int n) const; // d^(n+1)

private:
    const Algebra* alg_;
    std::int64_t cap_;

    void add_b_terms(int n, const std::vector<int>& t, bool include_last, SparseVec& out) const;
};

// A chain complex with explicit boundary matrices; consecutive boundaries
// are checked to compose to zero on construction.
struct ChainComplex {
    FieldSpec fs;
    std::vector<std::int64_t> dims;       // dims[n], 0 <= n <= max
    std::vector<SparseMatrix> boundary;   // boundary[n]: C_n -> C_{n-1}, n >= 1

    int max_degree() const { return static_cast<int>(dims.size()) - 1; }
    void verify();
};

// Hochschild complex (C_., b) up to degree max_n (boundaries up to max_n).
ChainComplex hochschild_complex(const ChainContext& ctx, int max_n);

// Total complex of the first-quadrant cyclic bicomplex (columns alternate
// b / -b' with horizontal maps 1-lambda and N), or of the (b,B)-bicomplex.
struct TotalComplex {
    enum class Kind { Cyclic, BB };
    Kind kind;
    FieldSpec fs;
    // blocks[m]: list of (chain_degree, offset) in the order they are laid
    // out inside Tot_m; for Cyclic the first block is column 0 (degree m).
    std::vector<std::vector<std::pair<int, std::int64_t>>> blocks;
    std::vector<std::int64_t> dims;
    std::vector<SparseMatrix> boundary; // D_m: Tot_m -> Tot_{m-1}, m >= 1

    int max_degree() const { return static_cast<int>(dims.size()) - 1; }
};

TotalComplex cyclic_total_complex(const ChainContext& ctx, int max_n, bool verify_squares = true);
TotalComplex bb_total_complex(const ChainContext& ctx, int max_n, bool verify_squares = true);

// Chain maps between these complexes (cyclic kind only):
// inclusion of the Hochschild complex as column 0,
SparseMatrix tot_inclusion_of_hochschild(const ChainContext& ctx, const TotalComplex& tot, int m);
// the periodicity truncation Tot_m -> Tot_{m-2} (drops the two top rows),
SparseMatrix tot_truncation(const TotalComplex& tot, int m);
// projection onto the column-0 component C_m.
SparseMatrix tot_top_projection(const ChainContext& ctx, const TotalComplex& tot, int m);

// delta f for a 2-cochain with values in a bimodule; returns an offending
// triple of basis labels when delta f != 0 (the independent route used to
// cross-check extension_from_2cocycle).
std::optional<std::string> two_cocycle_defect(const Algebra& a, const BimoduleData& m,
                                              const TwoCochain& f);

} // namespace cychom
