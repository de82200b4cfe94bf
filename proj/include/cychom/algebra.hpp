// Finite-dimensional associative unital algebras presented by structure
// constants, with elements, traces and derivations validated against the
// defining identities.
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cychom/sparse.hpp"

namespace cychom {

class Algebra;

// Element of a finite-dimensional algebra, dense coefficient vector.
struct Element {
    const Algebra* alg = nullptr;
    std::vector<Scalar> coeffs;

    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const; // algebra product
    Element scaled(const Scalar& s) const;
    bool operator==(const Element& o) const { return coeffs == o.coeffs; }
};

// Sparse structure-constant table: (i, j) -> sum_k c_{ij}^k e_k.
using StructRow = std::vector<std::pair<int, Scalar>>;

class Algebra {
public:
    // Validates associativity on all basis triples and the two unit laws;
    // throws validation_error("NotAssociative", ...) / ("BadUnit", ...).
    Algebra(FieldSpec fs, std::vector<std::string> labels, std::vector<Scalar> unit,
            std::vector<std::vector<StructRow>> structure, std::string name = "");

    const FieldSpec& field() const { return fs_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int label_index(const std::string& l) const; // -1 if absent
    const std::vector<Scalar>& unit_coeffs() const { return unit_; }
    const StructRow& basis_product(int i, int j) const {
        return structure_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Element zero() const;
    Element one() const;
    Element basis(int i) const;
    Element element(const std::unordered_map<std::string, Scalar>& coeffs) const;
    Element mul(const Element& a, const Element& b) const;

    // Matrix of left multiplication by a in the chosen basis.
    std::vector<std::vector<Scalar>> left_regular(const Element& a) const;

    // dim of A/[A,A]; degree-zero Hochschild homology computed directly.
    std::int64_t commutator_quotient_dim() const;

private:
    FieldSpec fs_;
    std::vector<std::string> labels_;
    std::vector<Scalar> unit_;
    std::vector<std::vector<StructRow>> structure_;
    std::string name_;
    std::unordered_map<std::string, int> index_;

    void validate() const;
};

// Trace functional tau with tau(ab) = tau(ba), validated exhaustively.
struct Trace {
    const Algebra* alg = nullptr;
    std::vector<Scalar> values; // value on each basis element

    Scalar operator()(const Element& x) const;
};

Trace validate_trace(const Algebra& a, std::vector<Scalar> values);

// Derivation D with D(ab) = D(a)b + aD(b), stored as its matrix on the basis.
struct Derivation {
    const Algebra* alg = nullptr;
    std::vector<std::vector<Scalar>> action; // column i = coefficients of D(e_i)

    Element operator()(const Element& x) const;
};

Derivation validate_derivation(const Algebra& a, std::vector<std::vector<Scalar>> action);

// Commutator [D1, D2]; always a derivation when the inputs are.
Derivation derivation_bracket(const Derivation& d1, const Derivation& d2);

// Inner derivation x -> ax - xa.
Derivation inner_derivation(const Algebra& a, const Element& x);

struct InvarianceVerdict {
    bool invariant = true;
    std::string counterexample; // basis label + derivation index when not
};

// tau(D(e_i)) == 0 for every listed derivation and basis label.
InvarianceVerdict check_invariant_trace(const Trace& tau, const std::vector<Derivation>& ds);

// Solves u * v = v * u = 1; nullopt when u is not invertible.
std::optional<Element> invert_element(const Element& u);

// Dense exact linear solve A x = b; nullopt if inconsistent (A square or not).
std::optional<std::vector<Scalar>> dense_solve(const FieldSpec& fs,
                                               std::vector<std::vector<Scalar>> a,
                                               std::vector<Scalar> b);

} // namespace cychom
