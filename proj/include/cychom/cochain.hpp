// Multilinear cochains on finite and based algebras: dense tables and rule
// cochains (trace-, Lie-action-, and group-cocycle-generated), with cyclic
// cocycle validation and the two cocycle-construction maps.
#pragma once

#include <functional>
#include <span>

#include "cychom/audits.hpp"
#include "cychom/based.hpp"

namespace cychom {

// Cochain on a finite-dimensional algebra.
class FinCochain {
public:
    static FinCochain dense(const Algebra& a, int degree, std::vector<Scalar> values);
    static FinCochain rule(const Algebra& a, int degree,
                           std::function<Scalar(const std::vector<int>&)> r);
    static FinCochain from_trace(const Trace& tau); // degree 0

    const Algebra& carrier() const { return *alg_; }
    int degree() const { return degree_; }
    bool cyclic_verified() const { return cyclic_verified_; }

    Scalar eval_basis(const std::vector<int>& tuple) const;
    Scalar operator()(std::span<const Element> args) const;

private:
    const Algebra* alg_ = nullptr;
    int degree_ = 0;
    bool dense_repr_ = false;
    std::vector<Scalar> values_;
    std::function<Scalar(const std::vector<int>&)> rule_;
    bool cyclic_verified_ = false;

    friend FinCochain validate_cyclic_cocycle(FinCochain phi);
};

// Checks the cyclic condition and b phi = 0 on the whole (finite) space;
// throws validation_error("NotCyclic"/"NotClosed") with a counterexample.
FinCochain validate_cyclic_cocycle(FinCochain phi);

// Hochschild-closedness alone (b phi = 0), no cyclicity requirement.
bool is_hochschild_cocycle(const FinCochain& phi, std::string* counterexample = nullptr);

// Cochain on a based algebra; evaluation is defined everywhere the carrier's
// product is, verification happens on explicit windows.
class BasedCochain {
public:
    static BasedCochain rule(const BasedAlgebra& a, int degree,
                             std::function<Scalar(const std::vector<BLabel>&)> r);
    static BasedCochain from_trace(const BasedTrace& tau); // degree 0

    const BasedAlgebra& carrier() const { return *alg_; }
    int degree() const { return degree_; }
    bool cyclic_verified() const { return cyclic_verified_; }
    const std::vector<BLabel>& verified_window() const { return window_; }

    Scalar eval_labels(const std::vector<BLabel>& tuple) const;
    Scalar operator()(std::span<const BasedElement> args) const;

private:
    const BasedAlgebra* alg_ = nullptr;
    int degree_ = 0;
    std::function<Scalar(const std::vector<BLabel>&)> rule_;
    bool cyclic_verified_ = false;
    std::vector<BLabel> window_;

    friend BasedCochain validate_cyclic_cocycle(BasedCochain phi, std::vector<BLabel> window);
};

BasedCochain validate_cyclic_cocycle(BasedCochain phi, std::vector<BLabel> window);
bool is_hochschild_cocycle(const BasedCochain& phi, const std::vector<BLabel>& window,
                           std::string* counterexample = nullptr);

// ---------------------------------------------------------------------------
// Group cocycles -> cyclic cocycles on the group algebra

struct FiniteGroupCocycle {
    const FiniteGroup* group = nullptr;
    int degree = 0;
    std::function<Scalar(const std::vector<int>&)> values; // on element indices
};

struct LatticeGroupCocycle {
    int rank = 0;
    int degree = 0;
    std::function<Scalar(const std::vector<BLabel>&)> values;
};

// Normalization (vanishing when an argument or the full product is the
// identity) and the group-cocycle identity, checked exhaustively (finite) or
// on the window; throws "NotNormalized" / "NotAGroupCocycle".
void validate_group_cocycle(const FieldSpec& fs, const FiniteGroupCocycle& c);
void validate_group_cocycle(const FieldSpec& fs, const LatticeGroupCocycle& c,
                            const std::vector<BLabel>& window);

// phi_c(g_0,...,g_n) = c(g_1,...,g_n) when g_0 g_1 ... g_n = e, else 0.
FinCochain group_cocycle_to_cyclic(const Algebra& group_alg, const FiniteGroup& g,
                                   const FiniteGroupCocycle& c);
BasedCochain group_cocycle_to_cyclic(const LatticeAlgebra& a, const LatticeGroupCocycle& c,
                                     const std::vector<BLabel>& validation_window);

// ---------------------------------------------------------------------------
// Lie action cocycles

// phi_c(a_0,...,a_n) = sum_sigma sgn(sigma) tau(a_0 X_{sigma(1)}(a_1) ...),
// extended linearly over the wedge components (subsets of the derivation
// list, ascending index order).
FinCochain lie_action_to_cyclic(const Trace& tau, const std::vector<Derivation>& ds,
                                const std::map<std::vector<int>, Scalar>& wedge,
                                bool require_cyclic = true);
BasedCochain lie_action_to_cyclic(const BasedTrace& tau, const std::vector<BasedDerivation>& ds,
                                  const std::map<std::vector<int>, Scalar>& wedge,
                                  const std::vector<BLabel>& window, bool require_cyclic = true);

// Basis of the space of cyclic n-cochains on a finite algebra (kernel of
// 1 - lambda acting on dense value tables); used by the property tests.
std::vector<std::vector<Scalar>> cyclic_cochain_basis(const Algebra& a, int n,
                                                      std::int64_t size_cap = 20000);

// The Hochschild coboundary b phi as a cochain of degree n+1.
FinCochain coboundary(const FinCochain& phi);
BasedCochain coboundary(const BasedCochain& phi);

} // namespace cychom
