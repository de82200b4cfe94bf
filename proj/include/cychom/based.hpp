// Algebras on a possibly infinite labeled basis with a computable product
// rule: lattice group algebras (optionally twisted by powers of t) and
// rewriting-presented word algebras.  Associativity on infinite bases is
// audited lazily on the labels that computations actually touch.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cychom/field.hpp"

namespace cychom {

// Structured basis label: lattice point coordinates, or generator indices of
// a word.  The owning algebra knows the interpretation.
using BLabel = std::vector<std::int32_t>;

class BasedAlgebra;

struct BasedElement {
    const BasedAlgebra* alg = nullptr;
    std::map<BLabel, Scalar> coeffs; // no explicit zeros

    bool is_zero() const { return coeffs.empty(); }
    BasedElement operator+(const BasedElement& o) const;
    BasedElement operator-(const BasedElement& o) const;
    BasedElement operator*(const BasedElement& o) const;
    BasedElement scaled(const Scalar& s) const;
    bool operator==(const BasedElement& o) const { return coeffs == o.coeffs; }
    Scalar coeff(const BLabel& l) const;
    void add_term(const BLabel& l, const Scalar& s);
};

struct AssocAuditReport {
    bool ok = true;
    std::int64_t triples_checked = 0;
    std::string counterexample;
};

class BasedAlgebra {
public:
    BasedAlgebra(FieldSpec fs, std::string name) : fs_(fs), name_(std::move(name)) {}
    virtual ~BasedAlgebra() = default;

    const FieldSpec& field() const { return fs_; }
    const std::string& name() const { return name_; }

    virtual std::vector<std::pair<BLabel, Scalar>> basis_product(const BLabel& a,
                                                                 const BLabel& b) const = 0;
    virtual BLabel unit_label() const = 0;
    virtual std::string label_str(const BLabel& l) const = 0;
    virtual BLabel parse_label(const std::string& s) const = 0;

    BasedElement zero() const { return BasedElement{this, {}}; }
    BasedElement one() const;
    BasedElement monomial(const BLabel& l, Scalar c) const;
    BasedElement mul(const BasedElement& a, const BasedElement& b) const;

    // Labels recorded from products computed so far (bounded, append-only).
    std::vector<BLabel> audited_labels() const;
    // Checks (ab)c == a(bc) on all triples from `labels` (or the audit log
    // when empty), up to max_triples.
    AssocAuditReport audit_associativity(std::vector<BLabel> labels = {},
                                         std::int64_t max_triples = 20000) const;

protected:
    void note_label(const BLabel& l) const;

private:
    FieldSpec fs_;
    std::string name_;
    mutable std::mutex log_mu_;
    mutable std::vector<BLabel> log_;
    mutable std::map<BLabel, bool> log_seen_;
};

// Group algebra of Z^rank, optionally twisted: e_v * e_w = t^(v^T B w) e_{v+w}.
// With B == 0 this is the plain Laurent algebra; rank 2 with B = [[0,0],[1,0]]
// gives the polynomial noncommutative torus (V U = t U V).
class LatticeAlgebra : public BasedAlgebra {
public:
    LatticeAlgebra(FieldSpec fs, int rank,
                   std::vector<std::vector<std::int64_t>> twist = {}, std::string name = "");

    int rank() const { return rank_; }
    bool twisted() const { return !twist_.empty(); }

    std::vector<std::pair<BLabel, Scalar>> basis_product(const BLabel& a,
                                                         const BLabel& b) const override;
    BLabel unit_label() const override { return BLabel(static_cast<std::size_t>(rank_), 0); }
    std::string label_str(const BLabel& l) const override;
    BLabel parse_label(const std::string& s) const override;

    // All labels with every coordinate in [-w, w].
    std::vector<BLabel> window(int w) const;

private:
    int rank_;
    std::vector<std::vector<std::int64_t>> twist_;
};

// Word algebra on named generators with two-letter rewrite rules:
// each rule sends a length-2 word to a finite combination of words; products
// concatenate and reduce leftmost-first under a step budget (fuel).
class RewritingAlgebra : public BasedAlgebra {
public:
    struct Rule {
        std::int32_t first, second;
        std::vector<std::pair<BLabel, Scalar>> replacement;
    };

    RewritingAlgebra(FieldSpec fs, std::vector<std::string> generators, std::vector<Rule> rules,
                     std::int64_t fuel = 100000, std::string name = "");

    const std::vector<std::string>& generators() const { return gens_; }
    std::int64_t fuel() const { return fuel_; }

    std::vector<std::pair<BLabel, Scalar>> basis_product(const BLabel& a,
                                                         const BLabel& b) const override;
    BLabel unit_label() const override { return {}; }
    std::string label_str(const BLabel& l) const override;
    BLabel parse_label(const std::string& s) const override;

    BasedElement generator(int i) const;
    // Reduce an arbitrary word to its normal-form combination.
    BasedElement reduce_word(const BLabel& word) const;

private:
    std::vector<std::string> gens_;
    std::map<std::pair<std::int32_t, std::int32_t>, std::vector<std::pair<BLabel, Scalar>>> rules_;
    std::int64_t fuel_;
};

// Trace / derivation rules on a based algebra, validated on an explicit
// window of labels recorded in the result.
struct BasedTrace {
    const BasedAlgebra* alg = nullptr;
    std::function<Scalar(const BLabel&)> rule;
    std::vector<BLabel> window; // where tau(ab) = tau(ba) was verified

    Scalar operator()(const BasedElement& x) const;
};

struct BasedDerivation {
    const BasedAlgebra* alg = nullptr;
    std::function<BasedElement(const BLabel&)> rule;
    std::vector<BLabel> window;

    BasedElement operator()(const BasedElement& x) const;
};

BasedTrace validate_based_trace(const BasedAlgebra& a, std::function<Scalar(const BLabel&)> rule,
                                std::vector<BLabel> window);

BasedDerivation validate_based_derivation(const BasedAlgebra& a,
                                          std::function<BasedElement(const BLabel&)> rule,
                                          std::vector<BLabel> window);

struct InvarianceVerdictBased {
    bool invariant = true;
    std::string counterexample;
};

InvarianceVerdictBased check_invariant_trace(const BasedTrace& tau,
                                             const std::vector<BasedDerivation>& ds,
                                             const std::vector<BLabel>& window);

} // namespace cychom
