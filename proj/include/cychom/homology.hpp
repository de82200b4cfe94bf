// Homology computations: Hochschild homology/cohomology, cyclic homology by
// three independent routes, and periodic cyclic homology via stabilization
// of the truncation map, all as exact integer dimensions.
#pragma once

#include <map>

#include "cychom/complexes.hpp"

namespace cychom {

struct HomologyReport {
    std::string algebra_id;
    std::string theory; // hh | hc-quotient | hc-cyclic | hc-bB | hp-even | hp-odd | hcoh-A | hcoh-Adual
    std::map<int, std::int64_t> dims;
    std::map<std::string, std::int64_t> ranks;
    std::string index_scheme = "lex";
    int max_degree = 0;
    std::int64_t elapsed_ms = 0;
    std::map<int, std::string> notes; // e.g. HP stabilization status

    std::vector<std::int64_t> dim_vector() const;
};

// H_n(A, A) for 0 <= n <= max_n; degree 0 is cross-checked against the
// commutator-quotient dimension computed directly from structure constants.
HomologyReport hochschild_homology(const Algebra& a, int max_n, std::int64_t size_cap = 20000);

enum class CohCoeff { A, A_dual };

// H^n(A, A) (deformation complex) or H^n(A, A*) (dual coefficients; equals
// H_n(A, A) in exact arithmetic and double-checked against it).
HomologyReport hochschild_cohomology(const Algebra& a, CohCoeff coeff, int max_n,
                                     std::int64_t size_cap = 20000);

enum class CyclicMethod { Quotient, CyclicBicomplex, BBBicomplex };

HomologyReport cyclic_homology(const Algebra& a, int max_n, CyclicMethod method,
                               std::int64_t size_cap = 20000);

// Runs all three methods and requires identical dimension vectors; throws
// validation_error("MethodDisagreement") otherwise (an implementation bug,
// never an expected outcome).
HomologyReport cyclic_homology_checked(const Algebra& a, int max_n,
                                       std::int64_t size_cap = 20000);

// Stabilized dimension of HC under the periodicity truncation, observed in
// degrees of the given parity up to `window`; the per-degree notes record
// the rank ladder and whether it stabilized.
HomologyReport periodic_cyclic(const Algebra& a, int parity, int window,
                               std::int64_t size_cap = 20000);

} // namespace cychom
