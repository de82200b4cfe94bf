// Exact scalar arithmetic over a small tower of fields: Q, cyclotomic
// extensions Q(zeta_n), and rational-function fields over those bases.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "cychom/errors.hpp"

namespace cychom {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

// Identifies a coefficient field.  cyc_order == 1 means the plain rationals
// (the first cyclotomic polynomial is x - 1, so the extension is trivial);
// func_field adds a transcendental generator t over that base.  Function
// fields over function fields are not representable by construction.
struct FieldSpec {
    std::uint32_t cyc_order = 1;
    bool func_field = false;

    static FieldSpec rationals() { return {1, false}; }
    static FieldSpec cyclotomic(std::uint32_t n);
    static FieldSpec rational_functions(FieldSpec base);

    FieldSpec base() const { return {cyc_order, false}; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

// Element of the base field Q(zeta_n): a polynomial in zeta with rational
// coefficients, reduced mod Phi_n.  Trailing zeros are always trimmed, so
// representation equality is field equality.
struct CycElem {
    std::vector<BigRat> c;

    bool is_zero() const { return c.empty(); }
    bool operator==(const CycElem&) const = default;
};

// Data for Q[x]/Phi_n(x): the modulus and reduction/inversion helpers.
class Cyclotomic {
public:
    explicit Cyclotomic(std::uint32_t n);

    std::uint32_t order() const { return n_; }
    std::size_t degree() const { return phi_.size() - 1; }
    const std::vector<BigRat>& modulus() const { return phi_; }

    CycElem reduce(std::vector<BigRat> poly) const;
    CycElem add(const CycElem& a, const CycElem& b) const;
    CycElem sub(const CycElem& a, const CycElem& b) const;
    CycElem mul(const CycElem& a, const CycElem& b) const;
    CycElem neg(const CycElem& a) const;
    CycElem inv(const CycElem& a) const; // throws division_by_zero on 0
    CycElem one() const;
    CycElem from_rational(const BigRat& r) const;
    CycElem zeta() const;

private:
    std::uint32_t n_;
    std::vector<BigRat> phi_; // coefficients of Phi_n, degree = size-1, monic
};

// Shared, lazily-built table of cyclotomic moduli.
const Cyclotomic& cyclotomic_field(std::uint32_t n);

// n-th cyclotomic polynomial as a rational-coefficient vector (ascending).
std::vector<BigRat> cyclotomic_polynomial(std::uint32_t n);

// An exact field element in canonical form.  Plain rationals are stored
// directly; values in larger fields are fractions num/den of polynomials in
// t whose coefficients live in the base Q(zeta_n) (for non-function fields
// den == (1) and num has degree <= 0).  Canonical form: fraction
// gcd-reduced, den monic, zero stored as empty num.
class Scalar {
public:
    Scalar() = default; // zero of Q; prefer the named constructors

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    static Scalar of(const FieldSpec& fs, long v) { return of(fs, BigRat(v)); }
    static Scalar of(const FieldSpec& fs, const BigRat& v);
    static Scalar of(const FieldSpec& fs, long num, long den);
    static Scalar zeta(const FieldSpec& fs);    // generator of Q(zeta_n)
    static Scalar t_gen(const FieldSpec& fs);   // generator of the function field
    // t^k for signed k (negative powers produce 1/t^|k|).
    static Scalar t_power(const FieldSpec& fs, long long k);

    const FieldSpec& field() const { return fs_; }
    bool is_zero() const;
    bool is_one() const;
    // Degree-0 rational function (or any non-function-field value).
    bool is_constant() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    bool operator==(const Scalar&) const = default;

    // Canonical literal in the scalar grammar; parse() inverts it exactly.
    std::string str() const;
    static Scalar parse(const FieldSpec& fs, std::string_view text);

    // Rational value of a plain Q scalar (throws if the field is larger).
    BigRat as_rational() const;

private:
    FieldSpec fs_{};
    // plain rationals live in q_ with num_/den_ empty (no heap traffic on
    // the dominant elimination path); larger fields use num_/den_
    BigRat q_{};
    std::vector<CycElem> num_{};
    std::vector<CycElem> den_{};

    bool plain() const { return fs_.cyc_order == 1 && !fs_.func_field; }
    void canonicalize();
    static void check_same_field(const Scalar& a, const Scalar& b);
    friend class ScalarParser;
};

} // namespace cychom
