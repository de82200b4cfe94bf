#include <doctest.h>

#include "cychom/algebra.hpp"
#include "cychom/constructions.hpp"

using namespace cychom;

TEST_SUITE_BEGIN("algebra");

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::shared_ptr<Algebra> dual_numbers() { return truncated_poly(Q, 2); }

} // namespace

TEST_CASE("matrix units validate, dim 4") {
    auto m2 = matrix_algebra(Q, 2);
    CHECK(m2->dim() == 4);
    Element e = m2->one();
    CHECK(e == m2->basis(m2->label_index("E:1,1")) + m2->basis(m2->label_index("E:2,2")));
}

TEST_CASE("dual numbers validate; corrupted structure is rejected") {
    auto d = dual_numbers();
    CHECK(d->dim() == 2);

    // x*x = 1 alone is fine (that is k[Z/2]); tamper so that associativity breaks:
    // x*x = x and 1 the unit makes (x x) x = x x = x but x (x x) = x x = x, fine;
    // instead use x*x = 1 but also x*1 = 0 to corrupt the unit law.
    auto structure = std::vector<std::vector<StructRow>>(2, std::vector<StructRow>(2));
    structure[0][0] = {{0, Scalar::one(Q)}};
    structure[0][1] = {{1, Scalar::one(Q)}};
    structure[1][0] = {}; // x * 1 = 0: breaks the unit law
    structure[1][1] = {{0, Scalar::one(Q)}};
    std::vector<Scalar> unit = {Scalar::one(Q), Scalar::zero(Q)};
    CHECK_THROWS_WITH_AS(Algebra(Q, {"1", "x"}, unit, structure), doctest::Contains("BadUnit"),
                         validation_error);

    // genuinely non-associative: e*e = x, e*x = 1, ... small tampered table
    auto s2 = std::vector<std::vector<StructRow>>(2, std::vector<StructRow>(2));
    s2[0][0] = {{0, Scalar::one(Q)}};
    s2[0][1] = {{1, Scalar::one(Q)}};
    s2[1][0] = {{1, Scalar::one(Q)}};
    s2[1][1] = {{0, Scalar::one(Q)}, {1, Scalar::one(Q)}}; // x^2 = 1 + x
    // (x x) x = (1+x)x = x + 1 + x = 1 + 2x ; x (x x) = same, commutative...
    // instead break symmetry: x*x = 1 but (x,x,x): with c tampered asymmetric:
    s2[1][1] = {{0, Scalar::one(Q)}};
    s2[1][0] = {{1, Scalar::of(Q, 2)}}; // x * 1 = 2x: unit law broken again -> use
    CHECK_THROWS_AS(Algebra(Q, {"1", "x"}, unit, s2), validation_error);

    // asymmetric product with intact unit: u*u = u, u*y = y, y*u = y, y*y = u + y
    // then (y y) y = (u+y) y = y + (u + y) = u + 2y and y (y y) = same; to get a
    // genuine associativity failure use dim 3 with e2*e2 = e1 (no unit behaviour)
    auto s3 = std::vector<std::vector<StructRow>>(3, std::vector<StructRow>(3));
    auto one = Scalar::one(Q);
    // unit = b0; b1*b1 = b2; b1*b2 = b0 (tampered); b2*b1 = 0; b2*b2 = 0
    for (int i = 0; i < 3; ++i) {
        s3[0][static_cast<std::size_t>(i)] = {{i, one}};
        s3[static_cast<std::size_t>(i)][0] = {{i, one}};
    }
    s3[1][1] = {{2, one}};
    s3[1][2] = {{0, one}};
    s3[2][1] = {};
    s3[2][2] = {};
    std::vector<Scalar> unit3 = {one, Scalar::zero(Q), Scalar::zero(Q)};
    // (b1 b1) b1 = b2 b1 = 0 but b1 (b1 b1) = b1 b2 = b0 != 0
    CHECK_THROWS_WITH_AS(Algebra(Q, {"1", "x", "y"}, unit3, s3),
                         doctest::Contains("NotAssociative"), validation_error);
}

TEST_CASE("element products") {
    auto d = dual_numbers();
    Element one = d->one(), x = d->basis(1);
    CHECK((one + x) * (one - x) == one); // x^2 = 0
    auto m2 = matrix_algebra(Q, 2);
    Element e11 = m2->basis(m2->label_index("E:1,1"));
    Element e12 = m2->basis(m2->label_index("E:1,2"));
    CHECK(e11 * e12 == e12);
    CHECK((e12 * e11).is_zero());
}

TEST_CASE("trace validation") {
    auto m2 = matrix_algebra(Q, 2);
    std::vector<Scalar> tr(4, Scalar::zero(Q));
    tr[static_cast<std::size_t>(m2->label_index("E:1,1"))] = Scalar::one(Q);
    tr[static_cast<std::size_t>(m2->label_index("E:2,2"))] = Scalar::one(Q);
    Trace t = validate_trace(*m2, tr);
    CHECK(t(m2->one()) == Scalar::of(Q, 2));

    // "top-left entry" functional is not a trace: tr(E12 E21) != tr(E21 E12)
    std::vector<Scalar> corner(4, Scalar::zero(Q));
    corner[static_cast<std::size_t>(m2->label_index("E:1,1"))] = Scalar::one(Q);
    CHECK_THROWS_WITH_AS(validate_trace(*m2, corner), doctest::Contains("NotATrace"),
                         validation_error);
}

TEST_CASE("traces form a linear space") {
    auto a = group_algebra(Q, cyclic_group(2));
    // class functions: values on e and g are free
    std::vector<Scalar> t1 = {Scalar::one(Q), Scalar::zero(Q)};
    std::vector<Scalar> t2 = {Scalar::zero(Q), Scalar::one(Q)};
    Trace tr1 = validate_trace(*a, t1);
    Trace tr2 = validate_trace(*a, t2);
    std::vector<Scalar> comb(2, Scalar::zero(Q));
    for (int i = 0; i < 2; ++i)
        comb[static_cast<std::size_t>(i)] =
            Scalar::of(Q, 3) * tr1.values[static_cast<std::size_t>(i)] -
            Scalar::of(Q, 5, 7) * tr2.values[static_cast<std::size_t>(i)];
    CHECK_NOTHROW(validate_trace(*a, comb));
}

TEST_CASE("derivation validation") {
    auto m2 = matrix_algebra(Q, 2);
    Element a = m2->basis(m2->label_index("E:1,2")) + m2->basis(m2->label_index("E:2,2")).scaled(Scalar::of(Q, 3));
    CHECK_NOTHROW(inner_derivation(*m2, a));

    // identity map is not a derivation (fails at (1,1))
    std::vector<std::vector<Scalar>> id(4, std::vector<Scalar>(4, Scalar::zero(Q)));
    for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar::one(Q);
    CHECK_THROWS_WITH_AS(validate_derivation(*m2, id), doctest::Contains("NotADerivation"),
                         validation_error);
}

TEST_CASE("derivations are closed under commutator") {
    auto a = truncated_poly(Q, 4);
    // D1 = x d/dx (degree scaling), D2 = x^2 d/dx
    std::vector<std::vector<Scalar>> d1(4, std::vector<Scalar>(4, Scalar::zero(Q)));
    std::vector<std::vector<Scalar>> d2(4, std::vector<Scalar>(4, Scalar::zero(Q)));
    for (int j = 0; j < 4; ++j) {
        d1[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = Scalar::of(Q, j);
        if (j + 1 < 4) d2[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)] = Scalar::of(Q, j);
    }
    Derivation D1 = validate_derivation(*a, d1);
    Derivation D2 = validate_derivation(*a, d2);
    CHECK_NOTHROW(derivation_bracket(D1, D2)); // validates [D1,D2] internally
}

TEST_CASE("invariant trace checks") {
    auto m2 = matrix_algebra(Q, 2);
    std::vector<Scalar> tr(4, Scalar::zero(Q));
    tr[static_cast<std::size_t>(m2->label_index("E:1,1"))] = Scalar::one(Q);
    tr[static_cast<std::size_t>(m2->label_index("E:2,2"))] = Scalar::one(Q);
    Trace t = validate_trace(*m2, tr);
    Derivation ad = inner_derivation(*m2, m2->basis(1));
    auto verdict = check_invariant_trace(t, {ad});
    CHECK(verdict.invariant);

    // coefficient of x^(m-1) on k[x]/x^m with D = x d/dx is not invariant
    auto p3 = truncated_poly(Q, 3);
    std::vector<std::vector<Scalar>> d(3, std::vector<Scalar>(3, Scalar::zero(Q)));
    for (int j = 0; j < 3; ++j) d[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = Scalar::of(Q, j);
    Derivation euler = validate_derivation(*p3, d);
    std::vector<Scalar> top(3, Scalar::zero(Q));
    top[2] = Scalar::one(Q);
    Trace ttop = validate_trace(*p3, top); // commutative: any functional is a trace
    auto v2 = check_invariant_trace(ttop, {euler});
    CHECK(!v2.invariant);
    CHECK(v2.counterexample.find("x^2") != std::string::npos);
}

TEST_CASE("left regular representation is an algebra map with L_1 = id") {
    for (auto alg : {matrix_algebra(Q, 2), truncated_poly(Q, 3),
                     group_algebra(Q, cyclic_group(3))}) {
        int n = alg->dim();
        // L_1 = identity
        auto l1 = alg->left_regular(alg->one());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(l1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
        // L_{ab} = L_a L_b on basis pairs
        for (int bi = 0; bi < n; ++bi)
            for (int bj = 0; bj < n; ++bj) {
                auto lab = alg->left_regular(alg->mul(alg->basis(bi), alg->basis(bj)));
                auto la = alg->left_regular(alg->basis(bi));
                auto lb = alg->left_regular(alg->basis(bj));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) {
                        Scalar acc = Scalar::zero(Q);
                        for (int k = 0; k < n; ++k)
                            acc += la[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                                   lb[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                        CHECK(acc == lab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                    }
            }
    }
}

TEST_CASE("element inversion") {
    auto m2 = matrix_algebra(Q, 2);
    Element u = m2->basis(m2->label_index("E:1,1")) - m2->basis(m2->label_index("E:2,2"));
    auto v = invert_element(u);
    REQUIRE(v.has_value());
    CHECK(*v == u); // self-inverse

    auto d = truncated_poly(Q, 2);
    CHECK(!invert_element(d->basis(1)).has_value()); // x is nilpotent
    Element w = d->one() + d->basis(1);
    auto winv = invert_element(w);
    REQUIRE(winv.has_value());
    CHECK(*winv == d->one() - d->basis(1));
}

TEST_SUITE_END();
