#include <doctest.h>

#include "cychom/based.hpp"
#include "cychom/constructions.hpp"

using namespace cychom;

TEST_SUITE_BEGIN("based");

TEST_CASE("Laurent algebra k[Z]: U * U^-1 = 1") {
    auto a = lattice_group_algebra(FieldSpec::rationals(), 1);
    BasedElement u = a->monomial({1}, Scalar::one(a->field()));
    BasedElement uinv = a->monomial({-1}, Scalar::one(a->field()));
    CHECK(u * uinv == a->one());
}

TEST_CASE("polynomial torus relations") {
    auto pt = polynomial_torus(2);
    const auto& a = *pt.alg;
    const FieldSpec& f = a.field();
    BasedElement U = a.monomial({1, 0}, Scalar::one(f));
    BasedElement V = a.monomial({0, 1}, Scalar::one(f));
    // V U = t U V
    CHECK(V * U == (U * V).scaled(Scalar::t_gen(f)));
    // U U^-1 = 1
    CHECK(U * a.monomial({-1, 0}, Scalar::one(f)) == a.one());
    // X2(U^3 V^2) = 2 U^3 V^2
    BasedElement m = a.monomial({3, 2}, Scalar::one(f));
    CHECK(pt.x2(m) == m.scaled(Scalar::of(f, 2)));
    // X1(U^3 V^2) = 3 U^3 V^2
    CHECK(pt.x1(m) == m.scaled(Scalar::of(f, 3)));
    // tau picks the constant coefficient
    BasedElement mix = a.one().scaled(Scalar::of(f, 5, 3)) + U.scaled(Scalar::of(f, 7));
    CHECK(pt.tau(mix) == Scalar::of(f, 5, 3));
    // tau is invariant under both derivations on the validation window
    auto verdict = check_invariant_trace(pt.tau, {pt.x1, pt.x2}, a.window(2));
    CHECK(verdict.invariant);
}

TEST_CASE("torus coefficient functional that is not a trace is rejected") {
    auto pt = polynomial_torus(1);
    const auto& a = *pt.alg;
    CHECK_THROWS_WITH_AS(
        validate_based_trace(
            a,
            [&](const BLabel& l) {
                return l == BLabel{1, 0} ? Scalar::one(a.field()) : Scalar::zero(a.field());
            },
            a.window(1)),
        doctest::Contains("NotATrace"), validation_error);
}

TEST_CASE("associativity audit on queried labels") {
    auto pt = polynomial_torus(1);
    auto rep = pt.alg->audit_associativity(pt.alg->window(1), 5000);
    CHECK(rep.ok);
    CHECK(rep.triples_checked > 0);

    auto pod = podles_algebra();
    std::vector<BLabel> gens = {{0}, {1}, {2}};
    auto rep2 = pod->audit_associativity(gens, 1000);
    CHECK(rep2.ok);
    CHECK(rep2.triples_checked == 27);
}

TEST_CASE("free algebra: empty rule set concatenates words") {
    auto free1 = rewriting_algebra(FieldSpec::rationals(), {"x"}, {});
    BasedElement x = free1->generator(0);
    BasedElement x3 = x * x * x;
    REQUIRE(x3.coeffs.size() == 1);
    CHECK(x3.coeffs.begin()->first == BLabel{0, 0, 0});
    CHECK(free1->label_str(x3.coeffs.begin()->first) == "w:xxx");
}

TEST_CASE("sphere algebra reduces to sorted monomials with x3-degree <= 1") {
    auto s = sphere_algebra();
    const FieldSpec& f = s->field();
    BasedElement x1 = s->generator(0), x2 = s->generator(1), x3 = s->generator(2);
    CHECK(x2 * x1 == x1 * x2);
    BasedElement rel = x3 * x3;
    // = 1 - x1^2 - x2^2
    BasedElement expect = s->one() - (x1 * x1) - (x2 * x2);
    CHECK(rel == expect);
    CHECK((x1 * x1 * x2 * x3).coeffs.size() == 1);
    (void)f;
}

TEST_CASE("podles relations hold under rewriting") {
    auto p = podles_algebra();
    const FieldSpec& f = p->field();
    BasedElement a = p->generator(0), as = p->generator(1), b = p->generator(2);
    CHECK(a * b == (b * a).scaled(Scalar::t_power(f, -2)));
    CHECK(as * b == (b * as).scaled(Scalar::t_power(f, 2)));
    CHECK(a * as == p->one() - (b * b).scaled(Scalar::t_power(f, -4)));
    CHECK(as * a == p->one() - b * b);
}

TEST_CASE("fuel exhaustion is reported, not looped") {
    // x x -> x x x grows forever
    RewritingAlgebra::Rule blow{0, 0, {{BLabel{0, 0, 0}, Scalar::one(FieldSpec::rationals())}}};
    auto bad = rewriting_algebra(FieldSpec::rationals(), {"x"}, {blow}, 50);
    BasedElement x = bad->generator(0);
    CHECK_THROWS_AS(x * x, fuel_exhausted);
}

TEST_CASE("label round-trips") {
    auto lat = lattice_group_algebra(FieldSpec::rationals(), 2);
    BLabel l = {3, -2};
    CHECK(lat->label_str(l) == "g:(3,-2)");
    CHECK(lat->parse_label("g:(3,-2)") == l);
    auto pod = podles_algebra();
    BLabel w = {2, 0, 0};
    CHECK(pod->label_str(w) == "w:b.a.a");
    CHECK(pod->parse_label("w:b.a.a") == w);
    CHECK(pod->parse_label("w:baa") == w); // undotted tokenization
}

TEST_SUITE_END();
