#include <doctest.h>

#include "cychom/field.hpp"

#include <random>

using namespace cychom;

TEST_SUITE_BEGIN("field");

TEST_CASE("rational arithmetic basics") {
    FieldSpec Q = FieldSpec::rationals();
    Scalar a = Scalar::of(Q, 1, 2);
    Scalar b = Scalar::of(Q, 1, 3);
    CHECK((a + b) == Scalar::of(Q, 5, 6));
    CHECK((a * b) == Scalar::of(Q, 1, 6));
    CHECK((a - a).is_zero());
    CHECK(a.inv() == Scalar::of(Q, 2));
    CHECK_THROWS_AS(Scalar::zero(Q).inv(), division_by_zero);
}

TEST_CASE("field mismatch is rejected") {
    Scalar a = Scalar::of(FieldSpec::rationals(), 1);
    Scalar b = Scalar::of(FieldSpec::cyclotomic(4), 1);
    CHECK_THROWS_AS(a + b, field_mismatch);
}

TEST_CASE("cyclotomic polynomial table") {
    auto phi1 = cyclotomic_polynomial(1);
    CHECK(phi1 == std::vector<BigRat>{BigRat(-1), BigRat(1)});
    auto phi4 = cyclotomic_polynomial(4); // x^2 + 1
    CHECK(phi4 == std::vector<BigRat>{BigRat(1), BigRat(0), BigRat(1)});
    auto phi6 = cyclotomic_polynomial(6); // x^2 - x + 1
    CHECK(phi6 == std::vector<BigRat>{BigRat(1), BigRat(-1), BigRat(1)});
    auto phi12 = cyclotomic_polynomial(12); // x^4 - x^2 + 1
    CHECK(phi12 ==
          std::vector<BigRat>{BigRat(1), BigRat(0), BigRat(-1), BigRat(0), BigRat(1)});
}

TEST_CASE("zeta_4 squares to -1") {
    FieldSpec F = FieldSpec::cyclotomic(4);
    Scalar z = Scalar::zeta(F);
    CHECK(z * z == Scalar::of(F, -1));
    CHECK((z * z * z * z).is_one());
    CHECK(z.inv() == -z);
}

TEST_CASE("zeta_3 satisfies 1 + z + z^2 = 0") {
    FieldSpec F = FieldSpec::cyclotomic(3);
    Scalar z = Scalar::zeta(F);
    CHECK((Scalar::one(F) + z + z * z).is_zero());
}

TEST_CASE("rational function cancellation") {
    FieldSpec F = FieldSpec::rational_functions(FieldSpec::rationals());
    Scalar t = Scalar::t_gen(F);
    Scalar num = t * t - Scalar::one(F);
    Scalar den = t - Scalar::one(F);
    CHECK(num / den == t + Scalar::one(F));
    CHECK(Scalar::t_power(F, -2) * Scalar::t_power(F, 2) == Scalar::one(F));
    CHECK(!t.is_constant());
    CHECK((num / den).is_constant() == false);
    CHECK(((t + Scalar::one(F)) - t).is_constant());
}

TEST_CASE("function fields cannot nest") {
    FieldSpec F = FieldSpec::rational_functions(FieldSpec::rationals());
    CHECK_THROWS_AS(FieldSpec::rational_functions(F), error);
}

TEST_CASE("scalar literal grammar round-trips") {
    FieldSpec Q = FieldSpec::rationals();
    CHECK(Scalar::parse(Q, "5/6") == Scalar::of(Q, 5, 6));
    CHECK(Scalar::parse(Q, " -7 ") == Scalar::of(Q, -7));
    CHECK(Scalar::parse(Q, "5/6").str() == "5/6");

    FieldSpec F4 = FieldSpec::cyclotomic(4);
    Scalar v = Scalar::parse(F4, "1/2*z^2 - z + 1");
    // z^2 = -1, so this is 1/2 - z
    CHECK(v == Scalar::of(F4, 1, 2) - Scalar::zeta(F4));
    CHECK(Scalar::parse(F4, v.str()) == v);

    FieldSpec Ft = FieldSpec::rational_functions(FieldSpec::rationals());
    Scalar w = Scalar::parse(Ft, "(t^2-1)/(t-1)");
    CHECK(w == Scalar::t_gen(Ft) + Scalar::one(Ft));
    CHECK(Scalar::parse(Ft, w.str()) == w);
    Scalar frac = Scalar::parse(Ft, "(1)/(2*t^2)");
    CHECK(frac * Scalar::parse(Ft, "2*t^2") == Scalar::one(Ft));
    CHECK(Scalar::parse(Ft, frac.str()) == frac);

    CHECK_THROWS_AS(Scalar::parse(Q, "z"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(Q, "t"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(Q, "1 +"), parse_error);
    CHECK_THROWS_AS(Scalar::parse(Q, "3/0"), parse_error);
}

namespace {

Scalar random_scalar(const FieldSpec& fs, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> pos(1, 4);
    Scalar v = Scalar::of(fs, small(rng), pos(rng));
    if (fs.cyc_order >= 2) {
        Scalar z = Scalar::zeta(fs);
        v = v + z * Scalar::of(fs, small(rng), pos(rng));
    }
    if (fs.func_field) {
        Scalar t = Scalar::t_gen(fs);
        v = v + t * Scalar::of(fs, small(rng), pos(rng));
        if (small(rng) > 0) v = v / (t + Scalar::of(fs, pos(rng)));
    }
    return v;
}

} // namespace

TEST_CASE("field axioms hold for random triples in each field") {
    std::mt19937 rng(20240811);
    for (FieldSpec fs : {FieldSpec::rationals(), FieldSpec::cyclotomic(3),
                         FieldSpec::cyclotomic(4), FieldSpec::cyclotomic(5),
                         FieldSpec::rational_functions(FieldSpec::rationals()),
                         FieldSpec::rational_functions(FieldSpec::cyclotomic(4))}) {
        for (int it = 0; it < 60; ++it) {
            Scalar a = random_scalar(fs, rng);
            Scalar b = random_scalar(fs, rng);
            Scalar c = random_scalar(fs, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + Scalar::zero(fs) == a);
            CHECK(a * Scalar::one(fs) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK((a * a.inv()).is_one());
                CHECK(a / a == Scalar::one(fs));
            }
        }
    }
}

TEST_CASE("canonical form uniqueness across construction routes") {
    FieldSpec Ft = FieldSpec::rational_functions(FieldSpec::rationals());
    Scalar t = Scalar::t_gen(Ft);
    Scalar a = (t * t - Scalar::one(Ft)) / (t + Scalar::one(Ft));
    Scalar b = t - Scalar::one(Ft);
    CHECK(a == b);
    CHECK(a.str() == b.str());

    // denominators stay monic
    Scalar c = Scalar::one(Ft) / (Scalar::of(Ft, 2) * t + Scalar::of(Ft, 2));
    CHECK(c.str() == "(1/2)/(t + 1)");
}

TEST_SUITE_END();
