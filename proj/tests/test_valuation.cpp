#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "tropgeo/tropgeo.hpp"

using namespace tropgeo;
using testsupport::Rng;

namespace {

PuiseuxSeries series(std::vector<PuiseuxTerm> terms) {
    return PuiseuxSeries(std::move(terms), ExtRat::infinity());
}

}  // namespace

TEST_CASE("valuations of the three fields", "[valuation]") {
    CHECK(val(Scalar(Rat(8)), ValuationSpec::padic(2)) == ExtRat(Rat(3)));
    CHECK(val(Scalar(Rat(5, 6)), ValuationSpec::padic(3)) == ExtRat(Rat(-1)));
    CHECK(val(Scalar(Rat(7)), ValuationSpec::trivial()) == ExtRat(Rat(0)));
    CHECK(val(Scalar(Rat(0)), ValuationSpec::trivial()) == ExtRat::infinity());
    CHECK(val(Scalar(Rat(0)), ValuationSpec::padic(5)) == ExtRat::infinity());

    // lowest exponent of a series
    PuiseuxSeries s = series({{Rat(-1, 2), Rat(3)}, {Rat(2), Rat(8)}, {Rat(13, 3), Rat(7)}});
    CHECK(val(Scalar(s), ValuationSpec::puiseux()) == ExtRat(Rat(-1, 2)));
    CHECK(val(Scalar(PuiseuxSeries()), ValuationSpec::puiseux()) == ExtRat::infinity());
}

TEST_CASE("valuation of an undetermined truncated zero", "[valuation]") {
    PuiseuxSeries unknown({}, ExtRat(Rat(5)));
    CHECK_THROWS_AS(val(Scalar(unknown), ValuationSpec::puiseux()), PrecisionExhausted);
}

TEST_CASE("splittings", "[valuation]") {
    CHECK(scalar_eq(split(Rat(3), ValuationSpec::padic(2)), Scalar(Rat(8))));
    CHECK(scalar_eq(split(Rat(-2), ValuationSpec::padic(3)), Scalar(Rat(1, 9))));
    CHECK(scalar_eq(split(Rat(0), ValuationSpec::trivial()), Scalar(Rat(1))));
    CHECK(scalar_eq(split(Rat(-1, 2), ValuationSpec::puiseux()),
                    Scalar(PuiseuxSeries::monomial(Rat(1), Rat(-1, 2)))));

    CHECK_THROWS_AS(split(Rat(1), ValuationSpec::trivial()), NotInValueGroup);
    CHECK_THROWS_AS(split(Rat(1, 2), ValuationSpec::padic(2)), NotInValueGroup);
}

TEST_CASE("residues", "[valuation]") {
    CHECK(residue(Scalar(Rat(5)), ValuationSpec::padic(2)) == ResidueScalar(Rat(1), 2));
    CHECK(residue(Scalar(Rat(4, 4)), ValuationSpec::padic(2)) == ResidueScalar(Rat(1), 2));
    CHECK(residue(Scalar(Rat(-3)), ValuationSpec::padic(2)) == ResidueScalar(Rat(1), 2));
    CHECK(residue(Scalar(Rat(6)), ValuationSpec::padic(2)) == ResidueScalar(Rat(0), 2));
    CHECK(residue(Scalar(Rat(5, 2)), ValuationSpec::padic(3)).value() == 1);  // 5 * 2^{-1} = 10 = 1
    CHECK(residue(Scalar(Rat(7, 5)), ValuationSpec::padic(3)).value() == 2);  // 7 * 5^{-1} = 14 = 2

    PuiseuxSeries s = series({{Rat(0), Rat(2)}, {Rat(1), Rat(1)}});  // 2 + t
    CHECK(residue(Scalar(s), ValuationSpec::puiseux()) == ResidueScalar(Rat(2), 0));
    PuiseuxSeries positive = series({{Rat(1, 2), Rat(4)}});
    CHECK(residue(Scalar(positive), ValuationSpec::puiseux()) == ResidueScalar(Rat(0), 0));

    CHECK(residue(Scalar(Rat(5, 7)), ValuationSpec::trivial()) == ResidueScalar(Rat(5, 7), 0));

    CHECK_THROWS_AS(residue(Scalar(Rat(1, 2)), ValuationSpec::padic(2)), NegativeValuation);
    PuiseuxSeries neg = series({{Rat(-1), Rat(1)}});
    CHECK_THROWS_AS(residue(Scalar(neg), ValuationSpec::puiseux()), NegativeValuation);
}

TEST_CASE("residue field arithmetic", "[valuation]") {
    ResidueScalar a(Rat(5), 7), b(Rat(4), 7);
    CHECK((a * b).value() == 6);   // 20 mod 7
    CHECK((a + b).value() == 2);   // 9 mod 7
    CHECK((a.inverse() * a).value() == 1);
    CHECK((-a).value() == 2);

    ResidueScalar q(Rat(3, 4), 0);
    CHECK((q.inverse() * q).value() == 1);
    CHECK_THROWS_AS(ResidueScalar(Rat(0), 7).inverse(), ZeroDivide);
}

TEST_CASE("valuation axioms on random scalars", "[valuation][property]") {
    Rng rng(2024);
    std::vector<ValuationSpec> specs{ValuationSpec::trivial(), ValuationSpec::padic(2),
                                     ValuationSpec::padic(5), ValuationSpec::puiseux()};
    for (int i = 0; i < 200; ++i) {
        for (const auto& spec : specs) {
            Scalar a, b;
            if (spec.kind() == FieldKind::Puiseux) {
                a = rng.puiseux();
                b = rng.puiseux();
            } else {
                a = rng.rational(60, 16);
                b = rng.rational(60, 16);
            }
            ExtRat va = val(a, spec), vb = val(b, spec);
            CHECK(val(scalar_mul(a, b), spec) == va + vb);
            Scalar s = scalar_add(a, b);
            if (!scalar_is_exact_zero(s)) {
                ExtRat vs = val(s, spec);
                CHECK(vs >= min(va, vb));
                if (va != vb) CHECK(vs == min(va, vb));
            }
        }
    }
}

TEST_CASE("val after split is the identity on the value group", "[valuation][property]") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Rat u_int(rng.integer(-10, 10));
        CHECK(val(split(u_int, ValuationSpec::padic(3)), ValuationSpec::padic(3)) ==
              ExtRat(u_int));
        Rat u = rng.rational_any(12, 5);
        CHECK(val(split(u, ValuationSpec::puiseux()), ValuationSpec::puiseux()) == ExtRat(u));
    }
    CHECK(val(split(Rat(0), ValuationSpec::trivial()), ValuationSpec::trivial()) ==
          ExtRat(Rat(0)));
}

TEST_CASE("residue is multiplicative on units", "[valuation][property]") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        // p-adic units: odd numerator and denominator
        Rat a(2 * rng.integer(0, 20) + 1, 2 * rng.integer(0, 10) + 1);
        Rat b(2 * rng.integer(0, 20) + 1, 2 * rng.integer(0, 10) + 1);
        if (rng.integer(0, 1)) a = -a;
        const ValuationSpec spec = ValuationSpec::padic(2);
        CHECK(residue(Scalar(Rat(a * b)), spec) ==
              residue(Scalar(a), spec) * residue(Scalar(b), spec));
    }
}

TEST_CASE("prime check by trial division", "[valuation]") {
    CHECK_THROWS_AS(ValuationSpec::padic(1), Error);
    CHECK_THROWS_AS(ValuationSpec::padic(4), Error);
    CHECK_THROWS_AS(ValuationSpec::padic(91), Error);  // 7 * 13
    CHECK_NOTHROW(ValuationSpec::padic(97));
}

TEST_CASE("field specs parse and print", "[valuation]") {
    CHECK(ValuationSpec::from_string("trivial").kind() == FieldKind::Trivial);
    CHECK(ValuationSpec::from_string("padic:7").prime() == 7);
    CHECK(ValuationSpec::from_string("puiseux:15").default_precision() == 15);
    CHECK(ValuationSpec::from_string("puiseux:21/2").default_precision() == Rat(21, 2));
    CHECK(ValuationSpec::from_string("padic:2").to_string() == "padic:2");
    CHECK_THROWS_AS(ValuationSpec::from_string("real"), Error);
    CHECK_THROWS_AS(ValuationSpec::from_string("padic:6"), Error);
}

TEST_CASE("series arithmetic", "[puiseux]") {
    PuiseuxSeries t = PuiseuxSeries::monomial(Rat(1), Rat(1));
    PuiseuxSeries half = PuiseuxSeries::monomial(Rat(1), Rat(1, 2));

    // leading cancellation
    PuiseuxSeries sum = pui_add(half, pui_add(pui_neg(half), t));
    CHECK(sum == t);

    // exponent addition
    CHECK(pui_mul(PuiseuxSeries::monomial(Rat(1), Rat(-1)),
                  PuiseuxSeries::monomial(Rat(1), Rat(2))) == t);

    // truncated product: (1 + t)(1 - t) at precision 2 is 1 + O(t^2)
    PuiseuxSeries a({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, ExtRat(Rat(2)));
    PuiseuxSeries b({{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}}, ExtRat(Rat(2)));
    PuiseuxSeries prod = pui_mul(a, b);
    CHECK(prod == PuiseuxSeries({{Rat(0), Rat(1)}}, ExtRat(Rat(2))));
}

TEST_CASE("series inversion", "[puiseux]") {
    // monomials invert exactly
    PuiseuxSeries m = PuiseuxSeries::monomial(Rat(3), Rat(-2));
    PuiseuxSeries inv = pui_inverse(m, Rat(10));
    CHECK(inv == PuiseuxSeries::monomial(Rat(1, 3), Rat(2)));
    CHECK(pui_mul(m, inv) == PuiseuxSeries::constant(Rat(1)));

    // geometric series, truncated at the default relative precision
    PuiseuxSeries one_plus_t({{Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, ExtRat::infinity());
    PuiseuxSeries g = pui_inverse(one_plus_t, Rat(4));
    CHECK(g.precision() == ExtRat(Rat(4)));
    CHECK(g.terms().size() == 4);  // 1 - t + t^2 - t^3
    CHECK(g.terms()[2].coeff == 1);
    PuiseuxSeries check = pui_mul(one_plus_t, g);
    CHECK(check.terms().size() == 1);
    CHECK(check.terms()[0].coeff == 1);
    CHECK(check.precision() == ExtRat(Rat(4)));

    CHECK_THROWS_AS(pui_inverse(PuiseuxSeries(), Rat(10)), ZeroDivide);
    CHECK_THROWS_AS(pui_inverse(PuiseuxSeries({}, ExtRat(Rat(3))), Rat(10)),
                    PrecisionExhausted);
}

TEST_CASE("series ring laws hold up to the precision overlap", "[puiseux][property]") {
    Rng rng(17);
    auto truncate_to = [](const PuiseuxSeries& s, const ExtRat& q) { return pui_truncate(s, q); };
    for (int i = 0; i < 200; ++i) {
        PuiseuxSeries a = rng.puiseux(), b = rng.puiseux(), c = rng.puiseux();
        CHECK(pui_add(pui_add(a, b), c) == pui_add(a, pui_add(b, c)));
        PuiseuxSeries lhs = pui_mul(a, pui_add(b, c));
        PuiseuxSeries rhs = pui_add(pui_mul(a, b), pui_mul(a, c));
        ExtRat q = min(lhs.precision(), rhs.precision());
        CHECK(truncate_to(lhs, q) == truncate_to(rhs, q));
    }
}

TEST_CASE("series literal text", "[puiseux]") {
    PuiseuxSeries s = series({{Rat(-1, 2), Rat(3)}, {Rat(2), Rat(8)}});
    CHECK(pui_to_string(s) == "3*t^(-1/2) + 8*t^2");
    CHECK(pui_to_string(PuiseuxSeries()) == "0");
    CHECK(pui_to_string(PuiseuxSeries({}, ExtRat(Rat(5)))) == "O(t^5)");
    CHECK(pui_to_string(series({{Rat(0), Rat(2)}, {Rat(1), Rat(-1)}})) == "2 - t");
}
