#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"
#include "tropgeo/tropgeo.hpp"

using namespace tropgeo;
using testsupport::Rng;

namespace {

const std::vector<std::string> XY{"x", "y"};

LaurentPoly groebner_quadric() {
    return parse_poly("2*x^2+x*y+6*y^2+5*x-3*y+4", ValuationSpec::padic(2), XY);
}

}  // namespace

TEST_CASE("initial forms of the two-adic quadric", "[initial]") {
    LaurentPoly f = groebner_quadric();

    std::vector<Rat> w22{Rat(2), Rat(2)};
    ResiduePoly g = initial_form(f, w22);
    CHECK(g.characteristic() == 2);
    REQUIRE(g.terms().size() == 3);
    CHECK(g.terms().at(Monomial{1, 0}) == ResidueScalar(Rat(1), 2));
    CHECK(g.terms().at(Monomial{0, 1}) == ResidueScalar(Rat(1), 2));
    CHECK(g.terms().at(Monomial{0, 0}) == ResidueScalar(Rat(1), 2));
    CHECK(residue_poly_to_string(g, XY) == "x + y + 1");

    std::vector<Rat> wm{Rat(-2), Rat(-1)};
    ResiduePoly h = initial_form(f, wm);
    REQUIRE(h.terms().size() == 2);
    CHECK(h.terms().at(Monomial{2, 0}) == ResidueScalar(Rat(1), 2));
    CHECK(h.terms().at(Monomial{1, 1}) == ResidueScalar(Rat(1), 2));
    CHECK(residue_poly_to_string(h, XY) == "x^2 + x*y");
}

TEST_CASE("initial form over the trivial valuation keeps coefficients", "[initial]") {
    auto f = parse_poly("x^2+3*x+2+x^2*y+2*x*y^2-2*y^2", ValuationSpec::trivial(), XY);
    std::vector<Rat> w{Rat(0), Rat(1)};
    ResiduePoly g = initial_form(f, w);
    CHECK(g.characteristic() == 0);
    REQUIRE(g.terms().size() == 3);
    CHECK(g.terms().at(Monomial{2, 0}) == ResidueScalar(Rat(1), 0));
    CHECK(g.terms().at(Monomial{1, 0}) == ResidueScalar(Rat(3), 0));
    CHECK(g.terms().at(Monomial{0, 0}) == ResidueScalar(Rat(2), 0));
    CHECK(residue_poly_to_string(g, XY) == "x^2 + 3*x + 2");
}

TEST_CASE("monomial detection", "[initial]") {
    LaurentPoly f = groebner_quadric();
    std::vector<Rat> w22{Rat(2), Rat(2)};
    CHECK_FALSE(is_monomial(initial_form(f, w22)));
    std::vector<Rat> wm{Rat(-2), Rat(-1)};
    CHECK_FALSE(is_monomial(initial_form(f, wm)));  // x^2 + xy factors but is no unit

    ResiduePoly mono(2, 0);
    mono.add_term(Monomial{2, -1}, ResidueScalar(Rat(5), 0));
    CHECK(is_monomial(mono));
}

TEST_CASE("membership through initial forms", "[initial]") {
    LaurentPoly f = groebner_quadric();
    std::vector<Rat> w22{Rat(2), Rat(2)};
    CHECK(member_via_initial(f, w22));
    std::vector<Rat> wm{Rat(-2), Rat(-1)};
    CHECK(member_via_initial(f, wm));
    // far out the constant term wins alone
    std::vector<Rat> w10{Rat(10), Rat(10)};
    CHECK_FALSE(member_via_initial(f, w10));
    ResiduePoly g = initial_form(f, w10);
    REQUIRE(g.terms().size() == 1);
    CHECK(g.terms().at(Monomial{0, 0}) == ResidueScalar(Rat(1), 2));  // residue of 2^{-2} * 4
}

TEST_CASE("weight vectors must lie in the value group", "[initial]") {
    LaurentPoly f = groebner_quadric();
    std::vector<Rat> bad{Rat(1, 2), Rat(0)};
    CHECK_THROWS_AS(initial_form(f, bad), NotInValueGroup);

    // Puiseux and trivial fields accept any rational weight vector
    auto line = parse_poly("x+y+1", ValuationSpec::puiseux(), XY);
    std::vector<Rat> half{Rat(1, 2), Rat(0)};
    CHECK_NOTHROW(initial_form(line, half));
    auto f0 = parse_poly("x+y+1", ValuationSpec::trivial(), XY);
    CHECK_NOTHROW(initial_form(f0, half));

    LaurentPoly zero(2, ValuationSpec::trivial());
    std::vector<Rat> w{Rat(0), Rat(0)};
    CHECK_THROWS_AS(initial_form(zero, w), ZeroPolynomial);
}

TEST_CASE("initial form support equals the tropical argmin", "[initial][property]") {
    Rng rng(211);
    for (const auto& entry : testsupport::plane_corpus()) {
        LaurentPoly f = entry.poly();
        TropPoly F = tropicalize(f);
        for (int i = 0; i < 50; ++i) {
            std::vector<Rat> w = testsupport::random_weight(rng, entry.spec, 2);
            ResiduePoly g = initial_form(f, w);
            std::vector<Monomial> expected = argmin_terms(F, w);
            REQUIRE(g.terms().size() == expected.size());
            auto it = g.terms().begin();
            for (const Monomial& u : expected) {
                CHECK(it->first == u);
                ++it;
            }
        }
    }
}

TEST_CASE("initial forms shift with the monomial", "[initial][property]") {
    Rng rng(223);
    for (const auto& entry : testsupport::plane_corpus()) {
        LaurentPoly f = entry.poly();
        Monomial u{rng.integer(-2, 2), rng.integer(-2, 2)};
        LaurentPoly fu = shift_monomial(f, u);
        for (int i = 0; i < 20; ++i) {
            std::vector<Rat> w = testsupport::random_weight(rng, entry.spec, 2);
            ResiduePoly a = initial_form(f, w);
            ResiduePoly b = initial_form(fu, w);
            REQUIRE(a.terms().size() == b.terms().size());
            for (const auto& [m, c] : a.terms()) {
                auto it = b.terms().find(mono_add(m, u));
                REQUIRE(it != b.terms().end());
                CHECK(it->second == c);
            }
        }
    }
}

TEST_CASE("oracle equivalence on random weights", "[initial][property]") {
    Rng rng(227);
    for (const auto& entry : testsupport::plane_corpus()) {
        LaurentPoly f = entry.poly();
        TropPoly F = tropicalize(f);
        for (int i = 0; i < 100; ++i) {
            std::vector<Rat> w = testsupport::random_weight(rng, entry.spec, 2);
            CHECK(member_via_initial(f, w) == in_hypersurface(F, w));
        }
    }
}

TEST_CASE("residue polynomial evaluation", "[initial]") {
    // x + 2y over Q at (2, -1)
    ResiduePoly g(2, 0);
    g.add_term(Monomial{1, 0}, ResidueScalar(Rat(1), 0));
    g.add_term(Monomial{0, 1}, ResidueScalar(Rat(2), 0));
    std::vector<ResidueScalar> p{ResidueScalar(Rat(2), 0), ResidueScalar(Rat(-1), 0)};
    CHECK(residue_eval(g, p).is_zero());

    // x + y + 1 over Z/2 at (1, 1) is 1
    ResiduePoly h(2, 2);
    h.add_term(Monomial{1, 0}, ResidueScalar(Rat(1), 2));
    h.add_term(Monomial{0, 1}, ResidueScalar(Rat(1), 2));
    h.add_term(Monomial{0, 0}, ResidueScalar(Rat(1), 2));
    std::vector<ResidueScalar> q{ResidueScalar(Rat(1), 2), ResidueScalar(Rat(1), 2)};
    CHECK(residue_eval(h, q) == ResidueScalar(Rat(1), 2));

    // negative exponents use field inverses
    ResiduePoly k(2, 0);
    k.add_term(Monomial{-1, 0}, ResidueScalar(Rat(3), 0));
    std::vector<ResidueScalar> r{ResidueScalar(Rat(2), 0), ResidueScalar(Rat(1), 0)};
    CHECK(residue_eval(k, r) == ResidueScalar(Rat(3, 2), 0));
}
