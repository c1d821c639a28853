#pragma once

// Shared test fixtures: a corpus of named example polynomials exercised by
// several suites, and a small deterministic random generator.

#include <random>
#include <string>
#include <vector>

#include "tropgeo/tropgeo.hpp"

namespace testsupport {

using namespace tropgeo;

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(unsigned long long seed = 99991) : eng(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }

    // Nonzero rational with bounded numerator and denominator.
    Rat rational(long long maxnum = 20, long long maxden = 8) {
        Rat r;
        do {
            r = Rat(integer(-maxnum, maxnum), integer(1, maxden));
        } while (r == 0);
        return r;
    }

    Rat rational_any(long long maxnum = 20, long long maxden = 8) {
        return Rat(integer(-maxnum, maxnum), integer(1, maxden));
    }

    PuiseuxSeries puiseux(int max_terms = 3) {
        std::vector<PuiseuxTerm> terms;
        int k = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < k; ++i)
            terms.push_back({Rat(integer(-4, 8), 2), rational(9, 4)});
        return PuiseuxSeries(std::move(terms), ExtRat::infinity());
    }
};

struct CorpusEntry {
    std::string name;
    ValuationSpec spec;
    std::vector<std::string> vars;
    std::string text;

    LaurentPoly poly() const { return parse_poly(text, spec, vars); }
};

// Bivariate examples used across the geometry suites.
inline const std::vector<CorpusEntry>& plane_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"quadric-subdiv", ValuationSpec::padic(2), {"x", "y"},
         "2*x^2+x*y-6*y^2+5*x-3*y+2"},
        {"quadric-groebner", ValuationSpec::padic(2), {"x", "y"},
         "2*x^2+x*y+6*y^2+5*x-3*y+4"},
        {"quadric-ft", ValuationSpec::padic(2), {"x", "y"}, "4*x^2+x*y-4*y^2+x-y-4"},
        {"quadric-val-map", ValuationSpec::padic(2), {"x", "y"},
         "6*x^2+5*x*y+10*y^2+3*x-y+4"},
        {"cubic-3adic", ValuationSpec::padic(3), {"x", "y"},
         "27*x^3+6*x^2*y+12*x*y^2+81*y^3+3*x^2+5*x*y+3*y^2+3*x+2*y+243"},
        {"quartic-fan", ValuationSpec::trivial(), {"x", "y"}, "x^2*y^2+x^3+y^3+1"},
        {"five-rays", ValuationSpec::trivial(), {"x", "y"},
         "x^2+3*x+2+x^2*y+2*x*y^2-2*y^2"},
        {"newton-example", ValuationSpec::trivial(), {"x", "y"}, "x^2*y+5*y^2-3*x+2"},
        {"elliptic", ValuationSpec::puiseux(), {"x", "y"},
         "(t^3)*x^3 + x^2*y + x*y^2 + (t^3)*y^3 + x^2 + (t^(-1))*x*y + y^2 + x + y + t^3"},
        {"line", ValuationSpec::puiseux(), {"x", "y"}, "x+y+1"},
    };
    return corpus;
}

// Weight-vector sample inside the value group of the field.
inline std::vector<Rat> random_weight(Rng& rng, const ValuationSpec& spec, std::size_t n) {
    std::vector<Rat> w;
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.kind() == FieldKind::Padic)
            w.push_back(Rat(rng.integer(-8, 8)));
        else
            w.push_back(Rat(rng.integer(-16, 16), rng.integer(1, 4)));
    }
    return w;
}

// Random bivariate polynomial over the 2-adics with support in a small box;
// the support always spans the plane.
inline LaurentPoly random_plane_poly(Rng& rng, int max_points = 12) {
    const ValuationSpec spec = ValuationSpec::padic(2);
    for (;;) {
        LaurentPoly f(2, spec);
        int k = static_cast<int>(rng.integer(3, max_points));
        for (int i = 0; i < k; ++i) {
            Monomial u{rng.integer(-3, 3), rng.integer(-3, 3)};
            Rat c = Rat(rng.integer(1, 256)) / Rat(rng.integer(1, 16));
            if (rng.integer(0, 1)) c = -c;
            f.add_term(u, c);
        }
        if (f.terms().size() < 3) continue;
        std::vector<LatticePoint> sup;
        for (const auto& [u, c] : f.terms()) sup.push_back({u[0], u[1]});
        if (all_collinear(sup)) continue;
        return f;
    }
}

}  // namespace testsupport
