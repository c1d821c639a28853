#pragma once

// Initial forms over the residue field and the Groebner-theoretic membership
// test for principal ideals: w lies on the tropical hypersurface of f
// exactly when in_w(f) is not a unit of the Laurent ring over the residue
// field, i.e. not a single monomial term.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/laurent.hpp"
#include "tropgeo/monomial.hpp"
#include "tropgeo/tropical.hpp"
#include "tropgeo/valuation.hpp"

namespace tropgeo {

// Laurent polynomial over the residue field (Q, or Z/pZ for p-adic fields).
class ResiduePoly {
public:
    ResiduePoly(int nvars, long long characteristic)
        : nvars_(nvars), characteristic_(characteristic) {}

    int nvars() const { return nvars_; }
    long long characteristic() const { return characteristic_; }
    const std::map<Monomial, ResidueScalar, GradedLexLess>& terms() const { return terms_; }

    void add_term(const Monomial& u, ResidueScalar c) {
        assert(static_cast<int>(u.size()) == nvars_);
        assert(c.characteristic() == characteristic_);
        if (c.is_zero()) return;
        auto it = terms_.find(u);
        if (it == terms_.end()) {
            terms_.emplace(u, std::move(c));
            return;
        }
        ResidueScalar sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }

    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
        return a.nvars_ == b.nvars_ && a.characteristic_ == b.characteristic_ &&
               a.terms_ == b.terms_;
    }

private:
    int nvars_;
    long long characteristic_;
    std::map<Monomial, ResidueScalar, GradedLexLess> terms_;
};

inline ResidueScalar residue_eval(const ResiduePoly& g, std::span<const ResidueScalar> point) {
    if (point.size() != static_cast<std::size_t>(g.nvars()))
        throw DimensionMismatch("point dimension does not match variable count");
    ResidueScalar acc(Rat(0), g.characteristic());
    for (const auto& [u, c] : g.terms()) {
        ResidueScalar term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            long long e = u[i];
            if (e == 0) continue;
            ResidueScalar base = e > 0 ? point[i] : point[i].inverse();
            for (long long k = 0; k < (e > 0 ? e : -e); ++k) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

inline std::string residue_poly_to_string(const ResiduePoly& g,
                                          std::span<const std::string> vars) {
    if (g.terms().empty()) return "0";
    std::string out;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        Rat c = it->second.value();
        const std::string mono = mono_to_string(it->first, vars);
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (mono == "1")
            out += rat_to_string(c);
        else {
            if (c != 1) out += rat_to_string(c) + "*";
            out += mono;
        }
    }
    return out;
}

// Coefficients of w must lie in the value group: integers for p-adic fields,
// arbitrary rationals for Puiseux. For the trivial valuation every rational
// w is accepted; val(c_u) = 0 makes the normalizing split trivial.
inline void require_in_value_group(std::span<const Rat> w, const ValuationSpec& spec) {
    if (spec.kind() == FieldKind::Padic) {
        for (const Rat& c : w)
            if (!is_integer(c))
                throw NotInValueGroup("p-adic initial forms need integer weight coordinates");
    }
}

// in_w(f): the residue-field polynomial spanned by the terms achieving the
// tropical minimum at w, each coefficient normalized to a unit by t^{-val}
// before reduction.
inline ResiduePoly initial_form(const LaurentPoly& f, std::span<const Rat> w) {
    if (f.is_zero()) throw ZeroPolynomial("initial form of the zero polynomial");
    if (w.size() != static_cast<std::size_t>(f.nvars()))
        throw DimensionMismatch("weight vector dimension does not match variable count");
    require_in_value_group(w, f.spec());

    TropPoly F = tropicalize(f);
    ExtRat m = trop_eval(F, w);
    ResiduePoly g(f.nvars(), f.spec().residue_char());
    for (const auto& [u, value] : F.terms()) {
        if (!(ExtRat(value + mono_dot(u, w)) == m)) continue;
        const Scalar& c = f.terms().at(u);
        Scalar unit = scalar_mul(split(-value, f.spec()), c);
        g.add_term(u, residue(unit, f.spec()));
    }
    assert(!g.terms().empty());
    return g;
}

// Units of the Laurent ring over a field are exactly the single nonzero
// monomial terms.
inline bool is_monomial(const ResiduePoly& g) { return g.terms().size() == 1; }

// w is on trop(V(f)) iff in_w(<f>) is a proper initial ideal, i.e. in_w(f)
// is not a monomial. Agrees with the min-achieved-twice test everywhere.
inline bool member_via_initial(const LaurentPoly& f, std::span<const Rat> w) {
    return !is_monomial(initial_form(f, w));
}

}  // namespace tropgeo
