#pragma once

// Laurent polynomials over a valued field, their tropicalizations, and exact
// evaluation. A polynomial is a finite map from exponent vectors to nonzero
// scalars in canonical (graded-lex) order; the zero polynomial is the empty
// map and is rejected by tropicalization and the geometry operations.

#include <cassert>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/monomial.hpp"
#include "tropgeo/valuation.hpp"

namespace tropgeo {

class LaurentPoly {
public:
    LaurentPoly(int nvars, ValuationSpec spec) : nvars_(nvars), spec_(std::move(spec)) {
        assert(nvars_ >= 1);
    }

    int nvars() const { return nvars_; }
    const ValuationSpec& spec() const { return spec_; }
    const std::map<Monomial, Scalar, GradedLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * x^u, combining with an existing term; exactly-zero results are
    // dropped so stored coefficients are never the exact zero.
    void add_term(const Monomial& u, Scalar c) {
        assert(static_cast<int>(u.size()) == nvars_);
        assert(scalar_matches(c, spec_));
        if (scalar_is_exact_zero(c)) return;
        auto it = terms_.find(u);
        if (it == terms_.end()) {
            terms_.emplace(u, std::move(c));
            return;
        }
        Scalar sum = scalar_add(it->second, c);
        if (scalar_is_exact_zero(sum))
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nvars_ != b.nvars_ || !(a.spec_ == b.spec_) || a.terms_.size() != b.terms_.size())
            return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !scalar_eq(ia->second, ib->second)) return false;
        return true;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        assert(a.nvars_ == b.nvars_ && a.spec_ == b.spec_);
        LaurentPoly r = a;
        for (const auto& [u, c] : b.terms_) r.add_term(u, c);
        return r;
    }

private:
    int nvars_;
    ValuationSpec spec_;
    std::map<Monomial, Scalar, GradedLexLess> terms_;
};

// Tropical polynomial: exponent vector -> valuation of the coefficient.
// Values are always finite.
class TropPoly {
public:
    explicit TropPoly(int nvars) : nvars_(nvars) { assert(nvars_ >= 1); }

    int nvars() const { return nvars_; }
    const std::map<Monomial, Rat, GradedLexLess>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Keeps the minimum when a monomial is inserted twice (two tropical terms
    // with the same monomial are tropically summed).
    void add_term(const Monomial& u, Rat value) {
        assert(static_cast<int>(u.size()) == nvars_);
        auto it = terms_.find(u);
        if (it == terms_.end())
            terms_.emplace(u, std::move(value));
        else if (value < it->second)
            it->second = std::move(value);
    }

    friend bool operator==(const TropPoly& a, const TropPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    int nvars_;
    std::map<Monomial, Rat, GradedLexLess> terms_;
};

// trop(f): coefficients replaced by their valuations, support unchanged.
inline TropPoly tropicalize(const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("cannot tropicalize the zero polynomial");
    TropPoly F(f.nvars());
    for (const auto& [u, c] : f.terms()) {
        ExtRat v = val(c, f.spec());
        assert(!v.is_infinite());  // stored coefficients are nonzero
        F.add_term(u, v.finite());
    }
    return F;
}

// Exponent translation f -> x^u * f; a unit of the Laurent ring, so every
// tropical and geometric invariant is unchanged up to the affine shift.
inline LaurentPoly shift_monomial(const LaurentPoly& f, const Monomial& u) {
    assert(static_cast<int>(u.size()) == f.nvars());
    LaurentPoly r(f.nvars(), f.spec());
    for (const auto& [m, c] : f.terms()) r.add_term(mono_add(m, u), c);
    return r;
}

// Exact evaluation at a point of the torus (all coordinates nonzero).
inline Scalar evaluate(const LaurentPoly& f, std::span<const Scalar> point) {
    if (point.size() != static_cast<std::size_t>(f.nvars()))
        throw DimensionMismatch("point dimension does not match variable count");
    for (const Scalar& x : point) {
        assert(scalar_matches(x, f.spec()));
        if (scalar_is_exact_zero(x))
            throw ZeroCoordinate("evaluation point must lie in the torus (nonzero coordinates)");
    }
    Scalar acc = scalar_zero(f.spec());
    for (const auto& [u, c] : f.terms()) {
        Scalar term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (u[i] == 0) continue;
            term = scalar_mul(term, scalar_pow(point[i], u[i], f.spec()));
        }
        acc = scalar_add(acc, term);
    }
    return acc;
}

// Canonical text form, graded-lex descending (largest terms first). Parsing
// this string with the same variable list reproduces the polynomial.
inline std::string poly_to_string(const LaurentPoly& f, std::span<const std::string> vars) {
    assert(vars.size() == static_cast<std::size_t>(f.nvars()));
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Monomial& u = it->first;
        const Scalar& c = it->second;
        const bool unit_mono = mono_to_string(u, vars) == "1";

        if (const Rat* r = std::get_if<Rat>(&c)) {
            Rat a = *r;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            if (unit_mono) {
                out += rat_to_string(a);
            } else {
                if (a != 1) out += rat_to_string(a) + "*";
                out += mono_to_string(u, vars);
            }
            continue;
        }

        const PuiseuxSeries& s = std::get<PuiseuxSeries>(c);
        if (s.terms().size() == 1 && s.terms()[0].exponent == 0 && s.is_exact()) {
            // Constant series print as plain rationals.
            Rat a = s.terms()[0].coeff;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            if (unit_mono)
                out += rat_to_string(a);
            else {
                if (a != 1) out += rat_to_string(a) + "*";
                out += mono_to_string(u, vars);
            }
        } else {
            if (!out.empty()) out += " + ";
            out += "(" + pui_to_string(s) + ")";
            if (!unit_mono) out += "*" + mono_to_string(u, vars);
        }
    }
    return out;
}

// trop(f) as a min of affine forms, e.g. "min(2*x + 1, x + y, 2)".
inline std::string trop_to_min_string(const TropPoly& F, std::span<const std::string> vars) {
    std::string out = "min(";
    bool first_piece = true;
    for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
        if (!first_piece) out += ", ";
        first_piece = false;
        const Monomial& u = it->first;
        std::string piece;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            long long e = u[i];
            if (piece.empty()) {
                if (e < 0) piece += "-";
            } else {
                piece += e < 0 ? " - " : " + ";
            }
            long long a = e < 0 ? -e : e;
            if (a != 1) piece += std::to_string(a) + "*";
            piece += vars[i];
        }
        const Rat& v = it->second;
        if (piece.empty()) {
            piece = rat_to_string(v);
        } else if (v != 0) {
            piece += v < 0 ? " - " : " + ";
            piece += rat_to_string(v < 0 ? Rat(-v) : v);
        }
        out += piece;
    }
    out += ")";
    return out;
}

// Term-list form accepted back by the CLI: "min-poly: v,mono; v,mono; ...".
inline std::string trop_to_minpoly_string(const TropPoly& F, std::span<const std::string> vars) {
    std::string out = "min-poly:";
    bool first = true;
    for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
        out += first ? " " : "; ";
        first = false;
        out += rat_to_string(it->second) + "," + mono_to_string(it->first, vars);
    }
    return out;
}

}  // namespace tropgeo
