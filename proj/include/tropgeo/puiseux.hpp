#pragma once

// Truncated Puiseux series: finitely many terms c*t^e with rational
// exponents (any finite list shares a common denominator automatically),
// plus an explicit precision bound q meaning "terms with exponent >= q are
// unknown". A series that is known exactly (every literal, and any
// sum/product of exact series) carries the infinite-precision sentinel, so
// the exact zero is representable and distinguishable from "zero up to
// O(t^q)".

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct PuiseuxTerm {
    Rat exponent;
    Rat coeff;

    friend bool operator==(const PuiseuxTerm& a, const PuiseuxTerm& b) {
        return a.exponent == b.exponent && a.coeff == b.coeff;
    }
};

class PuiseuxSeries {
public:
    // Exact zero.
    PuiseuxSeries() = default;

    static PuiseuxSeries constant(Rat c) { return monomial(std::move(c), Rat(0)); }

    // Exact c * t^e.
    static PuiseuxSeries monomial(Rat c, Rat e) {
        PuiseuxSeries s;
        if (c != 0) s.terms_.push_back({std::move(e), std::move(c)});
        return s;
    }

    // General constructor: terms are sorted and combined, zero coefficients
    // and terms at or beyond the precision bound are dropped.
    PuiseuxSeries(std::vector<PuiseuxTerm> terms, ExtRat precision)
        : precision_(std::move(precision)) {
        std::sort(terms.begin(), terms.end(),
                  [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exponent < b.exponent; });
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().exponent == t.exponent) {
                terms_.back().coeff += t.coeff;
                if (terms_.back().coeff == 0) terms_.pop_back();
            } else if (t.coeff != 0) {
                terms_.push_back(std::move(t));
            }
        }
        if (!precision_.is_infinite()) {
            while (!terms_.empty() && terms_.back().exponent >= precision_.finite()) terms_.pop_back();
        }
    }

    const std::vector<PuiseuxTerm>& terms() const { return terms_; }
    const ExtRat& precision() const { return precision_; }

    bool is_exact() const { return precision_.is_infinite(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    // Least exponent with a known nonzero coefficient; infinity for the exact
    // zero. A series with no known terms but finite precision has
    // undetermined valuation.
    ExtRat val() const {
        if (!terms_.empty()) return ExtRat(terms_.front().exponent);
        if (is_exact()) return ExtRat::infinity();
        throw PrecisionExhausted("series is zero up to O(t^" + rat_to_string(precision_.finite()) +
                                 "); valuation not determined by known terms");
    }

    // Lower bound for the valuation: the precision bound when no term is known.
    ExtRat val_lower_bound() const {
        if (!terms_.empty()) return ExtRat(terms_.front().exponent);
        return precision_;
    }

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return a.precision_ == b.precision_ && a.terms_ == b.terms_;
    }

private:
    std::vector<PuiseuxTerm> terms_;
    ExtRat precision_ = ExtRat::infinity();
};

inline PuiseuxSeries pui_truncate(const PuiseuxSeries& a, const ExtRat& precision) {
    return PuiseuxSeries(a.terms(), min(a.precision(), precision));
}

inline PuiseuxSeries pui_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::vector<PuiseuxTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return PuiseuxSeries(std::move(terms), min(a.precision(), b.precision()));
}

inline PuiseuxSeries pui_neg(const PuiseuxSeries& a) {
    std::vector<PuiseuxTerm> terms = a.terms();
    for (auto& t : terms) t.coeff = -t.coeff;
    return PuiseuxSeries(std::move(terms), a.precision());
}

inline PuiseuxSeries pui_sub(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return pui_add(a, pui_neg(b));
}

inline PuiseuxSeries pui_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PuiseuxSeries();
    // Result precision: an unknown O(t^p) tail of one factor multiplies the
    // other factor's leading term, so precisions shift by the valuation
    // (lower bound) of the opposite factor.
    ExtRat prec = min(a.precision() + b.val_lower_bound(), b.precision() + a.val_lower_bound());
    std::vector<PuiseuxTerm> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            terms.push_back({ta.exponent + tb.exponent, ta.coeff * tb.coeff});
    return PuiseuxSeries(std::move(terms), prec);
}

// Multiplicative inverse. Exact monomials invert exactly; otherwise the
// geometric-series expansion is truncated at `default_rel_prec` known
// exponents above the valuation (or at the input's own relative precision,
// whichever is determined).
inline PuiseuxSeries pui_inverse(const PuiseuxSeries& a, const Rat& default_rel_prec) {
    if (a.terms().empty()) {
        if (a.is_exact()) throw ZeroDivide("division by exactly-zero series");
        throw PrecisionExhausted("cannot invert a series that is zero up to its precision");
    }
    const Rat v = a.terms().front().exponent;
    const Rat c0 = a.terms().front().coeff;
    if (a.terms().size() == 1 && a.is_exact()) {
        return PuiseuxSeries::monomial(Rat(1) / c0, -v);
    }
    Rat rel = a.is_exact() ? default_rel_prec : Rat(a.precision().finite() - v);

    // u = a / (c0 t^v) = 1 + h with val(h) > 0; 1/u = sum (-h)^k.
    std::vector<PuiseuxTerm> hterms;
    for (std::size_t i = 1; i < a.terms().size(); ++i)
        hterms.push_back({a.terms()[i].exponent - v, a.terms()[i].coeff / c0});
    PuiseuxSeries h(std::move(hterms), ExtRat(rel));
    PuiseuxSeries neg_h = pui_neg(h);

    PuiseuxSeries sum = PuiseuxSeries(std::vector<PuiseuxTerm>{{Rat(0), Rat(1)}}, ExtRat(rel));
    PuiseuxSeries power = sum;
    while (!power.terms().empty()) {
        power = pui_mul(power, neg_h);
        power = pui_truncate(power, ExtRat(rel));
        sum = pui_add(sum, power);
    }
    // Scale by t^{-v}/c0; the result is known up to exponent -v + rel.
    std::vector<PuiseuxTerm> out;
    for (const auto& t : sum.terms()) out.push_back({t.exponent - v, t.coeff / c0});
    return PuiseuxSeries(std::move(out), ExtRat(rel - v));
}

inline PuiseuxSeries pui_pow(const PuiseuxSeries& a, long long e, const Rat& default_rel_prec) {
    if (e == 0) return PuiseuxSeries::constant(Rat(1));
    PuiseuxSeries base = e > 0 ? a : pui_inverse(a, default_rel_prec);
    unsigned long long n = e > 0 ? static_cast<unsigned long long>(e)
                                 : static_cast<unsigned long long>(-e);
    PuiseuxSeries acc = PuiseuxSeries::constant(Rat(1));
    while (n > 0) {
        if (n & 1ull) acc = pui_mul(acc, base);
        base = pui_mul(base, base);
        n >>= 1;
    }
    return acc;
}

// Literal syntax shared with the polynomial parser: "3*t^(-1/2) + 8*t^2",
// "t", "2 - t". Finite precision is shown as a trailing O(t^q) marker.
inline std::string pui_to_string(const PuiseuxSeries& a) {
    std::string out;
    for (const auto& t : a.terms()) {
        Rat c = t.coeff;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (t.exponent == 0) {
            out += rat_to_string(c);
            continue;
        }
        if (c != 1) out += rat_to_string(c) + "*";
        out += "t";
        if (t.exponent != 1) {
            if (t.exponent < 0 || !is_integer(t.exponent))
                out += "^(" + rat_to_string(t.exponent) + ")";
            else
                out += "^" + rat_to_string(t.exponent);
        }
    }
    if (!a.precision().is_infinite()) {
        if (!out.empty()) out += " + ";
        out += "O(t^" + rat_to_string(a.precision().finite()) + ")";
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace tropgeo
