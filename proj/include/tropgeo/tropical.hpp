#pragma once

// Min-plus arithmetic and the elementary theory of tropical polynomials:
// evaluation, the "minimum achieved twice" hypersurface test, and univariate
// roots with multiplicities read off the lower convex hull of the exponent /
// value diagram.

#include <span>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/laurent.hpp"
#include "tropgeo/monomial.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

// Semiring element: addition is min, multiplication is +. The additive
// identity is infinity (the default), the multiplicative identity is 0.
struct TropScalar {
    ExtRat v;

    TropScalar() : v(ExtRat::infinity()) {}
    TropScalar(ExtRat value) : v(std::move(value)) {}
    TropScalar(Rat value) : v(ExtRat(std::move(value))) {}

    static TropScalar zero() { return TropScalar(); }
    static TropScalar one() { return TropScalar(Rat(0)); }

    friend TropScalar operator+(const TropScalar& a, const TropScalar& b) {
        return TropScalar(min(a.v, b.v));
    }
    friend TropScalar operator*(const TropScalar& a, const TropScalar& b) {
        return TropScalar(a.v + b.v);
    }
    friend bool operator==(const TropScalar& a, const TropScalar& b) { return a.v == b.v; }

    // n-th tropical power, i.e. n * v in ordinary arithmetic.
    TropScalar pow(long long n) const {
        if (v.is_infinite()) return *this;
        return TropScalar(ExtRat(Rat(n) * v.finite()));
    }
};

// trop(f)(w) = min over terms of value + w.u, exactly.
inline ExtRat trop_eval(const TropPoly& F, std::span<const Rat> w) {
    if (F.empty()) return ExtRat::infinity();
    if (w.size() != static_cast<std::size_t>(F.nvars()))
        throw DimensionMismatch("weight vector dimension does not match variable count");
    ExtRat best = ExtRat::infinity();
    for (const auto& [u, c] : F.terms()) {
        ExtRat t = ExtRat(c + mono_dot(u, w));
        best = min(best, t);
    }
    return best;
}

// All terms attaining the minimum, in canonical order.
inline std::vector<Monomial> argmin_terms(const TropPoly& F, std::span<const Rat> w) {
    ExtRat m = trop_eval(F, w);
    std::vector<Monomial> out;
    for (const auto& [u, c] : F.terms())
        if (ExtRat(c + mono_dot(u, w)) == m) out.push_back(u);
    return out;
}

// w lies on the tropical hypersurface of F iff the minimum is achieved at
// least twice. A tropical monomial has an empty hypersurface.
inline bool in_hypersurface(const TropPoly& F, std::span<const Rat> w) {
    ExtRat m = trop_eval(F, w);
    int hits = 0;
    for (const auto& [u, c] : F.terms()) {
        if (ExtRat(c + mono_dot(u, w)) == m && ++hits >= 2) return true;
    }
    return false;
}

struct RootMult {
    Rat root;
    long long multiplicity;

    friend bool operator==(const RootMult& a, const RootMult& b) {
        return a.root == b.root && a.multiplicity == b.multiplicity;
    }
};

// Roots listed in strictly increasing order; multiplicities sum to the
// exponent spread of the input.
using RootMultiset = std::vector<RootMult>;

// Breakpoints of the piecewise-linear function min(value_e + e*x). The
// multiplicity of a breakpoint is the drop in slope across it, computed from
// the lower convex hull of the points (e, value_e).
inline RootMultiset univariate_roots(const TropPoly& F) {
    if (F.nvars() != 1) throw DimensionMismatch("univariate roots need a one-variable polynomial");
    if (F.terms().size() < 2)
        throw NoRoots("a tropical monomial has no roots");

    // Points sorted by exponent (map order is graded-lex = numeric here).
    std::vector<std::pair<Rat, Rat>> pts;  // (exponent, value)
    for (const auto& [u, c] : F.terms()) pts.emplace_back(Rat(u[0]), c);

    // Lower convex hull, monotone chain. Collinear middle points are not
    // hull vertices.
    std::vector<std::pair<Rat, Rat>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // cross of (b-a) x (p-a); keep strictly convex-from-below turns
            Rat cr = (b.first - a.first) * (p.second - a.second) -
                     (b.second - a.second) * (p.first - a.first);
            if (cr <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    // Each hull edge (e_k, c_k)-(e_{k+1}, c_{k+1}) contributes the breakpoint
    // where the two terms tie; slopes increase along the hull so breakpoints
    // decrease, and reversing yields ascending roots.
    RootMultiset roots;
    for (std::size_t k = hull.size() - 1; k >= 1; --k) {
        const auto& lo = hull[k - 1];
        const auto& hi = hull[k];
        Rat x = (lo.second - hi.second) / (hi.first - lo.first);
        long long mult = rat_to_ll(hi.first - lo.first);
        roots.push_back({std::move(x), mult});
    }
    return roots;
}

}  // namespace tropgeo
