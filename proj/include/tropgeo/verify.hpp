#pragma once

// Desk-scale checks relating points of a classical hypersurface to its
// tropicalization: evaluate a point and compare its valuation vector against
// tropical membership (the easy containment direction), the explicit
// case-by-case construction of points on the line x + y + 1 = 0 over
// Puiseux series, and a first-order lifting certificate built from rational
// zeros of the initial form.

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/initial.hpp"
#include "tropgeo/laurent.hpp"
#include "tropgeo/tropical.hpp"
#include "tropgeo/valuation.hpp"

namespace tropgeo {

enum class ZeroState { ExactZero, ZeroToPrecision, Nonzero };

struct PointCheck {
    std::vector<Scalar> point;
    Scalar value;                          // f at the point
    ZeroState is_zero = ZeroState::Nonzero;
    std::optional<Rat> precision_margin;   // q - trop(f)(val vector), for truncated zeros
    std::vector<Rat> val_vector;
    bool in_trop = false;
};

inline PointCheck check_point(const LaurentPoly& f, std::span<const Scalar> point) {
    PointCheck result;
    result.point.assign(point.begin(), point.end());
    result.value = evaluate(f, point);

    for (const Scalar& x : point) {
        ExtRat v = val(x, f.spec());  // nonzero coordinates have finite valuation
        assert(!v.is_infinite());
        result.val_vector.push_back(v.finite());
    }

    TropPoly F = tropicalize(f);
    result.in_trop = in_hypersurface(F, result.val_vector);

    if (const Rat* r = std::get_if<Rat>(&result.value)) {
        result.is_zero = *r == 0 ? ZeroState::ExactZero : ZeroState::Nonzero;
    } else {
        const PuiseuxSeries& s = std::get<PuiseuxSeries>(result.value);
        if (s.is_exact_zero()) {
            result.is_zero = ZeroState::ExactZero;
        } else if (s.terms().empty()) {
            result.is_zero = ZeroState::ZeroToPrecision;
            ExtRat t = trop_eval(F, result.val_vector);
            result.precision_margin = s.precision().finite() - t.finite();
        } else {
            result.is_zero = ZeroState::Nonzero;
        }
    }
    return result;
}

// The tropical line min(x, y, 0) consists of three rays from the origin; for
// each w on it there is an explicit Puiseux point of V(x + y + 1) with
// valuation vector w:
//   (lambda, 0), lambda > 0        -> (t^lambda, -1 - t^lambda)
//   (0, lambda), lambda > 0        -> (-1 + t^lambda, -t^lambda)
//   (lambda, lambda), lambda < 0   -> (t^lambda, -t^lambda - 1)
//   (0, 0)                         -> (1, -2)
// Returns nothing exactly when w is not on the tropical line.
inline std::optional<std::pair<PuiseuxSeries, PuiseuxSeries>> line_case_analysis(
    const Rat& w1, const Rat& w2) {
    auto t_pow = [](const Rat& e) { return PuiseuxSeries::monomial(Rat(1), e); };
    const PuiseuxSeries one = PuiseuxSeries::constant(Rat(1));

    if (w1 > 0 && w2 == 0)
        return std::make_pair(t_pow(w1), pui_sub(pui_neg(one), t_pow(w1)));
    if (w1 == 0 && w2 > 0)
        return std::make_pair(pui_add(pui_neg(one), t_pow(w2)), pui_neg(t_pow(w2)));
    if (w1 == w2 && w1 < 0)
        return std::make_pair(t_pow(w1), pui_sub(pui_neg(t_pow(w1)), one));
    if (w1 == 0 && w2 == 0)
        return std::make_pair(one, PuiseuxSeries::constant(Rat(-2)));
    return std::nullopt;
}

struct Witness {
    std::vector<Scalar> point;      // (split(w1)*a, split(w2)*b)
    Rat residue_a;
    Rat residue_b;                  // the residue-field zero (a, b)
    ExtRat delta;                   // val(f(point)) - trop(f)(w), > 0
    bool delta_is_lower_bound = false;
};

namespace detail {

// All rational roots of sum_i coeffs[i] * y^i (coeffs rational, nonzero
// leading and trailing), via the rational root theorem after clearing
// denominators. Sorted ascending.
inline std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
    assert(coeffs.size() >= 1 && coeffs.front() != 0 && coeffs.back() != 0);
    Int lcm(1);
    for (const Rat& c : coeffs) lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    std::vector<Int> a;
    for (const Rat& c : coeffs) a.push_back(numerator(c) * (lcm / denominator(c)));

    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    std::vector<Rat> candidates;
    for (const Int& p : divisors(a.front()))
        for (const Int& q : divisors(a.back())) {
            candidates.push_back(Rat(p, q));
            candidates.push_back(Rat(-p, q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Rat> roots;
    for (const Rat& r : candidates) {
        Rat acc(0);
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + Rat(*it);
        if (acc == 0) roots.push_back(r);
    }
    return roots;
}

// Nonzero residue-field zeros (a, b) of g with a = fixed positive integer,
// solving in b. Returns ascending candidates for b.
inline std::vector<Rat> zeros_in_second_variable(const ResiduePoly& g, long long a_int) {
    const long long p = g.characteristic();
    ResidueScalar a(Rat(a_int), p);

    // Collapse g(a, y) to a univariate Laurent polynomial in y.
    std::map<long long, ResidueScalar> coeff;
    for (const auto& [u, c] : g.terms()) {
        ResidueScalar v = c;
        long long e = u[0];
        ResidueScalar base = e >= 0 ? a : a.inverse();
        for (long long k = 0; k < (e >= 0 ? e : -e); ++k) v = v * base;
        auto it = coeff.find(u[1]);
        if (it == coeff.end())
            coeff.emplace(u[1], v);
        else {
            ResidueScalar s = it->second + v;
            if (s.is_zero())
                coeff.erase(it);
            else
                it->second = s;
        }
    }
    if (coeff.empty()) return {};  // g(a, y) vanishes identically; caller skips such a

    if (p != 0) {
        // Finite residue field: test every unit.
        std::vector<Rat> roots;
        for (long long b = 1; b < p; ++b) {
            ResidueScalar acc(Rat(0), p);
            ResidueScalar bb(Rat(b), p);
            for (const auto& [e, c] : coeff) {
                ResidueScalar term = c;
                ResidueScalar base = e >= 0 ? bb : bb.inverse();
                for (long long k = 0; k < (e >= 0 ? e : -e); ++k) term = term * base;
                acc = acc + term;
            }
            if (acc.is_zero()) roots.push_back(Rat(b));
        }
        return roots;
    }

    // Rational case: normalize y^{min} out and apply the rational root theorem.
    const long long lo = coeff.begin()->first;
    const long long hi = coeff.rbegin()->first;
    std::vector<Rat> dense(static_cast<std::size_t>(hi - lo) + 1, Rat(0));
    for (const auto& [e, c] : coeff) dense[static_cast<std::size_t>(e - lo)] = c.value();
    std::vector<Rat> roots;
    if (dense.size() == 1) return {};  // g(a, y) is a monomial in y: no torus zero
    for (const Rat& r : rational_roots(dense))
        if (r != 0) roots.push_back(r);
    return roots;
}

}  // namespace detail

// First-order certificate for the lifting direction of tropical membership:
// search the residue-field torus for a zero (a, b) of in_w(f) by scanning
// a in {1..bound} (skipping values killing the leading or trailing
// y-coefficient) and solving for b; accept when the lifted point
// (split(w1)*a, split(w2)*b) cancels strictly below the tropical value.
// An empty result is inconclusive, never a disproof.
inline std::optional<Witness> first_order_witness(const LaurentPoly& f, std::span<const Rat> w,
                                                  long long bound = 50) {
    if (f.nvars() != 2) throw DimensionMismatch("witness search is implemented for two variables");
    if (!member_via_initial(f, w))
        throw NotInTropicalVariety("w is not on the tropical hypersurface of f");

    const ResiduePoly g = initial_form(f, w);
    const long long p = g.characteristic();

    // Leading and trailing coefficients of g as a polynomial in y, themselves
    // polynomials in x; scanned values of a that kill either are skipped.
    long long ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& [u, c] : g.terms()) {
        if (first || u[1] < ymin) ymin = u[1];
        if (first || u[1] > ymax) ymax = u[1];
        first = false;
    }
    ResiduePoly lead(1, p), trail(1, p);
    for (const auto& [u, c] : g.terms()) {
        if (u[1] == ymax) lead.add_term(Monomial{u[0]}, c);
        if (u[1] == ymin) trail.add_term(Monomial{u[0]}, c);
    }

    const ExtRat trop_value = trop_eval(tropicalize(f), w);
    const long long a_limit = p == 0 ? bound : std::min(bound, p - 1);

    for (long long a = 1; a <= a_limit; ++a) {
        ResidueScalar ra(Rat(a), p);
        std::vector<ResidueScalar> probe{ra};
        if (residue_eval(lead, probe).is_zero() || residue_eval(trail, probe).is_zero()) continue;

        for (const Rat& b : detail::zeros_in_second_variable(g, a)) {
            // The splitting of the trivial valuation sends everything to 1.
            auto lift = [&](const Rat& wi, const Rat& r) {
                if (f.spec().kind() == FieldKind::Trivial) return scalar_from_rat(r, f.spec());
                return scalar_mul(split(wi, f.spec()), scalar_from_rat(r, f.spec()));
            };
            std::vector<Scalar> point{lift(w[0], Rat(a)), lift(w[1], b)};
            Scalar value = evaluate(f, point);

            ExtRat delta;
            bool lower_bound = false;
            if (const Rat* r = std::get_if<Rat>(&value)) {
                ExtRat v = *r == 0 ? ExtRat::infinity() : val(value, f.spec());
                delta = v - trop_value;
            } else {
                const PuiseuxSeries& s = std::get<PuiseuxSeries>(value);
                if (s.is_exact_zero()) {
                    delta = ExtRat::infinity();
                } else if (s.terms().empty()) {
                    delta = s.precision() - trop_value;
                    lower_bound = true;
                } else {
                    delta = ExtRat(s.terms().front().exponent) - trop_value;
                }
            }
            if (!(ExtRat(Rat(0)) < delta)) continue;  // no cancellation: not a certificate

            Witness wit;
            wit.point = std::move(point);
            wit.residue_a = Rat(a);
            wit.residue_b = b;
            wit.delta = delta;
            wit.delta_is_lower_bound = lower_bound;
            return wit;
        }
    }
    return std::nullopt;
}

}  // namespace tropgeo
