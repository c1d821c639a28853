#pragma once

// Valued coefficient fields and their splitting / residue machinery.
//
// Three fields are supported, each with exact arithmetic on a Q-based
// representation:
//   trivial   — Q with val(a) = 0 for a != 0
//   padic:p   — Q with the p-adic valuation; scalars stay exact rationals
//   puiseux   — truncated Puiseux series over Q, val = least exponent
//
// The splitting u -> t^u (1, p^u, or the one-term series t^u) and the residue
// map to the residue field (Q, Z/pZ, or Q) follow the usual conventions.

#include <cassert>
#include <string>
#include <utility>
#include <variant>

#include "tropgeo/errors.hpp"
#include "tropgeo/puiseux.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

enum class FieldKind { Trivial, Padic, Puiseux };

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

class ValuationSpec {
public:
    static ValuationSpec trivial() { return ValuationSpec(FieldKind::Trivial, 0, Rat(10)); }

    static ValuationSpec padic(long long p) {
        if (!detail::is_prime(p))
            throw Error("p-adic field requires a prime, got " + std::to_string(p));
        return ValuationSpec(FieldKind::Padic, p, Rat(10));
    }

    static ValuationSpec puiseux(Rat default_precision = Rat(10)) {
        if (default_precision <= 0) throw Error("Puiseux default precision must be positive");
        return ValuationSpec(FieldKind::Puiseux, 0, std::move(default_precision));
    }

    // "trivial", "padic:<p>", "puiseux[:precision]".
    static ValuationSpec from_string(const std::string& text) {
        if (text == "trivial") return trivial();
        if (text == "puiseux") return puiseux();
        if (text.rfind("padic:", 0) == 0) {
            const std::string arg = text.substr(6);
            try {
                std::size_t used = 0;
                long long p = std::stoll(arg, &used);
                if (used != arg.size()) throw Error("");
                return padic(p);
            } catch (const std::exception&) {
                throw Error("bad p-adic field spec '" + text + "'");
            }
        }
        if (text.rfind("puiseux:", 0) == 0) {
            const std::string arg = text.substr(8);
            const auto slash = arg.find('/');
            try {
                if (slash == std::string::npos) return puiseux(Rat(Int(arg)));
                return puiseux(Rat(Int(arg.substr(0, slash)), Int(arg.substr(slash + 1))));
            } catch (const std::exception&) {
                throw Error("bad Puiseux precision in field spec '" + text + "'");
            }
        }
        throw Error("unknown field spec '" + text + "' (expected trivial, padic:<p>, puiseux[:q])");
    }

    FieldKind kind() const { return kind_; }
    long long prime() const {
        assert(kind_ == FieldKind::Padic);
        return p_;
    }
    const Rat& default_precision() const { return default_precision_; }

    // Characteristic of the residue field (0 for Q).
    long long residue_char() const { return kind_ == FieldKind::Padic ? p_ : 0; }

    std::string to_string() const {
        switch (kind_) {
            case FieldKind::Trivial: return "trivial";
            case FieldKind::Padic: return "padic:" + std::to_string(p_);
            case FieldKind::Puiseux: return "puiseux:" + rat_to_string(default_precision_);
        }
        return "";
    }

    friend bool operator==(const ValuationSpec& a, const ValuationSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.default_precision_ == b.default_precision_;
    }

private:
    ValuationSpec(FieldKind kind, long long p, Rat prec)
        : kind_(kind), p_(p), default_precision_(std::move(prec)) {}

    FieldKind kind_;
    long long p_;
    Rat default_precision_;
};

// A field element: exact rational under trivial/p-adic, truncated series
// under puiseux. The variant tag must agree with the ambient ValuationSpec.
using Scalar = std::variant<Rat, PuiseuxSeries>;

inline bool scalar_matches(const Scalar& a, const ValuationSpec& spec) {
    return (spec.kind() == FieldKind::Puiseux) == std::holds_alternative<PuiseuxSeries>(a);
}

inline Scalar scalar_zero(const ValuationSpec& spec) {
    if (spec.kind() == FieldKind::Puiseux) return PuiseuxSeries();
    return Rat(0);
}

inline Scalar scalar_one(const ValuationSpec& spec) {
    if (spec.kind() == FieldKind::Puiseux) return PuiseuxSeries::constant(Rat(1));
    return Rat(1);
}

inline Scalar scalar_from_rat(const Rat& c, const ValuationSpec& spec) {
    if (spec.kind() == FieldKind::Puiseux) return PuiseuxSeries::constant(c);
    return c;
}

inline bool scalar_is_exact_zero(const Scalar& a) {
    if (const Rat* r = std::get_if<Rat>(&a)) return *r == 0;
    return std::get<PuiseuxSeries>(a).is_exact_zero();
}

inline Scalar scalar_add(const Scalar& a, const Scalar& b) {
    if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) + std::get<Rat>(b);
    return pui_add(std::get<PuiseuxSeries>(a), std::get<PuiseuxSeries>(b));
}

inline Scalar scalar_neg(const Scalar& a) {
    if (std::holds_alternative<Rat>(a)) return Rat(-std::get<Rat>(a));
    return pui_neg(std::get<PuiseuxSeries>(a));
}

inline Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) * std::get<Rat>(b);
    return pui_mul(std::get<PuiseuxSeries>(a), std::get<PuiseuxSeries>(b));
}

inline Scalar scalar_pow(const Scalar& a, long long e, const ValuationSpec& spec) {
    if (const Rat* r = std::get_if<Rat>(&a)) {
        if (e == 0) return Rat(1);
        if (*r == 0) throw ZeroDivide("zero raised to a negative power");
        Rat base = e > 0 ? *r : Rat(1) / *r;
        unsigned long long n = e > 0 ? static_cast<unsigned long long>(e)
                                     : static_cast<unsigned long long>(-e);
        Rat acc(1);
        while (n > 0) {
            if (n & 1ull) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }
    return pui_pow(std::get<PuiseuxSeries>(a), e, spec.default_precision());
}

inline bool scalar_eq(const Scalar& a, const Scalar& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) == std::get<Rat>(b);
    return std::get<PuiseuxSeries>(a) == std::get<PuiseuxSeries>(b);
}

inline std::string scalar_to_string(const Scalar& a) {
    if (const Rat* r = std::get_if<Rat>(&a)) return rat_to_string(*r);
    return pui_to_string(std::get<PuiseuxSeries>(a));
}

namespace detail {

// Exponent of p in n, n != 0.
inline long long padic_val_int(Int n, long long p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace detail

// The valuation map K* -> Q, extended by val(0) = infinity.
inline ExtRat val(const Scalar& a, const ValuationSpec& spec) {
    assert(scalar_matches(a, spec));
    switch (spec.kind()) {
        case FieldKind::Trivial: {
            const Rat& r = std::get<Rat>(a);
            return r == 0 ? ExtRat::infinity() : ExtRat(Rat(0));
        }
        case FieldKind::Padic: {
            const Rat& r = std::get<Rat>(a);
            if (r == 0) return ExtRat::infinity();
            const long long p = spec.prime();
            return ExtRat(Rat(detail::padic_val_int(numerator(r), p) -
                              detail::padic_val_int(denominator(r), p)));
        }
        case FieldKind::Puiseux: return std::get<PuiseuxSeries>(a).val();
    }
    return ExtRat::infinity();
}

// Section of the valuation: u -> t^u with val(t^u) = u.
inline Scalar split(const Rat& u, const ValuationSpec& spec) {
    switch (spec.kind()) {
        case FieldKind::Trivial:
            if (u != 0) throw NotInValueGroup("value group of the trivial valuation is {0}");
            return Rat(1);
        case FieldKind::Padic: {
            if (!is_integer(u)) throw NotInValueGroup("p-adic value group is Z");
            long long e = rat_to_ll(u);
            Rat base(spec.prime());
            Rat acc(1);
            bool invert = e < 0;
            unsigned long long n = invert ? static_cast<unsigned long long>(-e)
                                          : static_cast<unsigned long long>(e);
            while (n > 0) {
                if (n & 1ull) acc *= base;
                base *= base;
                n >>= 1;
            }
            return invert ? Rat(1) / acc : acc;
        }
        case FieldKind::Puiseux: return PuiseuxSeries::monomial(Rat(1), u);
    }
    return Rat(1);
}

// Element of the residue field: a rational for Q residue fields, an integer
// in [0, p) for Z/pZ. Arithmetic is field arithmetic of the residue field.
class ResidueScalar {
public:
    ResidueScalar() : p_(0) {}
    ResidueScalar(Rat value, long long p) : value_(std::move(value)), p_(p) {
        if (p_ != 0) normalize();
    }

    static ResidueScalar from_integer(long long v, long long p) { return ResidueScalar(Rat(v), p); }

    const Rat& value() const { return value_; }
    long long characteristic() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const ResidueScalar& a, const ResidueScalar& b) {
        return a.p_ == b.p_ && a.value_ == b.value_;
    }

    friend ResidueScalar operator+(const ResidueScalar& a, const ResidueScalar& b) {
        assert(a.p_ == b.p_);
        return ResidueScalar(a.value_ + b.value_, a.p_);
    }

    friend ResidueScalar operator*(const ResidueScalar& a, const ResidueScalar& b) {
        assert(a.p_ == b.p_);
        return ResidueScalar(a.value_ * b.value_, a.p_);
    }

    friend ResidueScalar operator-(const ResidueScalar& a) {
        return ResidueScalar(-a.value_, a.p_);
    }

    ResidueScalar inverse() const {
        if (is_zero()) throw ZeroDivide("inverse of zero in the residue field");
        if (p_ == 0) return ResidueScalar(Rat(1) / value_, 0);
        // Extended Euclid on (v, p).
        long long v = rat_to_ll(value_), p = p_;
        long long r0 = p, r1 = v, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1;
            long long s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        assert(r0 == 1);
        return ResidueScalar(Rat(((s0 % p) + p) % p), p_);
    }

    std::string to_string() const { return rat_to_string(value_); }

private:
    void normalize() {
        // value_ is an integer mod p, or a fraction with denominator coprime
        // to p; reduce to the canonical representative in [0, p).
        Int n = numerator(value_) % p_;
        Int d = denominator(value_) % p_;
        if (n < 0) n += p_;
        if (d < 0) d += p_;
        long long nn = n.convert_to<long long>();
        long long dd = d.convert_to<long long>();
        assert(dd != 0);
        if (dd != 1) {
            ResidueScalar inv = ResidueScalar(Rat(dd), p_).inverse();
            nn = (nn * rat_to_ll(inv.value_)) % p_;
        }
        value_ = Rat(nn % p_);
    }

    Rat value_;
    long long p_;
};

// Reduction modulo the maximal ideal of the valuation ring. Requires
// val(a) >= 0; callers normalize units first via multiplication by
// split(-val(a)).
inline ResidueScalar residue(const Scalar& a, const ValuationSpec& spec) {
    assert(scalar_matches(a, spec));
    switch (spec.kind()) {
        case FieldKind::Trivial: return ResidueScalar(std::get<Rat>(a), 0);
        case FieldKind::Padic: {
            const Rat& r = std::get<Rat>(a);
            if (r != 0 && val(a, spec) < ExtRat(Rat(0)))
                throw NegativeValuation("residue of an element with negative valuation");
            return ResidueScalar(r, spec.prime());
        }
        case FieldKind::Puiseux: {
            const PuiseuxSeries& s = std::get<PuiseuxSeries>(a);
            for (const auto& t : s.terms()) {
                if (t.exponent < 0)
                    throw NegativeValuation("residue of a series with negative valuation");
                if (t.exponent == 0) return ResidueScalar(t.coeff, 0);
                break;  // terms sorted; leading exponent positive
            }
            // No t^0 term among the known ones; the constant term is 0
            // provided the precision window actually covers exponent 0.
            if (!s.precision().is_infinite() && s.precision().finite() <= 0)
                throw PrecisionExhausted("constant term not determined by known terms");
            return ResidueScalar(Rat(0), 0);
        }
    }
    return ResidueScalar();
}

}  // namespace tropgeo
