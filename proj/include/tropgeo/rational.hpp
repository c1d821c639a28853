#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals and the extension
// of Q by +infinity that serves as the additive identity of the min-plus
// semiring. All geometry in this library is exact; floating point appears
// only in SVG output formatting.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <string>
#include <utility>

#include "tropgeo/errors.hpp"

namespace tropgeo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }
inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline long long rat_to_ll(const Rat& r) {
    assert(is_integer(r));
    return numerator(r).convert_to<long long>();
}

// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Q extended by +infinity. Ordinary arithmetic semantics: infinity dominates
// addition and is greater than every finite value. The tropical semiring view
// (min as addition) lives in TropScalar.
class ExtRat {
public:
    ExtRat() : infinite_(true) {}
    ExtRat(Rat v) : infinite_(false), value_(std::move(v)) {}
    ExtRat(long long v) : ExtRat(Rat(v)) {}

    static ExtRat infinity() { return ExtRat(); }

    bool is_infinite() const { return infinite_; }
    const Rat& finite() const {
        assert(!infinite_);
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtRat(a.value_ + b.value_);
    }

    // Defined whenever the result is determined: finite - finite and
    // infinity - finite.
    friend ExtRat operator-(const ExtRat& a, const ExtRat& b) {
        assert(!b.infinite_);
        if (a.infinite_) return infinity();
        return ExtRat(a.value_ - b.value_);
    }

    friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

private:
    bool infinite_;
    Rat value_{};
};

inline std::string ext_to_string(const ExtRat& v) {
    return v.is_infinite() ? "inf" : rat_to_string(v.finite());
}

// Decimal rendering of a rational with `sig` significant digits, exact
// positional notation, round half away from zero. Display-only helper for
// SVG output; never feeds back into geometry.
inline std::string format_decimal(const Rat& r, int sig = 6) {
    assert(sig >= 1);
    if (r == 0) return "0";
    const bool neg = r < 0;
    Rat a = neg ? Rat(-r) : r;

    // exp10 = floor(log10(a)), found by exact comparisons.
    int exp10 = 0;
    Rat t = a;
    while (t >= 10) {
        t /= 10;
        ++exp10;
    }
    while (t < 1) {
        t *= 10;
        --exp10;
    }

    // Round a / 10^(exp10-sig+1) to the nearest integer.
    int shift = sig - 1 - exp10;
    Rat scaled = a;
    for (int i = 0; i < shift; ++i) scaled *= 10;
    for (int i = 0; i < -shift; ++i) scaled /= 10;
    Int digits = rat_floor(scaled + Rat(1, 2));
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > sig) {
        // Rounding carried over (e.g. 9.99999... -> 10.0000); drop the extra digit.
        ds.pop_back();
        ++exp10;
    }

    std::string out;
    int point = exp10 + 1;  // digits before the decimal point
    if (point <= 0) {
        out = "0.";
        out.append(static_cast<std::size_t>(-point), '0');
        out += ds;
    } else if (point >= static_cast<int>(ds.size())) {
        out = ds;
        out.append(static_cast<std::size_t>(point - static_cast<int>(ds.size())), '0');
    } else {
        out = ds.substr(0, static_cast<std::size_t>(point)) + "." +
              ds.substr(static_cast<std::size_t>(point));
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

}  // namespace tropgeo
