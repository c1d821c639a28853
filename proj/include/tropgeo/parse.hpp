#pragma once

// Recursive-descent parser for Laurent polynomials over a valued field.
//
// Grammar (whitespace insignificant):
//   poly    := ['-'] term { ('+'|'-') term }
//   term    := coeff [ '*' monos ] | monos
//   monos   := mono { '*' mono }
//   mono    := VAR [ '^' iexp ]
//   iexp    := INT | '(' ['-'] INT ')' | '-' INT
//   coeff   := RAT | '(' puiseux ')' | pterm-with-t
//   puiseux := ['-'] pterm { ('+'|'-') pterm }
//   pterm   := RAT [ '*' 't' [ '^' rexp ] ] | 't' [ '^' rexp ]
//   rexp    := RAT | '(' ['-'] RAT ')'
//   RAT     := INT [ '/' POSINT ]
//
// Accepted input, Puiseux field: (t^3)*x^3 + x^2*y + (t^(-1))*x*y + t^3
//
// Inside a parenthesized coefficient 't' always denotes the series
// parameter. A bare 't' denotes a declared variable when one is named 't',
// and otherwise starts a Puiseux literal (an error outside a Puiseux field).
// Errors carry the byte offset of the offending token.

#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/laurent.hpp"
#include "tropgeo/monomial.hpp"
#include "tropgeo/valuation.hpp"

namespace tropgeo {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const ValuationSpec& spec,
               std::span<const std::string> vars)
        : s_(text), spec_(spec), vars_(vars) {}

    LaurentPoly parse_poly() {
        LaurentPoly f(static_cast<int>(vars_.size()), spec_);
        bool negative = accept('-');
        parse_term(f, negative);
        skip_ws();
        while (!at_end()) {
            if (accept('+'))
                parse_term(f, false);
            else if (accept('-'))
                parse_term(f, true);
            else
                fail("'+', '-' or end of input");
            skip_ws();
        }
        return f;
    }

    PuiseuxSeries parse_puiseux_toplevel() {
        PuiseuxSeries s = parse_puiseux();
        skip_ws();
        if (!at_end()) fail("'+', '-' or end of input");
        return s;
    }

    Rat parse_rat_toplevel() {
        skip_ws();
        bool neg = accept('-');
        Rat r = parse_rat();
        skip_ws();
        if (!at_end()) fail("end of input");
        return neg ? Rat(-r) : r;
    }

private:
    void parse_term(LaurentPoly& f, bool negative) {
        skip_ws();
        Scalar coeff = scalar_one(spec_);
        Monomial u(vars_.size(), 0);
        bool have_coeff = false;

        if (at_end()) fail("a term");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = scalar_from_rat(parse_rat(), spec_);
            have_coeff = true;
        } else if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            if (spec_.kind() != FieldKind::Puiseux) throw PuiseuxLiteralOutsideSpec(open);
            coeff = parse_puiseux();
            expect(')');
            have_coeff = true;
        } else if (is_ident_start(c) && is_bare_t()) {
            if (spec_.kind() != FieldKind::Puiseux) throw PuiseuxLiteralOutsideSpec(pos_);
            coeff = parse_pterm();
            have_coeff = true;
        }

        bool have_monos = false;
        if (have_coeff) {
            std::size_t save = pos_;
            skip_ws();
            if (accept('*')) {
                parse_monos(u);
                have_monos = true;
            } else {
                pos_ = save;
            }
        } else {
            parse_monos(u);
            have_monos = true;
        }
        (void)have_monos;

        if (negative) coeff = scalar_neg(coeff);
        f.add_term(u, std::move(coeff));
    }

    void parse_monos(Monomial& u) {
        parse_mono(u);
        for (;;) {
            std::size_t save = pos_;
            skip_ws();
            if (!accept('*')) {
                pos_ = save;
                return;
            }
            skip_ws();
            // After '*' either another variable or (in a term like c*x) we
            // already consumed everything; a variable is required here.
            parse_mono(u);
        }
    }

    void parse_mono(Monomial& u) {
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("a variable name");
        std::size_t start = pos_;
        std::string name = parse_ident();
        auto idx = var_index(name);
        if (!idx) {
            if (name == "t") {
                if (spec_.kind() != FieldKind::Puiseux) throw PuiseuxLiteralOutsideSpec(start);
                throw SyntaxError(start, "a variable name",
                                  "series literals must lead a term (write (t^e)*mono or t^e)");
            }
            throw UnknownVariable(start, name);
        }
        long long e = 1;
        std::size_t save = pos_;
        skip_ws();
        if (accept('^'))
            e = parse_iexp();
        else
            pos_ = save;
        u[*idx] += e;
    }

    long long parse_iexp() {
        skip_ws();
        if (accept('(')) {
            bool neg = accept('-');
            long long v = parse_int();
            expect(')');
            return neg ? -v : v;
        }
        bool neg = accept('-');
        return neg ? -parse_int() : parse_int();
    }

    PuiseuxSeries parse_puiseux() {
        skip_ws();
        bool neg = accept('-');
        PuiseuxSeries s = parse_pterm();
        if (neg) s = pui_neg(s);
        for (;;) {
            std::size_t save = pos_;
            skip_ws();
            if (accept('+'))
                s = pui_add(s, parse_pterm());
            else if (accept('-'))
                s = pui_sub(s, parse_pterm());
            else {
                pos_ = save;
                return s;
            }
        }
    }

    PuiseuxSeries parse_pterm() {
        skip_ws();
        if (at_end()) fail("a rational or 't'");
        Rat coeff(1);
        bool have_t = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rat();
            std::size_t save = pos_;
            skip_ws();
            if (accept('*')) {
                skip_ws();
                expect_t();
                have_t = true;
            } else {
                pos_ = save;
            }
        } else {
            expect_t();
            have_t = true;
        }
        if (!have_t) return PuiseuxSeries::constant(coeff);
        Rat e(1);
        std::size_t save = pos_;
        skip_ws();
        if (accept('^'))
            e = parse_rexp();
        else
            pos_ = save;
        return PuiseuxSeries::monomial(coeff, e);
    }

    Rat parse_rexp() {
        skip_ws();
        if (accept('(')) {
            bool neg = accept('-');
            Rat r = parse_rat();
            expect(')');
            return neg ? Rat(-r) : r;
        }
        return parse_rat();
    }

    Rat parse_rat() {
        Int n = parse_int_raw();
        std::size_t save = pos_;
        if (accept('/')) {
            skip_ws();
            std::size_t dstart = pos_;
            Int d = parse_int_raw();
            if (d <= 0) throw SyntaxError(dstart, "a positive integer", "denominator must be positive");
            return Rat(n, d);
        }
        pos_ = save;
        return Rat(n);
    }

    long long parse_int() {
        Int v = parse_int_raw();
        return v.convert_to<long long>();
    }

    Int parse_int_raw() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("an integer");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    void expect_t() {
        skip_ws();
        std::size_t start = pos_;
        if (at_end() || !is_ident_start(peek())) fail("'t'");
        std::string name = parse_ident();
        if (name != "t") throw SyntaxError(start, "'t'", "series parameter must be named t");
    }

    // True when the upcoming identifier is a 't' that is not a declared
    // variable, i.e. the head of a bare Puiseux literal.
    bool is_bare_t() {
        std::size_t save = pos_;
        std::string name = parse_ident();
        pos_ = save;
        return name == "t" && !var_index("t");
    }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    [[noreturn]] void fail(const std::string& expected) {
        std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
        throw SyntaxError(pos_, expected, "found " + found);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const ValuationSpec& spec_;
    std::span<const std::string> vars_;
};

}  // namespace detail

inline LaurentPoly parse_poly(std::string_view text, const ValuationSpec& spec,
                              std::span<const std::string> vars) {
    return detail::PolyParser(text, spec, vars).parse_poly();
}

// Standalone Puiseux literal (point coordinates, CLI arguments).
inline PuiseuxSeries parse_puiseux_literal(std::string_view text) {
    static const std::vector<std::string> no_vars;
    return detail::PolyParser(text, ValuationSpec::puiseux(), no_vars).parse_puiseux_toplevel();
}

inline Rat parse_rational(std::string_view text) {
    static const std::vector<std::string> no_vars;
    return detail::PolyParser(text, ValuationSpec::trivial(), no_vars).parse_rat_toplevel();
}

// Direct tropical input: "min-poly: v,mono; v,mono; ...". Monomials use the
// declared variables; "1" denotes the unit monomial.
inline TropPoly parse_min_poly(std::string_view text, std::span<const std::string> vars) {
    constexpr std::string_view kPrefix = "min-poly:";
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    if (text.substr(start, kPrefix.size()) != kPrefix)
        throw SyntaxError(start, "'min-poly:'", "direct tropical input must begin with min-poly:");
    std::string_view body = text.substr(start + kPrefix.size());

    TropPoly F(static_cast<int>(vars.size()));
    std::size_t base = start + kPrefix.size();
    std::size_t pos = 0;
    while (true) {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        if (pos >= body.size()) break;
        std::size_t end = body.find(';', pos);
        if (end == std::string_view::npos) end = body.size();
        std::string_view entry = body.substr(pos, end - pos);

        std::size_t comma = entry.find(',');
        if (comma == std::string_view::npos)
            throw SyntaxError(base + pos, "','", "min-poly entry must be value,monomial");
        Rat value = parse_rational(entry.substr(0, comma));

        std::string_view mono_text = entry.substr(comma + 1);
        Monomial u(vars.size(), 0);
        std::size_t mstart = 0;
        while (mstart < mono_text.size() &&
               std::isspace(static_cast<unsigned char>(mono_text[mstart])))
            ++mstart;
        if (mono_text.substr(mstart) == "1" || mstart >= mono_text.size()) {
            // unit monomial
        } else {
            // Reuse the polynomial parser on the monomial alone.
            LaurentPoly m = parse_poly(mono_text, ValuationSpec::trivial(), vars);
            if (m.terms().size() != 1 || !scalar_eq(m.terms().begin()->second, Scalar(Rat(1))))
                throw SyntaxError(base + pos + comma + 1, "a monomial",
                                  "min-poly entry must name a plain monomial");
            u = m.terms().begin()->first;
        }
        F.add_term(u, value);
        pos = end + (end < body.size() ? 1 : 0);
        if (end == body.size()) break;
    }
    if (F.empty())
        throw SyntaxError(base, "at least one entry", "min-poly list is empty");
    return F;
}

}  // namespace tropgeo
