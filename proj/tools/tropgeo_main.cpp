// tropgeo command-line front end.
//
// Subcommands: tropicalize, roots, curve, initial, member, check-point,
// witness, render, selftest. All reports are byte-deterministic for fixed
// inputs. Exit codes: 0 success, 1 domain error, 2 parse/usage error.

#include <CLI11.hpp>

#include <iostream>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropgeo/tropgeo.hpp"

namespace {

using namespace tropgeo;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ValuationSpec field_from(const std::string& text) {
    try {
        return ValuationSpec::from_string(text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : item.substr(a, b - a + 1));
    }
    return out;
}

std::vector<std::string> vars_from(const std::string& text) {
    if (text.empty()) throw UsageError("--vars is required for this subcommand");
    std::vector<std::string> vars = split_csv(text);
    for (const std::string& v : vars)
        if (v.empty()) throw UsageError("empty variable name in --vars");
    return vars;
}

std::vector<Rat> weights_from(const std::string& text, std::size_t n) {
    if (text.empty()) throw UsageError("--at is required for this subcommand");
    std::vector<Rat> w;
    for (const std::string& c : split_csv(text)) w.push_back(parse_rational(c));
    if (w.size() != n)
        throw UsageError("--at needs " + std::to_string(n) + " comma-separated rationals");
    return w;
}

std::vector<Scalar> point_from(const std::string& text, const ValuationSpec& spec,
                               std::size_t n) {
    if (text.empty()) throw UsageError("--at is required for this subcommand");
    std::vector<Scalar> pt;
    for (const std::string& c : split_csv(text)) {
        if (spec.kind() == FieldKind::Puiseux)
            pt.push_back(parse_puiseux_literal(c));
        else
            pt.push_back(parse_rational(c));
    }
    if (pt.size() != n)
        throw UsageError("--at needs " + std::to_string(n) + " comma-separated coordinates");
    return pt;
}

bool is_min_poly(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t");
    return i != std::string::npos && text.compare(i, 9, "min-poly:") == 0;
}

struct PolyInput {
    std::optional<LaurentPoly> classical;
    TropPoly trop;

    PolyInput() : trop(1) {}
};

PolyInput load_poly(const std::string& text, const ValuationSpec& spec,
                    const std::vector<std::string>& vars) {
    PolyInput in;
    if (is_min_poly(text)) {
        in.trop = parse_min_poly(text, vars);
    } else {
        in.classical = parse_poly(text, spec, vars);
        in.trop = tropicalize(*in.classical);
    }
    return in;
}

std::string weights_to_string(std::span<const Rat> w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(w[i]);
    }
    return out + ")";
}

std::string residue_field_name(const ValuationSpec& spec) {
    return spec.residue_char() == 0 ? "Q" : "Z/" + std::to_string(spec.residue_char());
}

// ---------------------------------------------------------------------------
// report builders

std::string tropicalize_report(const PolyInput& in, const std::vector<std::string>& vars) {
    std::string out;
    if (in.classical) out += "f = " + poly_to_string(*in.classical, vars) + "\n";
    out += "trop(f) = " + trop_to_min_string(in.trop, vars) + "\n";
    out += trop_to_minpoly_string(in.trop, vars) + "\n";
    return out;
}

std::string roots_report(const TropPoly& F) {
    RootMultiset roots = univariate_roots(F);
    std::string out = "roots:\n";
    long long total = 0;
    for (const RootMult& r : roots) {
        out += "  " + rat_to_string(r.root) + " (multiplicity " + std::to_string(r.multiplicity) +
               ")\n";
        total += r.multiplicity;
    }
    out += "total multiplicity: " + std::to_string(total) + "\n";
    return out;
}

std::string curve_report(const PolyInput& in, const std::vector<std::string>& vars,
                         const ValuationSpec& spec) {
    const TropicalPlaneCurve C = dual_curve(in.trop);
    const RegularSubdivision& S = C.subdivision;

    std::string out;
    out += "field: " + spec.to_string() + "\n";
    if (in.classical) out += "f = " + poly_to_string(*in.classical, vars) + "\n";
    out += "trop(f) = " + trop_to_min_string(in.trop, vars) + "\n";

    out += "newton polygon:";
    for (const LatticePoint& v : S.polygon.vertices) out += " " + lp_to_string(v);
    out += "\n";

    out += "subdivision cells:\n";
    for (std::size_t i = 0; i < S.cells.size(); ++i) {
        out += "  cell " + std::to_string(i) + ":";
        for (const LatticePoint& p : S.cells[i].polygon) out += " " + lp_to_string(p);
        out += "\n";
    }
    if (!S.interior_edges.empty()) {
        out += "interior edges:\n";
        for (const auto& e : S.interior_edges)
            out += "  " + lp_to_string(e.a) + "-" + lp_to_string(e.b) + " cells " +
                   std::to_string(e.cell_left) + "," + std::to_string(e.cell_right) + "\n";
    }
    if (!S.boundary_edges.empty()) {
        out += "boundary edges:\n";
        for (const auto& e : S.boundary_edges)
            out += "  " + lp_to_string(e.a) + "-" + lp_to_string(e.b) + " cell " +
                   std::to_string(e.cell_left) + "\n";
    }

    if (C.empty_curve) {
        out += "curve: empty (single-point support)\n";
        return out;
    }
    if (C.lineality) out += "note: collinear support; the curve is a union of parallel lines\n";

    out += "vertices:\n";
    for (std::size_t i = 0; i < C.vertices.size(); ++i)
        out += "  v" + std::to_string(i) + " = " + rp_to_string(C.vertices[i]) + "\n";
    if (!C.edges.empty()) {
        out += "edges:\n";
        for (const CurveEdge& e : C.edges) {
            const auto& d = S.interior_edges[static_cast<std::size_t>(e.dual)];
            out += "  v" + std::to_string(e.from) + "-v" + std::to_string(e.to) + " weight " +
                   std::to_string(e.weight) + " direction " + lp_to_string(e.direction) +
                   " dual " + lp_to_string(d.a) + "-" + lp_to_string(d.b) + "\n";
        }
    }
    if (!C.rays.empty()) {
        out += "rays:\n";
        for (const CurveRay& r : C.rays) {
            out += "  from v" + std::to_string(r.base) + " direction " +
                   lp_to_string(r.direction) + " weight " + std::to_string(r.weight);
            if (!C.lineality) {
                const auto& d = S.boundary_edges[static_cast<std::size_t>(r.dual)];
                out += " dual " + lp_to_string(d.a) + "-" + lp_to_string(d.b);
            } else {
                out += " dual cell " + std::to_string(r.dual);
            }
            out += "\n";
        }
    }

    const BalancingReport rep = check_balancing(C);
    out += "balancing:\n";
    for (const auto& entry : rep.entries) {
        out += "  v" + std::to_string(entry.vertex) + ":";
        for (const auto& [dir, w] : entry.incident)
            out += " " + std::to_string(w) + "*" + lp_to_string(dir);
        out += " -> " + lp_to_string(entry.sum) + (entry.ok ? " ok" : " FAIL") + "\n";
    }
    out += std::string("balanced: ") + (rep.pass ? "yes" : "no") + "\n";
    out += std::string("connected through codim 1: ") +
           (check_connected_codim1(C) ? "yes" : "no") + "\n";
    return out;
}

std::string initial_report(const LaurentPoly& f, std::span<const Rat> w,
                           const std::vector<std::string>& vars) {
    const ResiduePoly g = initial_form(f, w);
    std::string out;
    out += "w = " + weights_to_string(w) + "\n";
    out += "trop(f)(w) = " + ext_to_string(trop_eval(tropicalize(f), w)) + "\n";
    out += "in_w(f) = " + residue_poly_to_string(g, vars) + "   (over " +
           residue_field_name(f.spec()) + ")\n";
    out += std::string("monomial: ") + (is_monomial(g) ? "yes" : "no") + "\n";
    return out;
}

std::string member_report(const std::vector<PolyInput>& gens, std::span<const Rat> w,
                          const std::vector<std::string>& vars, const ValuationSpec& spec) {
    std::string out = "w = " + weights_to_string(w) + "\n";
    bool all = true;
    bool any_disagreement = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const PolyInput& in = gens[i];
        out += "generator " + std::to_string(i + 1) + ": ";
        out += in.classical ? poly_to_string(*in.classical, vars)
                            : trop_to_min_string(in.trop, vars);
        out += "\n";
        const bool tropical_oracle = in_hypersurface(in.trop, w);
        all = all && tropical_oracle;
        out += std::string("  tropical oracle: ") +
               (tropical_oracle ? "in hypersurface" : "not in hypersurface") + "\n";
        if (in.classical) {
            try {
                const bool initial_oracle = member_via_initial(*in.classical, w);
                out += std::string("  initial-form oracle: ") +
                       (initial_oracle ? "in hypersurface" : "not in hypersurface") + "\n";
                if (initial_oracle != tropical_oracle) {
                    any_disagreement = true;
                    out += "  WARNING: oracles disagree\n";
                }
            } catch (const NotInValueGroup&) {
                out += "  initial-form oracle: not applicable (w outside the value group)\n";
            }
        }
    }
    out += std::string("in prevariety: ") + (all ? "yes" : "no") + "\n";
    if (gens.size() > 1)
        out += "note: this is the prevariety of the given generators; it may strictly contain "
               "the tropical variety of the ideal they generate\n";
    if (any_disagreement) out += "WARNING: oracle disagreement detected\n";
    (void)spec;
    return out;
}

std::string zero_state_text(const PointCheck& pc) {
    switch (pc.is_zero) {
        case ZeroState::ExactZero: return "exact zero";
        case ZeroState::ZeroToPrecision: {
            const PuiseuxSeries& s = std::get<PuiseuxSeries>(pc.value);
            std::string out = "zero up to O(t^" + rat_to_string(s.precision().finite()) + ")";
            if (pc.precision_margin) {
                out += ", margin " + rat_to_string(*pc.precision_margin);
                if (*pc.precision_margin < 1) out += " (inconclusive)";
            }
            return out;
        }
        case ZeroState::Nonzero: return "nonzero";
    }
    return "";
}

std::string check_point_report(const LaurentPoly& f, std::span<const Scalar> point) {
    const PointCheck pc = check_point(f, point);
    std::string out;
    out += "f(point) = " + scalar_to_string(pc.value) + "\n";
    out += "zero: " + zero_state_text(pc) + "\n";
    out += "val(point) = " + weights_to_string(pc.val_vector) + "\n";
    out += std::string("in tropical hypersurface: ") + (pc.in_trop ? "yes" : "no") + "\n";
    return out;
}

std::string witness_report(const LaurentPoly& f, std::span<const Rat> w, long long bound,
                           const std::vector<std::string>& vars) {
    std::string out;
    const ResiduePoly g = initial_form(f, w);
    out += "w = " + weights_to_string(w) + "\n";
    out += "in_w(f) = " + residue_poly_to_string(g, vars) + "   (over " +
           residue_field_name(f.spec()) + ")\n";
    const auto wit = first_order_witness(f, w, bound);
    if (!wit) {
        out += "witness: none found (scan bound " + std::to_string(bound) +
               "); inconclusive\n";
        return out;
    }
    out += "residue zero: (" + rat_to_string(wit->residue_a) + ", " +
           rat_to_string(wit->residue_b) + ")\n";
    out += "point: (" + scalar_to_string(wit->point[0]) + ", " +
           scalar_to_string(wit->point[1]) + ")\n";
    out += "delta: " + std::string(wit->delta_is_lower_bound ? ">= " : "") +
           ext_to_string(wit->delta) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// selftest: seeded randomized property checks

class SelfTest {
public:
    SelfTest(unsigned long long seed, int count) : eng_(seed), count_(count) {}

    int run(std::string& out) {
        semiring_axioms(out);
        valuation_axioms(out);
        quadratic_formula(out);
        random_curves(out);
        oracle_agreement(out);
        out += failures_ == 0 ? "selftest: all checks passed\n"
                              : "selftest: " + std::to_string(failures_) + " failures\n";
        return failures_ == 0 ? 0 : 1;
    }

private:
    long long rand_int(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    Rat rand_rat(long long num = 20, long long den = 8) {
        Rat r;
        do {
            r = Rat(rand_int(-num, num), rand_int(1, den));
        } while (r == 0);
        return r;
    }

    TropScalar rand_trop() {
        if (rand_int(0, 9) == 0) return TropScalar();  // infinity
        return TropScalar(rand_rat());
    }

    void check(std::string& out, const std::string& name, bool ok) {
        out += std::string(ok ? "ok " : "FAIL ") + name + "\n";
        if (!ok) ++failures_;
    }

    void semiring_axioms(std::string& out) {
        bool ok = true;
        for (int i = 0; i < count_; ++i) {
            TropScalar a = rand_trop(), b = rand_trop(), c = rand_trop();
            ok = ok && (a + b) + c == a + (b + c);
            ok = ok && (a * b) * c == a * (b * c);
            ok = ok && a * (b + c) == a * b + a * c;
            ok = ok && a + TropScalar::zero() == a && a * TropScalar::one() == a;
            long long n = rand_int(1, 8);
            ok = ok && (a + b).pow(n) == a.pow(n) + b.pow(n);
        }
        check(out, "tropical semiring axioms (" + std::to_string(count_) + " cases)", ok);
    }

    void valuation_axioms(std::string& out) {
        bool ok = true;
        std::vector<ValuationSpec> specs{ValuationSpec::trivial(), ValuationSpec::padic(2),
                                         ValuationSpec::padic(3), ValuationSpec::puiseux()};
        for (int i = 0; i < count_; ++i) {
            for (const auto& spec : specs) {
                Scalar a, b;
                if (spec.kind() == FieldKind::Puiseux) {
                    a = PuiseuxSeries::monomial(rand_rat(), Rat(rand_int(-4, 4), 2));
                    b = PuiseuxSeries::monomial(rand_rat(), Rat(rand_int(-4, 4), 2));
                } else {
                    a = rand_rat(40, 12);
                    b = rand_rat(40, 12);
                }
                ExtRat va = val(a, spec), vb = val(b, spec);
                ok = ok && val(scalar_mul(a, b), spec) == va + vb;
                ExtRat vs = val(scalar_add(a, b), spec);
                ok = ok && vs >= min(va, vb);
                if (va != vb) ok = ok && vs == min(va, vb);
                // splitting section
                Rat u = spec.kind() == FieldKind::Padic    ? Rat(rand_int(-5, 5))
                        : spec.kind() == FieldKind::Puiseux ? Rat(rand_int(-6, 6), 3)
                                                            : Rat(0);
                ok = ok && val(split(u, spec), spec) == ExtRat(u);
            }
        }
        check(out, "valuation and splitting axioms (" + std::to_string(count_) + " cases)", ok);
    }

    void quadratic_formula(std::string& out) {
        bool ok = true;
        for (int i = 0; i < count_; ++i) {
            Rat a = rand_rat(), b = rand_rat(), c = rand_rat();
            TropPoly F(1);
            F.add_term(Monomial{2}, a);
            F.add_term(Monomial{1}, b);
            F.add_term(Monomial{0}, c);
            RootMultiset roots = univariate_roots(F);
            if (2 * b <= a + c) {
                if (2 * b == a + c)
                    ok = ok && roots.size() == 1 && roots[0].root == (c - a) / 2 &&
                         roots[0].multiplicity == 2;
                else
                    ok = ok && roots.size() == 2 && roots[0].root == b - a &&
                         roots[1].root == c - b;
            } else {
                ok = ok && roots.size() == 1 && roots[0].root == (c - a) / 2 &&
                     roots[0].multiplicity == 2;
            }
        }
        check(out, "tropical quadratic formula (" + std::to_string(count_) + " cases)", ok);
    }

    void random_curves(std::string& out) {
        bool ok = true;
        const ValuationSpec spec = ValuationSpec::padic(2);
        for (int i = 0; i < count_ / 2 + 1; ++i) {
            LaurentPoly f(2, spec);
            int k = static_cast<int>(rand_int(3, 9));
            for (int j = 0; j < k; ++j) {
                Monomial u{rand_int(-3, 3), rand_int(-3, 3)};
                f.add_term(u, rand_rat(64, 9));
            }
            if (f.is_zero() || f.terms().size() < 2) continue;
            TropicalPlaneCurve C = dual_curve(tropicalize(f));
            ok = ok && check_balancing(C).pass;
            if (!C.lineality) ok = ok && check_connected_codim1(C);
        }
        check(out, "random curves balanced and connected", ok);
    }

    void oracle_agreement(std::string& out) {
        bool ok = true;
        const ValuationSpec spec = ValuationSpec::padic(2);
        std::vector<std::string> vars{"x", "y"};
        LaurentPoly f = parse_poly("2*x^2+x*y+6*y^2+5*x-3*y+4", spec, vars);
        for (int i = 0; i < count_; ++i) {
            std::vector<Rat> w{Rat(rand_int(-6, 6)), Rat(rand_int(-6, 6))};
            ok = ok && member_via_initial(f, w) == in_hypersurface(tropicalize(f), w);
        }
        check(out, "initial-form oracle agrees with tropical oracle (" +
                       std::to_string(count_) + " cases)",
              ok);
    }

    std::mt19937_64 eng_;
    int count_;
    int failures_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropgeo: exact tropical plane curves over valued fields"};
    app.require_subcommand(1);

    std::string field_str = "trivial";
    std::string vars_str;
    std::string at_str;
    std::string output_path;
    std::vector<std::string> poly_args;
    long long bound = 50;
    unsigned long long seed = 12345;
    int count = 200;

    // render options
    std::string viewport_str = "auto";
    std::string ray_clip_str = "3";
    std::string scale_str = "40";
    bool no_weight_labels = false;
    bool show_subdivision = false;

    auto add_common = [&](CLI::App* sub, bool needs_at, int npolys) {
        sub->add_option("--field", field_str, "field spec: trivial, padic:<p>, puiseux[:q]");
        sub->add_option("--vars", vars_str, "comma-separated variable names");
        if (needs_at) sub->add_option("--at", at_str, "comma-separated coordinates");
        if (npolys == 1)
            sub->add_option("poly", poly_args, "polynomial (or min-poly: list)")->expected(1);
        else if (npolys > 1)
            sub->add_option("polys", poly_args, "polynomials")->expected(-1);
    };

    CLI::App* cmd_trop = app.add_subcommand("tropicalize", "tropicalize a polynomial");
    add_common(cmd_trop, false, 1);
    CLI::App* cmd_roots = app.add_subcommand("roots", "univariate tropical roots");
    add_common(cmd_roots, false, 1);
    CLI::App* cmd_curve = app.add_subcommand("curve", "dual subdivision, curve, balancing");
    add_common(cmd_curve, false, 1);
    CLI::App* cmd_initial = app.add_subcommand("initial", "initial form at a weight vector");
    add_common(cmd_initial, true, 1);
    CLI::App* cmd_member = app.add_subcommand("member", "tropical prevariety membership");
    add_common(cmd_member, true, 2);
    CLI::App* cmd_check = app.add_subcommand("check-point", "evaluate a point and compare "
                                                            "valuations with tropical membership");
    add_common(cmd_check, true, 1);
    CLI::App* cmd_witness = app.add_subcommand("witness", "first-order lifting certificate");
    add_common(cmd_witness, true, 1);
    cmd_witness->add_option("--bound", bound, "scan bound for the first residue coordinate");
    CLI::App* cmd_render = app.add_subcommand("render", "render the curve as SVG");
    add_common(cmd_render, false, 1);
    cmd_render->add_option("--viewport", viewport_str, "x0,y0,x1,y1 or auto");
    cmd_render->add_option("--ray-clip", ray_clip_str, "ray clip length (max norm)");
    cmd_render->add_option("--scale", scale_str, "svg units per lattice cell");
    cmd_render->add_flag("--no-weight-labels", no_weight_labels, "suppress weight labels");
    cmd_render->add_flag("--show-subdivision", show_subdivision, "inset the dual subdivision");
    cmd_render->add_option("-o,--output", output_path, "write the SVG here instead of stdout");
    CLI::App* cmd_selftest = app.add_subcommand("selftest", "randomized property checks");
    cmd_selftest->add_option("--seed", seed, "random seed");
    cmd_selftest->add_option("--count", count, "cases per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        std::string report;

        if (cmd_selftest->parsed()) {
            SelfTest st(seed, count);
            int rc = st.run(report);
            std::cout << report;
            return rc;
        }

        const ValuationSpec spec = field_from(field_str);

        if (cmd_trop->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            report = tropicalize_report(load_poly(poly_args[0], spec, vars), vars);
        } else if (cmd_roots->parsed()) {
            std::vector<std::string> vars =
                vars_str.empty() ? std::vector<std::string>{"x"} : vars_from(vars_str);
            if (vars.size() != 1) throw UsageError("roots needs exactly one variable");
            report = roots_report(load_poly(poly_args[0], spec, vars).trop);
        } else if (cmd_curve->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            if (vars.size() != 2) throw UsageError("curve needs exactly two variables");
            report = curve_report(load_poly(poly_args[0], spec, vars), vars, spec);
        } else if (cmd_initial->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            LaurentPoly f = parse_poly(poly_args[0], spec, vars);
            std::vector<Rat> w = weights_from(at_str, vars.size());
            report = initial_report(f, w, vars);
        } else if (cmd_member->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            std::vector<PolyInput> gens;
            for (const std::string& text : poly_args) gens.push_back(load_poly(text, spec, vars));
            std::vector<Rat> w = weights_from(at_str, vars.size());
            report = member_report(gens, w, vars, spec);
        } else if (cmd_check->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            LaurentPoly f = parse_poly(poly_args[0], spec, vars);
            std::vector<Scalar> pt = point_from(at_str, spec, vars.size());
            report = check_point_report(f, pt);
        } else if (cmd_witness->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            if (vars.size() != 2) throw UsageError("witness needs exactly two variables");
            LaurentPoly f = parse_poly(poly_args[0], spec, vars);
            std::vector<Rat> w = weights_from(at_str, vars.size());
            report = witness_report(f, w, bound, vars);
        } else if (cmd_render->parsed()) {
            std::vector<std::string> vars = vars_from(vars_str);
            if (vars.size() != 2) throw UsageError("render needs exactly two variables");
            PolyInput in = load_poly(poly_args[0], spec, vars);
            RenderOptions opts;
            opts.ray_clip_length = parse_rational(ray_clip_str);
            opts.scale = parse_rational(scale_str);
            opts.weight_labels = !no_weight_labels;
            opts.show_subdivision = show_subdivision;
            if (viewport_str != "auto") {
                std::vector<std::string> parts = split_csv(viewport_str);
                if (parts.size() != 4) throw UsageError("--viewport needs x0,y0,x1,y1 or auto");
                opts.viewport = Viewport{parse_rational(parts[0]), parse_rational(parts[1]),
                                         parse_rational(parts[2]), parse_rational(parts[3])};
            }
            report = render_svg(dual_curve(in.trop), opts);
            if (!output_path.empty()) {
                std::ofstream out(output_path, std::ios::binary);
                if (!out) throw Error("cannot open output file " + output_path);
                out << report;
                return 0;
            }
        }

        std::cout << report;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVariable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PuiseuxLiteralOutsideSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
