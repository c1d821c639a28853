#pragma once

// Deterministic SVG rendering of tropical plane curves. Geometry stays exact
// until the final coordinate formatting (6 significant digits). Rays are
// clipped at ray_clip_length lattice units measured in the max norm, which
// keeps the clipping rational.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tropgeo/curve.hpp"
#include "tropgeo/geometry2d.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct Viewport {
    Rat x0, y0, x1, y1;
};

struct RenderOptions {
    std::optional<Viewport> viewport;  // default: bounding box of the vertices
                                       // padded by ray_clip_length
    Rat ray_clip_length = Rat(3);
    bool weight_labels = true;
    bool show_subdivision = false;
    Rat scale = Rat(40);  // svg units per lattice cell
};

namespace detail {

inline RatPoint ray_endpoint(const RatPoint& base, LatticePoint dir, const Rat& clip) {
    long long m = std::max(dir.x < 0 ? -dir.x : dir.x, dir.y < 0 ? -dir.y : dir.y);
    Rat s = clip / m;
    return {base.x + s * dir.x, base.y + s * dir.y};
}

}  // namespace detail

inline std::string render_svg(const TropicalPlaneCurve& curve, const RenderOptions& opts = {}) {
    // World-coordinate segments to draw: bounded edges, then clipped rays.
    struct Seg {
        RatPoint a, b;
        long long weight;
    };
    std::vector<Seg> segs;
    for (const CurveEdge& e : curve.edges)
        segs.push_back({curve.vertices[static_cast<std::size_t>(e.from)],
                        curve.vertices[static_cast<std::size_t>(e.to)], e.weight});
    for (const CurveRay& r : curve.rays) {
        const RatPoint& base = curve.vertices[static_cast<std::size_t>(r.base)];
        segs.push_back({base, detail::ray_endpoint(base, r.direction, opts.ray_clip_length),
                        r.weight});
    }

    Viewport vp;
    if (opts.viewport) {
        vp = *opts.viewport;
    } else if (curve.vertices.empty()) {
        vp = {Rat(-1), Rat(-1), Rat(1), Rat(1)};
    } else {
        vp.x0 = vp.x1 = curve.vertices[0].x;
        vp.y0 = vp.y1 = curve.vertices[0].y;
        for (const RatPoint& v : curve.vertices) {
            vp.x0 = std::min(vp.x0, v.x);
            vp.x1 = std::max(vp.x1, v.x);
            vp.y0 = std::min(vp.y0, v.y);
            vp.y1 = std::max(vp.y1, v.y);
        }
        vp.x0 -= opts.ray_clip_length;
        vp.x1 += opts.ray_clip_length;
        vp.y0 -= opts.ray_clip_length;
        vp.y1 += opts.ray_clip_length;
    }

    const Rat width = (vp.x1 - vp.x0) * opts.scale;
    const Rat height = (vp.y1 - vp.y0) * opts.scale;
    auto sx = [&](const Rat& x) { return format_decimal((x - vp.x0) * opts.scale); };
    auto sy = [&](const Rat& y) { return format_decimal((vp.y1 - y) * opts.scale); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           format_decimal(width) + "\" height=\"" + format_decimal(height) + "\" viewBox=\"0 0 " +
           format_decimal(width) + " " + format_decimal(height) + "\">\n";

    for (const Seg& s : segs) {
        out += "  <line x1=\"" + sx(s.a.x) + "\" y1=\"" + sy(s.a.y) + "\" x2=\"" + sx(s.b.x) +
               "\" y2=\"" + sy(s.b.y) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    if (opts.weight_labels) {
        for (const Seg& s : segs) {
            if (s.weight <= 1) continue;
            Rat mx = (s.a.x + s.b.x) / 2;
            Rat my = (s.a.y + s.b.y) / 2;
            out += "  <text x=\"" + sx(mx) + "\" y=\"" + sy(my) +
                   "\" font-size=\"12\" fill=\"black\">" + std::to_string(s.weight) + "</text>\n";
        }
    }

    if (opts.show_subdivision && !curve.subdivision.support.empty()) {
        // Inset with the dual subdivision in the top-right corner, one quarter
        // of the lattice scale.
        const auto& S = curve.subdivision;
        long long bx0 = S.support[0].x, bx1 = S.support[0].x;
        long long by0 = S.support[0].y, by1 = S.support[0].y;
        for (const LatticePoint& p : S.support) {
            bx0 = std::min(bx0, p.x);
            bx1 = std::max(bx1, p.x);
            by0 = std::min(by0, p.y);
            by1 = std::max(by1, p.y);
        }
        const Rat unit = opts.scale / 4;
        const Rat ox = width - Rat(bx1 - bx0) * unit - 10;
        const Rat oy = 10 + Rat(by1 - by0) * unit;
        auto ix = [&](long long x) { return format_decimal(ox + Rat(x - bx0) * unit); };
        auto iy = [&](long long y) { return format_decimal(oy - Rat(y - by0) * unit); };
        out += "  <g stroke=\"gray\" fill=\"none\" stroke-width=\"0.5\">\n";
        for (const auto& cell : S.cells) {
            if (cell.polygon.size() < 2) continue;
            out += "    <polygon points=\"";
            bool first = true;
            for (const LatticePoint& p : cell.polygon) {
                if (!first) out += " ";
                first = false;
                out += ix(p.x) + "," + iy(p.y);
            }
            out += "\"/>\n";
        }
        out += "  </g>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace tropgeo
