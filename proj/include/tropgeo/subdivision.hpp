#pragma once

// Regular subdivision of the Newton polygon induced by coefficient
// valuations: lift each support point (i, j) to (i, j, value), take the
// facets of the lower convex hull, project back to the plane.
//
// Facets are discovered by gift wrapping. The boundary edges of the
// subdivision along each polygon edge are the edges of a one-dimensional
// lower hull in the vertical plane over that edge; starting from those,
// each directed lower-hull edge is pivoted around to find the facet on its
// left, until no unexplored edge remains. All predicates are exact.

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "tropgeo/geometry2d.hpp"
#include "tropgeo/laurent.hpp"
#include "tropgeo/newton.hpp"
#include "tropgeo/rational.hpp"

namespace tropgeo {

struct RegularSubdivision {
    struct Cell {
        std::vector<LatticePoint> polygon;  // ccw extreme points (a pair for segments)
        std::vector<LatticePoint> points;   // all support points on the cell, sorted
    };

    // For boundary edges, a -> b runs counterclockwise along the polygon
    // boundary (interior on the left) and cell_right is -1. For interior
    // edges, cell_left is the cell to the left of a -> b.
    struct Edge {
        LatticePoint a;
        LatticePoint b;
        int cell_left = -1;
        int cell_right = -1;
    };

    NewtonPolygon polygon;
    std::vector<LatticePoint> support;  // sorted
    std::vector<Rat> heights;           // parallel to support
    std::vector<Cell> cells;
    std::vector<Edge> interior_edges;
    std::vector<Edge> boundary_edges;

    const Rat& height_of(LatticePoint p) const {
        auto it = std::lower_bound(support.begin(), support.end(), p);
        assert(it != support.end() && *it == p);
        return heights[static_cast<std::size_t>(it - support.begin())];
    }
};

namespace detail {

// Sign of det[b-a, c-a, q-a] over the lifted points. With (a, b, c)
// counterclockwise in projection this is negative exactly when the lift of q
// lies strictly below the plane through the lifts of a, b, c.
inline int lifted_orientation(LatticePoint a, const Rat& ha, LatticePoint b, const Rat& hb,
                              LatticePoint c, const Rat& hc, LatticePoint q, const Rat& hq) {
    Rat ux(b.x - a.x), uy(b.y - a.y), uz = hb - ha;
    Rat vx(c.x - a.x), vy(c.y - a.y), vz = hc - ha;
    Rat wx(q.x - a.x), wy(q.y - a.y), wz = hq - ha;
    Rat det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

// Signed number of lattice steps of q from `origin` along the primitive
// direction d; q must lie on that line.
inline long long line_param(LatticePoint q, LatticePoint origin, LatticePoint d) {
    LatticePoint v = q - origin;
    assert(cross(d, v) == 0);
    return d.x != 0 ? v.x / d.x : v.y / d.y;
}

// Lower hull in (position, height) coordinates of points along a line,
// given in order along the line. Returns consecutive hull vertices as
// directed pairs following the input order.
inline std::vector<std::pair<LatticePoint, LatticePoint>> collinear_lower_edges(
    const std::vector<LatticePoint>& pts, const std::vector<Rat>& hts) {
    assert(pts.size() >= 2);
    const LatticePoint d0 = primitive(pts.back() - pts.front());
    std::vector<long long> param(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) param[i] = line_param(pts[i], pts.front(), d0);

    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (hull.size() >= 2) {
            std::size_t j = hull[hull.size() - 2];
            std::size_t k = hull[hull.size() - 1];
            Rat cr = Rat(param[k] - param[j]) * (hts[i] - hts[j]) -
                     (hts[k] - hts[j]) * Rat(param[i] - param[j]);
            if (cr <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<std::pair<LatticePoint, LatticePoint>> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        edges.emplace_back(pts[hull[i]], pts[hull[i + 1]]);
    return edges;
}

}  // namespace detail

inline RegularSubdivision regular_subdivision(const TropPoly& F) {
    if (F.nvars() != 2)
        throw DimensionMismatch("regular subdivisions are implemented for two variables");
    if (F.empty()) throw ZeroPolynomial("empty tropical polynomial");

    RegularSubdivision S;
    for (const auto& [u, c] : F.terms()) S.support.push_back({u[0], u[1]});
    std::sort(S.support.begin(), S.support.end());
    S.heights.reserve(S.support.size());
    for (const LatticePoint& p : S.support) S.heights.push_back(F.terms().at(Monomial{p.x, p.y}));
    S.polygon = newton_polygon_of_support(S.support);

    if (S.polygon.shape == SupportShape::Point) {
        S.cells.push_back({{S.support[0]}, {S.support[0]}});
        return S;
    }

    if (S.polygon.shape == SupportShape::Segment) {
        // One-dimensional subdivision: cells are the edges of the lower hull
        // over the segment. Lexicographic order is monotone along the line.
        for (auto& [a, b] : detail::collinear_lower_edges(S.support, S.heights)) {
            RegularSubdivision::Cell cell;
            cell.polygon = {a, b};
            const Rat &ha = S.height_of(a), &hb = S.height_of(b);
            const LatticePoint d = b - a;
            const LatticePoint dir = primitive(d);
            const long long len = detail::line_param(b, a, dir);
            for (std::size_t i = 0; i < S.support.size(); ++i) {
                if (cross(d, S.support[i] - a) != 0) continue;
                long long t = detail::line_param(S.support[i], a, dir);
                if (t < 0 || t > len) continue;
                if (S.heights[i] * Rat(len) == ha * Rat(len - t) + hb * Rat(t))
                    cell.points.push_back(S.support[i]);
            }
            std::sort(cell.points.begin(), cell.points.end());
            S.cells.push_back(std::move(cell));
        }
        return S;
    }

    // Two-dimensional case: gift-wrap the lower facets.
    const auto& sup = S.support;
    const auto& hts = S.heights;
    const std::size_t n = sup.size();

    // Seed edges: 1D lower hulls over every polygon edge, directed ccw so
    // the polygon interior is on the left.
    std::queue<std::pair<LatticePoint, LatticePoint>> work;
    const auto& verts = S.polygon.vertices;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const LatticePoint v = verts[i];
        const LatticePoint w = verts[(i + 1) % verts.size()];
        const LatticePoint dir = primitive(w - v);
        const long long len = detail::line_param(w, v, dir);
        std::vector<std::pair<long long, LatticePoint>> on_edge;
        for (const LatticePoint& p : sup) {
            if (cross(w - v, p - v) != 0) continue;
            long long t = detail::line_param(p, v, dir);
            if (t >= 0 && t <= len) on_edge.emplace_back(t, p);
        }
        std::sort(on_edge.begin(), on_edge.end());
        std::vector<LatticePoint> pts;
        std::vector<Rat> eh;
        for (auto& [t, p] : on_edge) {
            pts.push_back(p);
            eh.push_back(S.height_of(p));
        }
        for (auto& e : detail::collinear_lower_edges(pts, eh)) work.push(e);
    }

    std::set<std::pair<LatticePoint, LatticePoint>> processed;
    std::map<std::vector<LatticePoint>, int> cell_index;
    std::map<std::pair<LatticePoint, LatticePoint>, std::vector<int>> edge_cells;
    std::map<std::pair<LatticePoint, LatticePoint>, std::pair<LatticePoint, LatticePoint>>
        edge_orientation;  // ccw orientation as a side of the first owning cell

    while (!work.empty()) {
        auto [A, B] = work.front();
        work.pop();
        if (processed.count({A, B})) continue;
        processed.insert({A, B});

        const Rat &hA = S.height_of(A), &hB = S.height_of(B);

        // Pivot: among points strictly left of A -> B, find one whose plane
        // through the lifts of A and B has nothing below it.
        int best = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (orient(A, B, sup[i]) <= 0) continue;
            if (best < 0 ||
                detail::lifted_orientation(A, hA, B, hB, sup[best], hts[best], sup[i], hts[i]) < 0)
                best = static_cast<int>(i);
        }
        if (best < 0) continue;  // A -> B faces the outside of the polygon

        // The facet is the full set of support points on the supporting plane.
        std::vector<LatticePoint> facet;
        for (std::size_t i = 0; i < n; ++i) {
            int s = detail::lifted_orientation(A, hA, B, hB, sup[best], hts[best], sup[i], hts[i]);
            if (s < 0) throw Error("internal: pivot plane is not supporting");
            if (s == 0) facet.push_back(sup[i]);
        }
        std::sort(facet.begin(), facet.end());

        auto [it, inserted] = cell_index.try_emplace(facet, static_cast<int>(S.cells.size()));
        const int idx = it->second;
        if (inserted) {
            RegularSubdivision::Cell cell;
            cell.points = facet;
            cell.polygon = convex_hull_ccw(facet);
            canonicalize_cycle(cell.polygon);
            S.cells.push_back(cell);

            const auto& poly = S.cells[static_cast<std::size_t>(idx)].polygon;
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const LatticePoint p = poly[i];
                const LatticePoint q = poly[(i + 1) % poly.size()];
                auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
                edge_cells[key].push_back(idx);
                edge_orientation.try_emplace(key, std::make_pair(p, q));
                processed.insert({p, q});
                if (!processed.count({q, p})) work.push({q, p});
            }
        }
    }

    // Sort cells canonically and remap indices.
    std::vector<int> perm(S.cells.size());
    {
        std::vector<std::pair<std::vector<LatticePoint>, int>> keyed;
        for (std::size_t i = 0; i < S.cells.size(); ++i)
            keyed.emplace_back(S.cells[i].points, static_cast<int>(i));
        std::sort(keyed.begin(), keyed.end());
        std::vector<RegularSubdivision::Cell> cells;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            perm[static_cast<std::size_t>(keyed[i].second)] = static_cast<int>(i);
            cells.push_back(std::move(S.cells[static_cast<std::size_t>(keyed[i].second)]));
        }
        S.cells = std::move(cells);
    }

    // Classify edges; determine interior left/right sides geometrically.
    for (auto& [key, cells] : edge_cells) {
        assert(cells.size() == 1 || cells.size() == 2);
        RegularSubdivision::Edge e;
        if (cells.size() == 2) {
            e.a = key.first;
            e.b = key.second;
            int c0 = perm[static_cast<std::size_t>(cells[0])];
            int c1 = perm[static_cast<std::size_t>(cells[1])];
            LatticePoint off{};
            for (const LatticePoint& p : S.cells[static_cast<std::size_t>(c0)].points)
                if (orient(e.a, e.b, p) != 0) {
                    off = p;
                    break;
                }
            if (orient(e.a, e.b, off) > 0) {
                e.cell_left = c0;
                e.cell_right = c1;
            } else {
                e.cell_left = c1;
                e.cell_right = c0;
            }
            S.interior_edges.push_back(e);
        } else {
            auto [p, q] = edge_orientation[key];
            e.a = p;
            e.b = q;
            e.cell_left = perm[static_cast<std::size_t>(cells[0])];
            S.boundary_edges.push_back(e);
        }
    }
    auto edge_less = [](const RegularSubdivision::Edge& x, const RegularSubdivision::Edge& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    };
    std::sort(S.interior_edges.begin(), S.interior_edges.end(), edge_less);
    std::sort(S.boundary_edges.begin(), S.boundary_edges.end(), edge_less);
    return S;
}

}  // namespace tropgeo
