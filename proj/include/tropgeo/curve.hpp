#pragma once

// Tropical plane curves dual to regular subdivisions.
//
// One curve vertex per 2-cell (the unique w where all lifted cell points tie
// in value + w.u), one bounded edge per interior subdivision edge, one ray
// per boundary subdivision edge. Edge and ray weights are the lattice
// lengths of their dual edges; a ray dual to a boundary edge points along
// the inner normal of that edge. Collinear supports produce a union of
// parallel lines, represented as opposite ray pairs with the lineality flag
// set; a one-point support produces the empty curve.

#include <cassert>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/geometry2d.hpp"
#include "tropgeo/subdivision.hpp"
#include "tropgeo/tropical.hpp"

namespace tropgeo {

struct CurveEdge {
    int from = -1;
    int to = -1;
    long long weight = 1;
    LatticePoint direction{};  // primitive, pointing from `from` to `to`
    int dual = -1;             // index into subdivision.interior_edges
};

struct CurveRay {
    int base = -1;
    LatticePoint direction{};  // primitive
    long long weight = 1;
    int dual = -1;  // index into subdivision.boundary_edges, or, when
                    // lineality is set, into subdivision.cells
};

struct TropicalPlaneCurve {
    std::vector<RatPoint> vertices;  // vertex k is dual to subdivision cell k
    std::vector<CurveEdge> edges;
    std::vector<CurveRay> rays;
    bool lineality = false;  // collinear support: the curve is a union of lines
    bool empty_curve = false;
    RegularSubdivision subdivision;
};

namespace detail {

// Solve value(u) + w.u = const over the (affinely 2D) cell.
inline RatPoint cell_vertex(const RegularSubdivision& S, const RegularSubdivision::Cell& cell) {
    const LatticePoint u0 = cell.points[0];
    const Rat h0 = S.height_of(u0);
    // Two independent differences; cell points are distinct and span 2D.
    const LatticePoint d1 = cell.points[1] - u0;
    std::size_t i2 = 2;
    while (i2 < cell.points.size() && cross(d1, cell.points[i2] - u0) == 0) ++i2;
    assert(i2 < cell.points.size());
    const LatticePoint d2 = cell.points[i2] - u0;

    // d1.w = h0 - h1, d2.w = h0 - h2 by Cramer's rule.
    Rat r1 = h0 - S.height_of(cell.points[1]);
    Rat r2 = h0 - S.height_of(cell.points[i2]);
    Rat det = Rat(cross(d1, d2));
    Rat wx = (r1 * d2.y - r2 * Rat(d1.y)) / det;
    Rat wy = (Rat(d1.x) * r2 - Rat(d2.x) * r1) / det;
#ifndef NDEBUG
    const Rat level = h0 + wx * u0.x + wy * u0.y;
    for (const LatticePoint& p : cell.points)
        assert(S.height_of(p) + wx * Rat(p.x) + wy * Rat(p.y) == level);
#endif
    return {wx, wy};
}

}  // namespace detail

inline TropicalPlaneCurve dual_curve(const TropPoly& F) {
    if (F.terms().size() == 1) {
        // A tropical monomial: the hypersurface is empty.
        TropicalPlaneCurve C;
        C.subdivision = regular_subdivision(F);
        C.empty_curve = true;
        return C;
    }
    TropicalPlaneCurve C;
    C.subdivision = regular_subdivision(F);
    const RegularSubdivision& S = C.subdivision;

    if (S.polygon.shape == SupportShape::Segment) {
        // Union of parallel lines, one per 1D cell; each line is a pair of
        // opposite rays from a base point on it.
        C.lineality = true;
        for (std::size_t ci = 0; ci < S.cells.size(); ++ci) {
            const auto& cell = S.cells[ci];
            const LatticePoint a = cell.polygon[0];
            const LatticePoint b = cell.polygon[1];
            const LatticePoint d = b - a;
            // Line {w : w.(b-a) = h(a) - h(b)}; base point on it closest to 0.
            Rat rhs = S.height_of(a) - S.height_of(b);
            Rat len2 = Rat(d.x) * d.x + Rat(d.y) * d.y;
            RatPoint base{rhs * d.x / len2, rhs * d.y / len2};
            int v = static_cast<int>(C.vertices.size());
            C.vertices.push_back(base);
            const LatticePoint n = primitive(rotate90(d));
            const long long w = lattice_length(d);
            C.rays.push_back({v, n, w, static_cast<int>(ci)});
            C.rays.push_back({v, -n, w, static_cast<int>(ci)});
        }
        return C;
    }

    for (const auto& cell : S.cells) C.vertices.push_back(detail::cell_vertex(S, cell));

    for (std::size_t i = 0; i < S.interior_edges.size(); ++i) {
        const auto& e = S.interior_edges[i];
        CurveEdge ce;
        ce.from = e.cell_left;
        ce.to = e.cell_right;
        ce.weight = lattice_length(e.b - e.a);
        ce.dual = static_cast<int>(i);
        const RatPoint& p = C.vertices[static_cast<std::size_t>(ce.from)];
        const RatPoint& q = C.vertices[static_cast<std::size_t>(ce.to)];
        assert(!(p == q));
        ce.direction = primitive_direction(q.x - p.x, q.y - p.y);
        assert(ce.direction.x * (e.b - e.a).x + ce.direction.y * (e.b - e.a).y == 0);
        C.edges.push_back(ce);
    }

    for (std::size_t i = 0; i < S.boundary_edges.size(); ++i) {
        const auto& e = S.boundary_edges[i];
        CurveRay r;
        r.base = e.cell_left;
        // Boundary edges run ccw (interior left); the inner normal is the
        // edge direction rotated a quarter turn counterclockwise.
        r.direction = primitive(rotate90(e.b - e.a));
        r.weight = lattice_length(e.b - e.a);
        r.dual = static_cast<int>(i);
        C.rays.push_back(r);
    }
    return C;
}

// Weighted sum of primitive outgoing directions at each curve vertex.
struct BalancingReport {
    struct VertexEntry {
        int vertex = -1;
        std::vector<std::pair<LatticePoint, long long>> incident;  // (direction, weight)
        LatticePoint sum{};
        bool ok = true;
    };
    std::vector<VertexEntry> entries;
    bool pass = true;
};

inline BalancingReport check_balancing(const TropicalPlaneCurve& C) {
    BalancingReport report;
    report.entries.resize(C.vertices.size());
    for (std::size_t v = 0; v < C.vertices.size(); ++v)
        report.entries[v].vertex = static_cast<int>(v);
    for (const CurveEdge& e : C.edges) {
        report.entries[static_cast<std::size_t>(e.from)].incident.emplace_back(e.direction,
                                                                               e.weight);
        report.entries[static_cast<std::size_t>(e.to)].incident.emplace_back(-e.direction,
                                                                             e.weight);
    }
    for (const CurveRay& r : C.rays)
        report.entries[static_cast<std::size_t>(r.base)].incident.emplace_back(r.direction,
                                                                               r.weight);
    for (auto& entry : report.entries) {
        LatticePoint sum{};
        for (auto& [dir, w] : entry.incident) sum = sum + LatticePoint{dir.x * w, dir.y * w};
        entry.sum = sum;
        entry.ok = sum == LatticePoint{};
        report.pass = report.pass && entry.ok;
    }
    return report;
}

// Connectivity through codimension one: one node per maximal cell (bounded
// edge or ray), adjacent when they share a curve vertex. Empty and singleton
// curves count as connected.
inline bool check_connected_codim1(const TropicalPlaneCurve& C) {
    const std::size_t n = C.edges.size() + C.rays.size();
    if (n <= 1) return true;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    std::vector<std::vector<std::size_t>> at_vertex(C.vertices.size());
    for (std::size_t i = 0; i < C.edges.size(); ++i) {
        at_vertex[static_cast<std::size_t>(C.edges[i].from)].push_back(i);
        at_vertex[static_cast<std::size_t>(C.edges[i].to)].push_back(i);
    }
    for (std::size_t i = 0; i < C.rays.size(); ++i)
        at_vertex[static_cast<std::size_t>(C.rays[i].base)].push_back(C.edges.size() + i);
    for (const auto& bucket : at_vertex)
        for (std::size_t i = 1; i < bucket.size(); ++i) unite(bucket[0], bucket[i]);

    const std::size_t root = find(0);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

// Exact point location on the curve's support.
inline bool contains_point(const TropicalPlaneCurve& C, const RatPoint& p) {
    for (const RatPoint& v : C.vertices)
        if (v == p) return true;
    for (const CurveEdge& e : C.edges)
        if (point_on_segment(p, C.vertices[static_cast<std::size_t>(e.from)],
                             C.vertices[static_cast<std::size_t>(e.to)]))
            return true;
    for (const CurveRay& r : C.rays)
        if (point_on_ray(p, C.vertices[static_cast<std::size_t>(r.base)], r.direction))
            return true;
    return false;
}

// Membership in the tropical prevariety of a generating set: w must lie on
// every generator's tropical hypersurface. This certifies the prevariety of
// the given generators, which in general strictly contains the
// tropicalization of the variety they cut out.
inline bool prevariety_member(std::span<const TropPoly> generators, std::span<const Rat> w) {
    if (generators.empty()) throw DimensionMismatch("prevariety membership needs generators");
    for (const TropPoly& F : generators) {
        if (static_cast<std::size_t>(F.nvars()) != w.size())
            throw DimensionMismatch("weight vector dimension does not match the generators");
        if (!in_hypersurface(F, w)) return false;
    }
    return true;
}

}  // namespace tropgeo
