#pragma once

// Exact primitives for lattice and rational plane geometry: orientation
// tests, primitive vectors, lattice lengths, and the monotone-chain convex
// hull. Everything is integer or rational; no epsilons anywhere.

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    friend LatticePoint operator+(LatticePoint a, LatticePoint b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend LatticePoint operator-(LatticePoint a, LatticePoint b) {
        return {a.x - b.x, a.y - b.y};
    }
    LatticePoint operator-() const { return {-x, -y}; }
};

inline std::string lp_to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline long long cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }

// Sign of the signed area of triangle (a, b, c): >0 counterclockwise.
inline int orient(LatticePoint a, LatticePoint b, LatticePoint c) {
    long long v = cross(b - a, c - a);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

// Number of lattice points on the segment from the origin to delta, minus 1.
inline long long lattice_length(LatticePoint delta) {
    return std::gcd(delta.x < 0 ? -delta.x : delta.x, delta.y < 0 ? -delta.y : delta.y);
}

inline LatticePoint primitive(LatticePoint v) {
    assert(v.x != 0 || v.y != 0);
    long long g = lattice_length(v);
    return {v.x / g, v.y / g};
}

// Counterclockwise rotation by 90 degrees.
inline LatticePoint rotate90(LatticePoint v) { return {-v.y, v.x}; }

inline bool all_collinear(std::span<const LatticePoint> pts) {
    std::size_t j = 1;
    while (j < pts.size() && pts[j] == pts[0]) ++j;
    for (std::size_t i = j + 1; i < pts.size(); ++i)
        if (orient(pts[0], pts[j], pts[i]) != 0) return false;
    return true;
}

// Convex hull, counterclockwise, strictly convex (collinear boundary points
// are dropped). Degenerate inputs return what remains: a single point or the
// two endpoints of a segment.
inline std::vector<LatticePoint> convex_hull_ccw(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const LatticePoint& p : pts) {  // lower chain
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
        while (k >= lower && orient(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    // All input collinear: the chains collapse to the segment endpoints.
    if (hull.size() < 3) return {pts.front(), pts.back()};
    return hull;
}

// Twice the signed area of a counterclockwise polygon (shoelace).
inline long long twice_area(std::span<const LatticePoint> poly) {
    long long a = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const LatticePoint& p = poly[i];
        const LatticePoint& q = poly[(i + 1) % poly.size()];
        a += p.x * q.y - p.y * q.x;
    }
    return a;
}

// Rotate a ccw vertex list so it starts at the lexicographically least
// vertex; fixes a canonical representative for comparisons and reports.
inline void canonicalize_cycle(std::vector<LatticePoint>& poly) {
    if (poly.empty()) return;
    auto it = std::min_element(poly.begin(), poly.end());
    std::rotate(poly.begin(), it, poly.end());
}

struct RatPoint {
    Rat x;
    Rat y;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend bool operator<(const RatPoint& a, const RatPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline std::string rp_to_string(const RatPoint& p) {
    return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

inline Rat cross_rat(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }

inline RatPoint rp_sub(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }

// Primitive lattice vector parallel to the rational direction (dx, dy).
inline LatticePoint primitive_direction(const Rat& dx, const Rat& dy) {
    assert(dx != 0 || dy != 0);
    Int a = numerator(dx) * denominator(dy);
    Int b = numerator(dy) * denominator(dx);
    Int g = gcd(abs(a), abs(b));
    a /= g;
    b /= g;
    return {a.convert_to<long long>(), b.convert_to<long long>()};
}

// p on the closed segment [a, b]?
inline bool point_on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
    RatPoint d = rp_sub(b, a);
    RatPoint v = rp_sub(p, a);
    if (cross_rat(d, v) != 0) return false;
    Rat t = d.x * v.x + d.y * v.y;          // v . d
    Rat len2 = d.x * d.x + d.y * d.y;       // d . d
    return t >= 0 && t <= len2;
}

// p on the ray base + s*dir, s >= 0?
inline bool point_on_ray(const RatPoint& p, const RatPoint& base, LatticePoint dir) {
    RatPoint v = rp_sub(p, base);
    RatPoint d{Rat(dir.x), Rat(dir.y)};
    if (cross_rat(d, v) != 0) return false;
    Rat t = d.x * v.x + d.y * v.y;
    return t >= 0;
}

}  // namespace tropgeo
