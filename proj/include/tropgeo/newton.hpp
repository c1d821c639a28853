#pragma once

#include <vector>

#include "tropgeo/errors.hpp"
#include "tropgeo/geometry2d.hpp"
#include "tropgeo/laurent.hpp"

namespace tropgeo {

enum class SupportShape { Point, Segment, Polygon };

// Convex hull of the exponent vectors of a bivariate Laurent polynomial.
// Vertices are exactly the extreme points, counterclockwise; degenerate
// supports are flagged rather than rejected.
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
    std::vector<LatticePoint> all_points;  // the full monomial support, sorted
    SupportShape shape = SupportShape::Point;
};

inline NewtonPolygon newton_polygon_of_support(std::vector<LatticePoint> support) {
    NewtonPolygon P;
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    P.all_points = support;
    P.vertices = convex_hull_ccw(support);
    canonicalize_cycle(P.vertices);
    P.shape = P.vertices.size() == 1   ? SupportShape::Point
              : P.vertices.size() == 2 ? SupportShape::Segment
                                       : SupportShape::Polygon;
    return P;
}

inline std::vector<LatticePoint> support_points(const TropPoly& F) {
    std::vector<LatticePoint> pts;
    for (const auto& [u, c] : F.terms()) pts.push_back({u[0], u[1]});
    return pts;
}

inline NewtonPolygon newton_polygon(const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("the zero polynomial has no Newton polygon");
    if (f.nvars() != 2) throw DimensionMismatch("Newton polygon is implemented for two variables");
    std::vector<LatticePoint> pts;
    for (const auto& [u, c] : f.terms()) pts.push_back({u[0], u[1]});
    return newton_polygon_of_support(std::move(pts));
}

}  // namespace tropgeo
