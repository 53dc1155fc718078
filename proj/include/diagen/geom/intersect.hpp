#pragma once

#include <span>

#include "diagen/geom/types.hpp"

namespace diagen::geom {

/// -1 / 0 / +1: side of the directed line a->b the point p lies on, with a
/// band of `tol` (absolute distance) treated as "on the line".
int side_of_line(Point a, Point b, Point p, double tol = 1e-9);

/// Strict interior containment; points within `tol` of the boundary count as
/// outside.
bool point_strictly_inside(Point p, std::span<const Point> poly, double tol = 1e-9);

/// True when the two simple polygons' interiors overlap with positive area.
/// Shared edges, shared vertices and tangential contact (within `tol`) do not
/// count as intersection.
bool polygon_intersects(std::span<const Point> a, std::span<const Point> b,
                        double tol = 1e-9);

/// Interior overlap between two placed shapes via boundary approximations.
bool shapes_overlap(const ShapeInstance& a, const ShapeInstance& b, double tol = 1e-9);

}  // namespace diagen::geom
