#include "diagen/geom/intersect.hpp"

#include <algorithm>
#include <cassert>

#include "diagen/geom/catalog.hpp"

namespace diagen::geom {

int side_of_line(Point a, Point b, Point p, double tol) {
  double len = dist(a, b);
  assert(len > 0);
  double signed_dist = cross(b - a, p - a) / len;
  if (signed_dist > tol) return 1;
  if (signed_dist < -tol) return -1;
  return 0;
}

namespace {

/// Squared distance from p to segment [a, b].
double segment_dist(Point p, Point a, Point b) {
  Point d = b - a;
  double len2 = dot(d, d);
  double t = len2 > 0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + d * t);
}

bool on_boundary(Point p, std::span<const Point> poly, double tol) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (segment_dist(p, poly[i], poly[(i + 1) % poly.size()]) <= tol) return true;
  }
  return false;
}

/// Segments properly cross: endpoints strictly on opposite sides, both ways.
bool proper_cross(Point a0, Point a1, Point b0, Point b1, double tol) {
  int s1 = side_of_line(a0, a1, b0, tol);
  int s2 = side_of_line(a0, a1, b1, tol);
  if (s1 * s2 >= 0) return false;
  int s3 = side_of_line(b0, b1, a0, tol);
  int s4 = side_of_line(b0, b1, a1, tol);
  return s3 * s4 < 0;
}

Point poly_centroid(std::span<const Point> poly) {
  Point c{0, 0};
  for (auto p : poly) c = c + p;
  return c * (1.0 / static_cast<double>(poly.size()));
}

}  // namespace

bool point_strictly_inside(Point p, std::span<const Point> poly, double tol) {
  if (on_boundary(p, poly, tol)) return false;
  bool inside = false;
  std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
      double x_int =
          poly[i].x + (p.y - poly[i].y) * (poly[j].x - poly[i].x) / (poly[j].y - poly[i].y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

bool polygon_intersects(std::span<const Point> a, std::span<const Point> b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Point a0 = a[i], a1 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (proper_cross(a0, a1, b[j], b[(j + 1) % b.size()], tol)) return true;
    }
  }
  for (auto p : a)
    if (point_strictly_inside(p, b, tol)) return true;
  for (auto p : b)
    if (point_strictly_inside(p, a, tol)) return true;
  // Coincident or fully nested rings without strictly-inside vertices.
  if (point_strictly_inside(poly_centroid(a), b, tol)) return true;
  if (point_strictly_inside(poly_centroid(b), a, tol)) return true;
  return false;
}

bool shapes_overlap(const ShapeInstance& a, const ShapeInstance& b, double tol) {
  auto pa = boundary_polygon(a);
  auto pb = boundary_polygon(b);
  return polygon_intersects(pa, pb, tol);
}

}  // namespace diagen::geom
