#include "diagen/geom/catalog.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace diagen::geom {

namespace {

const std::array<KindInfo, kShapeKindCount>& table() {
  static const std::array<KindInfo, kShapeKindCount> t = {{
      {ShapeKind::Square, "square", 4, 4, false, true, {0, 1, 2, 3}, {0, 1, 2, 3}},
      {ShapeKind::Rectangle, "rectangle", 4, 4, false, true, {0, 2}, {0, 1, 2, 3}},
      {ShapeKind::IsoscelesTriangle, "isosceles triangle", 3, 3, false, true, {0, 1, 2}, {0, 1, 2}},
      {ShapeKind::EquilateralTriangle, "equilateral triangle", 3, 3, false, true, {0, 1, 2}, {0, 1, 2}},
      {ShapeKind::RightTriangle, "right triangle", 3, 3, false, true, {0, 1, 2}, {0, 1, 2}},
      {ShapeKind::Sector, "sector", 3, 3, false, false, {0, 2}, {0, 2}},
      {ShapeKind::Circle, "circle", 3, 1, true, false, {}, {}},
      {ShapeKind::Semicircle, "semicircle", 2, 2, true, false, {}, {0}},
      {ShapeKind::Parallelogram, "parallelogram", 4, 4, false, true, {0, 2}, {0, 1, 2, 3}},
      {ShapeKind::Trapezoid, "trapezoid", 4, 4, false, true, {0, 2}, {0, 1, 2, 3}},
  }};
  return t;
}

}  // namespace

const KindInfo& kind_info(ShapeKind kind) {
  const auto& t = table();
  auto idx = static_cast<std::size_t>(kind);
  assert(idx < t.size() && t[idx].kind == kind);
  return t[idx];
}

const std::vector<ShapeKind>& all_kinds() {
  static const std::vector<ShapeKind> kinds = [] {
    std::vector<ShapeKind> v;
    for (const auto& info : table()) v.push_back(info.kind);
    return v;
  }();
  return kinds;
}

const std::vector<ShapeKind>& extendable_kinds() {
  static const std::vector<ShapeKind> kinds = [] {
    std::vector<ShapeKind> v;
    for (const auto& info : table())
      if (!info.terminal_only) v.push_back(info.kind);
    return v;
  }();
  return kinds;
}

std::string_view kind_name(ShapeKind kind) { return kind_info(kind).name; }

std::optional<ShapeKind> kind_from_name(std::string_view name) {
  for (const auto& info : table())
    if (info.name == name) return info.kind;
  return std::nullopt;
}

std::vector<int> extendable_edges(const ShapeInstance& shape) {
  return kind_info(shape.kind).extendable_edges;
}

namespace {

void append_arc(std::vector<Point>& out, Point center, double radius, double a0,
                double sweep, int segments_per_turn) {
  int steps = std::max(8, static_cast<int>(std::ceil(std::abs(sweep) / (2 * kPi) *
                                                     segments_per_turn)));
  // Interior arc points only; endpoints are supplied by the caller when they
  // are shared vertices.
  for (int s = 1; s < steps; ++s) {
    double a = a0 + sweep * s / steps;
    out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
}

}  // namespace

std::vector<Point> boundary_polygon(const ShapeInstance& shape, int segments_per_turn) {
  const auto& info = kind_info(shape.kind);
  if (info.polygonal) return shape.vertices;

  std::vector<Point> out;
  switch (shape.kind) {
    case ShapeKind::Sector: {
      Point o = shape.vertices[0], p = shape.vertices[1], q = shape.vertices[2];
      double r = dist(o, p);
      double a0 = std::atan2(p.y - o.y, p.x - o.x);
      double a1 = std::atan2(q.y - o.y, q.x - o.x);
      double sweep = a1 - a0;
      while (sweep <= 0) sweep += 2 * kPi;  // arc runs counterclockwise p -> q
      out.push_back(o);
      out.push_back(p);
      append_arc(out, o, r, a0, sweep, segments_per_turn);
      out.push_back(q);
      return out;
    }
    case ShapeKind::Semicircle: {
      Point a = shape.vertices[0], b = shape.vertices[1];
      Point center = (a + b) * 0.5;
      double r = dist(a, b) / 2;
      double a0 = std::atan2(b.y - center.y, b.x - center.x);
      out.push_back(a);
      out.push_back(b);
      append_arc(out, center, r, a0, kPi, segments_per_turn);  // bulge left of a->b
      return out;
    }
    case ShapeKind::Circle: {
      Point center = shape.vertices[2];
      double r = shape.attributes.at(AttrKey::radius());
      int steps = std::max(8, segments_per_turn);
      for (int s = 0; s < steps; ++s) {
        double a = 2 * kPi * s / steps;
        out.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
      }
      return out;
    }
    default:
      break;
  }
  return shape.vertices;
}

std::map<AttrKey, double> recompute_attributes(const ShapeInstance& shape) {
  std::map<AttrKey, double> out;
  for (const auto& [key, stored] : shape.attributes) {
    (void)stored;
    switch (key.tag) {
      case AttrKey::Tag::Side:
        out[key] = shape.edge_length(key.index);
        break;
      case AttrKey::Tag::Angle: {
        int m = static_cast<int>(shape.vertices.size());
        Point v = shape.vertices[key.index];
        Point prev = shape.vertices[(key.index + m - 1) % m];
        Point next = shape.vertices[(key.index + 1) % m];
        double a = std::atan2(cross(next - v, prev - v), dot(next - v, prev - v));
        out[key] = rad2deg(std::abs(a));
        break;
      }
      case AttrKey::Tag::Radius:
        if (shape.kind == ShapeKind::Sector)
          out[key] = shape.edge_length(0);
        else
          out[key] = shape.edge_length(0) / 2;  // circle & semicircle: diameter edge
        break;
      case AttrKey::Tag::ArcAngle: {
        Point o = shape.vertices[0];
        Point p = shape.vertices[1], q = shape.vertices[2];
        double a = std::atan2(cross(p - o, q - o), dot(p - o, q - o));
        if (a < 0) a += 2 * kPi;
        out[key] = rad2deg(a);
        break;
      }
      case AttrKey::Tag::Height: {
        // Distance between the parallel lines through edge 0 and edge 2.
        auto [a0, a1] = shape.edge(0);
        Point d = a1 - a0;
        Point c = shape.vertices[2];
        out[key] = std::abs(cross(d, c - a0)) / norm(d);
        break;
      }
      default:
        out[key] = stored;  // derived keys are not geometric measurements
        break;
    }
  }
  return out;
}

}  // namespace diagen::geom
