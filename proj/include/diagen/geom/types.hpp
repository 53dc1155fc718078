#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diagen::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(b - a); }
/// Counterclockwise perpendicular.
inline Point perp(Point a) { return {-a.y, a.x}; }

constexpr double kPi = 3.14159265358979323846;
inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

enum class ShapeKind {
  Square,
  Rectangle,
  IsoscelesTriangle,
  EquilateralTriangle,
  RightTriangle,
  Sector,
  Circle,
  Semicircle,
  Parallelogram,
  Trapezoid,
};

inline constexpr int kShapeKindCount = 10;

/// Identity of a measurable quantity on one shape. Side/Angle carry the edge
/// or vertex index; Perimeter/Area/ArcLength identify derived question
/// targets; Expression/Domain are the pseudo-conditions of function records.
struct AttrKey {
  enum class Tag {
    Side,
    Angle,
    Radius,
    ArcAngle,
    Height,
    Perimeter,
    Area,
    ArcLength,
    Expression,
    Domain,
  };

  Tag tag = Tag::Side;
  int index = -1;

  friend auto operator<=>(const AttrKey&, const AttrKey&) = default;

  static AttrKey side(int i) { return {Tag::Side, i}; }
  static AttrKey angle(int i) { return {Tag::Angle, i}; }
  static AttrKey radius() { return {Tag::Radius, -1}; }
  static AttrKey arc_angle() { return {Tag::ArcAngle, -1}; }
  static AttrKey height() { return {Tag::Height, -1}; }
  static AttrKey perimeter() { return {Tag::Perimeter, -1}; }
  static AttrKey area() { return {Tag::Area, -1}; }
  static AttrKey arc_length() { return {Tag::ArcLength, -1}; }
  static AttrKey expression() { return {Tag::Expression, -1}; }
  static AttrKey domain() { return {Tag::Domain, -1}; }

  std::string to_string() const;
  static std::optional<AttrKey> parse(std::string_view text);
};

/// One placed shape. Vertices are the labeled points in catalog order; the
/// first edge (vertex 0 -> vertex 1) is always the initial side by which the
/// shape was attached (or placed on the horizontal axis for the first shape).
/// Shared vertices keep the letter they were given by the earlier shape.
struct ShapeInstance {
  ShapeKind kind;
  std::vector<Point> vertices;
  std::vector<std::string> labels;
  std::map<AttrKey, double> attributes;  // lengths in scene units, angles in degrees
  std::optional<int> parent_edge;        // edge index on the previous shape

  std::string name() const;
  int edge_count() const;
  std::pair<Point, Point> edge(int i) const;
  double edge_length(int i) const;
  std::string edge_name(int i) const;
  Point centroid() const;
};

/// A chain of shapes grown by attaching each one to a straight edge of the
/// previous one.
struct CompositeFigure {
  std::vector<ShapeInstance> shapes;
  int labels_used = 0;  // next fresh letter offset from 'A'
};

}  // namespace diagen::geom
