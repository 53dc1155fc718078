#pragma once

#include <string_view>
#include <vector>

#include "diagen/geom/types.hpp"

namespace diagen::geom {

/// Static description of one shape kind.
///
/// Vertex layout per kind (canonical frame: initial side from (0,0) to (L,0),
/// body in the upper half-plane):
///   square/rectangle/parallelogram/trapezoid: 4 corners, counterclockwise.
///   triangles: 3 corners, counterclockwise; the isosceles triangle attaches
///     by a leg (vertex angle at vertex 0), the right triangle by the
///     horizontal leg (right angle at vertex 0).
///   sector: center, arc start, arc end; edges 0 and 2 are the radii and
///     edge 1 is the arc.
///   semicircle: the two diameter endpoints; edge 0 is the diameter and the
///     arc bulges to the body side.
///   circle: the two shared-edge endpoints plus the center; the disc sits
///     tangent to that edge at its midpoint with diameter = edge length (a
///     standalone circle keeps the same layout with the edge as an actual
///     diameter on the axis).
struct KindInfo {
  ShapeKind kind;
  std::string_view name;
  int vertex_count;
  int edge_count;                     // entries in the vertex cycle, arcs included
  bool terminal_only;                 // may only close a figure
  bool polygonal;                     // boundary is exactly the vertex cycle
  std::vector<int> extendable_edges;  // straight edges a next shape may grow from
  std::vector<int> straight_edges;    // edges that are line segments
};

const KindInfo& kind_info(ShapeKind kind);
const std::vector<ShapeKind>& all_kinds();
const std::vector<ShapeKind>& extendable_kinds();

std::string_view kind_name(ShapeKind kind);
std::optional<ShapeKind> kind_from_name(std::string_view name);

/// Straight edges declared extendable for the shape's kind.
std::vector<int> extendable_edges(const ShapeInstance& shape);

/// Closed boundary approximation; curved parts become `segments_per_turn`
/// chords per full turn (>= 8 per arc).
std::vector<Point> boundary_polygon(const ShapeInstance& shape, int segments_per_turn = 64);

/// Recompute every stored attribute from vertex coordinates (consistency
/// oracle for tests and validation).
std::map<AttrKey, double> recompute_attributes(const ShapeInstance& shape);

}  // namespace diagen::geom
