#include "diagen/geom/build.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "diagen/errors.hpp"
#include "diagen/geom/catalog.hpp"
#include "diagen/geom/intersect.hpp"

namespace diagen::geom {

namespace {

double round2(double v) { return std::llround(v * 100.0) / 100.0; }

int sample_length(util::Rng& rng, const GeomRanges& r) {
  return rng.uniform_int(r.side_min, r.side_max);
}

}  // namespace

ShapeInstance make_canonical_shape(ShapeKind kind, double initial_side, util::Rng& rng,
                                   const GeomRanges& ranges) {
  assert(initial_side > 0);
  const double L = initial_side;
  ShapeInstance s;
  s.kind = kind;
  using K = AttrKey;
  switch (kind) {
    case ShapeKind::Square: {
      s.vertices = {{0, 0}, {L, 0}, {L, L}, {0, L}};
      for (int i = 0; i < 4; ++i) s.attributes[K::side(i)] = L;
      s.attributes[K::angle(0)] = 90;
      break;
    }
    case ShapeKind::Rectangle: {
      double h = sample_length(rng, ranges);
      s.vertices = {{0, 0}, {L, 0}, {L, h}, {0, h}};
      s.attributes[K::side(0)] = L;
      s.attributes[K::side(1)] = h;
      s.attributes[K::side(2)] = L;
      s.attributes[K::side(3)] = h;
      s.attributes[K::height()] = h;
      s.attributes[K::angle(0)] = 90;
      break;
    }
    case ShapeKind::IsoscelesTriangle: {
      // Attaches by a leg; the vertex angle sits at vertex 0 and the base is
      // edge 1, the side a later shape grows from.
      double theta = rng.pick(ranges.vertex_angles);
      double t = deg2rad(theta);
      s.vertices = {{0, 0}, {L, 0}, {L * std::cos(t), L * std::sin(t)}};
      s.attributes[K::side(0)] = L;
      s.attributes[K::side(1)] = 2 * L * std::sin(t / 2);
      s.attributes[K::side(2)] = L;
      s.attributes[K::angle(0)] = theta;
      s.attributes[K::angle(1)] = (180.0 - theta) / 2;
      break;
    }
    case ShapeKind::EquilateralTriangle: {
      s.vertices = {{0, 0}, {L, 0}, {L / 2, L * std::sqrt(3.0) / 2}};
      for (int i = 0; i < 3; ++i) s.attributes[K::side(i)] = L;
      s.attributes[K::angle(0)] = 60;
      break;
    }
    case ShapeKind::RightTriangle: {
      // Right angle at vertex 0; edge 1 is the hypotenuse.
      double h = sample_length(rng, ranges);
      s.vertices = {{0, 0}, {L, 0}, {0, h}};
      s.attributes[K::side(0)] = L;
      s.attributes[K::side(1)] = std::hypot(L, h);
      s.attributes[K::side(2)] = h;
      s.attributes[K::angle(0)] = 90;
      s.attributes[K::angle(1)] = rad2deg(std::atan2(h, L));
      s.attributes[K::angle(2)] = 90 - s.attributes[K::angle(1)];
      break;
    }
    case ShapeKind::Sector: {
      // Initial side is a radius; the arc runs counterclockwise from vertex 1.
      double theta = rng.pick(ranges.arc_angles);
      double t = deg2rad(theta);
      s.vertices = {{0, 0}, {L, 0}, {L * std::cos(t), L * std::sin(t)}};
      s.attributes[K::side(0)] = L;
      s.attributes[K::side(2)] = L;
      s.attributes[K::radius()] = L;
      s.attributes[K::arc_angle()] = theta;
      break;
    }
    case ShapeKind::Circle: {
      // Disc tangent to the initial side at its midpoint, diameter = L.
      s.vertices = {{0, 0}, {L, 0}, {L / 2, L / 2}};
      s.attributes[K::side(0)] = L;
      s.attributes[K::radius()] = L / 2;
      break;
    }
    case ShapeKind::Semicircle: {
      s.vertices = {{0, 0}, {L, 0}};
      s.attributes[K::side(0)] = L;
      s.attributes[K::radius()] = L / 2;
      break;
    }
    case ShapeKind::Parallelogram: {
      double w = sample_length(rng, ranges);
      double alpha = rng.pick(ranges.oblique_angles);
      double t = deg2rad(alpha);
      Point d{w * std::cos(t), w * std::sin(t)};
      s.vertices = {{0, 0}, {L, 0}, {L + d.x, d.y}, d};
      s.attributes[K::side(0)] = L;
      s.attributes[K::side(1)] = w;
      s.attributes[K::side(2)] = L;
      s.attributes[K::side(3)] = w;
      s.attributes[K::angle(0)] = alpha;
      s.attributes[K::angle(1)] = 180.0 - alpha;
      break;
    }
    case ShapeKind::Trapezoid: {
      // Isosceles trapezoid: long base on the axis, parallel top edge 2.
      double top = round2(L * rng.pick(ranges.top_ratios));
      double h = rng.uniform_int(3, ranges.trapezoid_height_max);
      double inset = (L - top) / 2;
      s.vertices = {{0, 0}, {L, 0}, {L - inset, h}, {inset, h}};
      double leg = std::hypot(h, inset);
      double beta = rad2deg(std::atan2(h, inset));
      s.attributes[K::side(0)] = L;
      s.attributes[K::side(1)] = leg;
      s.attributes[K::side(2)] = top;
      s.attributes[K::side(3)] = leg;
      s.attributes[K::height()] = h;
      s.attributes[K::angle(0)] = beta;
      s.attributes[K::angle(1)] = beta;
      s.attributes[K::angle(2)] = 180.0 - beta;
      break;
    }
  }
  assert(static_cast<int>(s.vertices.size()) == kind_info(kind).vertex_count);
  return s;
}

namespace {

std::string fresh_label(CompositeFigure& fig) {
  if (fig.labels_used >= 26) throw Error("vertex label pool exhausted");
  return std::string(1, static_cast<char>('A' + fig.labels_used++));
}

double initial_side_for(ShapeKind kind, util::Rng& rng, const GeomRanges& ranges) {
  int n = sample_length(rng, ranges);
  switch (kind) {
    case ShapeKind::Circle:
    case ShapeKind::Semicircle:
      return 2.0 * n;  // sampled value is the radius
    default:
      return n;
  }
}

}  // namespace

ShapeInstance sample_initial_shape(util::Rng& rng, const FigureConfig& cfg,
                                   bool allow_terminal) {
  ShapeKind kind = rng.pick(allow_terminal ? all_kinds() : extendable_kinds());
  ShapeInstance s = make_canonical_shape(kind, initial_side_for(kind, rng, cfg.ranges),
                                         rng, cfg.ranges);
  // A standalone circle rests on the axis with vertices 0-1 as an actual
  // diameter; the tangent layout only makes sense against a parent edge.
  if (kind == ShapeKind::Circle) s.vertices[2] = {s.vertices[1].x / 2, 0};
  s.labels.resize(s.vertices.size());
  for (std::size_t i = 0; i < s.labels.size(); ++i)
    s.labels[i] = std::string(1, static_cast<char>('A' + i));
  return s;
}

std::vector<int> attachable_edges(const CompositeFigure& fig) {
  assert(!fig.shapes.empty());
  const ShapeInstance& last = fig.shapes.back();
  std::vector<int> edges;
  for (int e : extendable_edges(last)) {
    if (last.parent_edge.has_value() && e == 0) continue;  // edge 0 is the shared side
    edges.push_back(e);
  }
  return edges;
}

void attach_shape(CompositeFigure& fig, ShapeKind kind, int edge_index, util::Rng& rng,
                  const GeomRanges& ranges) {
  assert(!fig.shapes.empty());
  const ShapeInstance& parent = fig.shapes.back();
  auto open_edges = attachable_edges(fig);
  if (std::find(open_edges.begin(), open_edges.end(), edge_index) == open_edges.end())
    throw Error("edge " + std::to_string(edge_index) + " of " + parent.name() +
                " is not extendable");

  auto [p0, p1] = parent.edge(edge_index);
  double len = dist(p0, p1);
  ShapeInstance shape = make_canonical_shape(kind, len, rng, ranges);

  // Rigid map sending the canonical initial side (0,0)->(len,0) onto p1->p0.
  // The canonical body (+y) then lands on the side of the edge away from the
  // parent's interior, and orientation stays counterclockwise.
  Point u = (p0 - p1) * (1.0 / len);
  for (auto& v : shape.vertices) v = p1 + u * v.x + perp(u) * v.y;
  shape.vertices[0] = p1;
  shape.vertices[1] = p0;
  shape.parent_edge = edge_index;

  auto candidate = boundary_polygon(shape);
  for (const auto& existing : fig.shapes) {
    auto poly = boundary_polygon(existing);
    if (polygon_intersects(poly, candidate))
      throw OverlapRejection("candidate " + std::string(kind_name(kind)) +
                             " overlaps shape " + existing.name());
  }

  int m = parent.kind == ShapeKind::Circle ? 2 : static_cast<int>(parent.vertices.size());
  shape.labels.resize(shape.vertices.size());
  shape.labels[0] = parent.labels[(edge_index + 1) % m];
  shape.labels[1] = parent.labels[edge_index % m];
  for (std::size_t i = 2; i < shape.labels.size(); ++i) shape.labels[i] = fresh_label(fig);
  fig.shapes.push_back(std::move(shape));
}

CompositeFigure sample_figure(util::Rng& rng, const FigureConfig& cfg) {
  assert(cfg.min_hops >= 1 && cfg.min_hops <= cfg.max_hops && cfg.max_hops <= 6);
  int hops = rng.uniform_int(cfg.min_hops, cfg.max_hops);

  CompositeFigure fig;
  fig.shapes.push_back(sample_initial_shape(rng, cfg, hops == 1));
  fig.labels_used = static_cast<int>(fig.shapes.back().labels.size());

  for (int k = 1; k < hops; ++k) {
    bool last_hop = (k == hops - 1);
    const auto& kinds = last_hop ? all_kinds() : extendable_kinds();
    bool attached = false;
    for (int attempt = 0; attempt < cfg.attach_retries && !attached; ++attempt) {
      auto edges = attachable_edges(fig);
      if (edges.empty()) break;
      int edge = rng.pick(edges);
      ShapeKind kind = rng.pick(kinds);
      try {
        attach_shape(fig, kind, edge, rng, cfg.ranges);
        attached = true;
      } catch (const OverlapRejection&) {
        // try another edge/kind combination
      }
    }
    if (!attached) break;  // shorten the chain rather than force an overlap
  }
  return fig;
}

bool labels_consistent(const CompositeFigure& fig, double tol) {
  std::vector<std::pair<std::string, Point>> seen;
  for (const auto& shape : fig.shapes) {
    for (std::size_t i = 0; i < shape.labels.size(); ++i) {
      const auto& label = shape.labels[i];
      Point p = shape.vertices[i];
      bool found = false;
      for (const auto& [other, q] : seen) {
        bool same_label = other == label;
        bool same_point = dist(p, q) <= tol;
        if (same_label != same_point) return false;
        if (same_label) found = true;
      }
      if (!found) seen.emplace_back(label, p);
    }
  }
  return true;
}

std::string display_name(const ShapeInstance& shape) {
  std::string kind(kind_name(shape.kind));
  switch (shape.kind) {
    case ShapeKind::Circle:
      return kind + " " + shape.labels[2];
    default:
      return kind + " " + shape.name();
  }
}

}  // namespace diagen::geom
