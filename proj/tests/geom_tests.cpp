#include "doctest.h"

#include <cmath>
#include <set>

#include "diagen/errors.hpp"
#include "diagen/geom/build.hpp"
#include "diagen/geom/catalog.hpp"
#include "diagen/geom/intersect.hpp"
#include "diagen/util/rng.hpp"

using namespace diagen;
using namespace diagen::geom;

namespace {

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

/// Monte-Carlo point sample strictly inside a shape's boundary polygon.
std::vector<Point> interior_samples(const ShapeInstance& s, util::Rng& rng, int want) {
  auto poly = boundary_polygon(s);
  double x0 = poly[0].x, x1 = poly[0].x, y0 = poly[0].y, y1 = poly[0].y;
  for (auto p : poly) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  std::vector<Point> out;
  int guard = want * 200;
  while (static_cast<int>(out.size()) < want && guard-- > 0) {
    Point p{rng.uniform_real(x0, x1), rng.uniform_real(y0, y1)};
    if (point_strictly_inside(p, poly, 1e-7)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("attr keys round-trip through text") {
  std::vector<AttrKey> keys = {AttrKey::side(0),     AttrKey::side(3),
                               AttrKey::angle(1),    AttrKey::radius(),
                               AttrKey::arc_angle(), AttrKey::height(),
                               AttrKey::perimeter(), AttrKey::area(),
                               AttrKey::arc_length(), AttrKey::expression(),
                               AttrKey::domain()};
  for (auto k : keys) {
    auto back = AttrKey::parse(k.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(!AttrKey::parse("nonsense").has_value());
}

TEST_CASE("square canonical frame and attributes") {
  util::Rng rng(1);
  GeomRanges ranges;
  auto s = make_canonical_shape(ShapeKind::Square, 4.0, rng, ranges);
  REQUIRE(s.vertices.size() == 4);
  CHECK(near(s.vertices[0].x, 0));
  CHECK(near(s.vertices[1].x, 4));
  CHECK(near(s.vertices[2].y, 4));
  CHECK(near(s.attributes.at(AttrKey::side(0)), 4));
  // Spec formulas: perimeter 16, area 16 for side 4.
  CHECK(near(4 * s.attributes.at(AttrKey::side(0)), 16));
  for (auto& [k, v] : recompute_attributes(s)) {
    INFO(k.to_string());
    CHECK(near(s.attributes.at(k), v, 1e-6));
  }
}

TEST_CASE("all kinds: stored attributes match coordinate recomputation") {
  util::Rng rng(2);
  GeomRanges ranges;
  for (ShapeKind kind : all_kinds()) {
    for (int rep = 0; rep < 50; ++rep) {
      double side = rng.uniform_int(ranges.side_min, ranges.side_max);
      auto s = make_canonical_shape(kind, side, rng, ranges);
      auto oracle = recompute_attributes(s);
      for (auto& [k, v] : oracle) {
        INFO(kind_name(kind) << " " << k.to_string());
        REQUIRE(s.attributes.count(k) == 1);
        CHECK(near(s.attributes.at(k), v, 1e-6));
      }
    }
  }
}

TEST_CASE("sector exposes both radii as extendable edges") {
  auto& info = kind_info(ShapeKind::Sector);
  CHECK(info.extendable_edges == std::vector<int>{0, 2});
  CHECK(!info.terminal_only);
}

TEST_CASE("circle and semicircle are terminal-only") {
  CHECK(kind_info(ShapeKind::Circle).terminal_only);
  CHECK(kind_info(ShapeKind::Semicircle).terminal_only);
  for (ShapeKind k : extendable_kinds()) {
    CHECK(k != ShapeKind::Circle);
    CHECK(k != ShapeKind::Semicircle);
  }
}

TEST_CASE("polygon_intersects basics") {
  std::vector<Point> unit = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<Point> far = {{3, 3}, {4, 3}, {4, 4}, {3, 4}};
  std::vector<Point> overlapping = {{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}};
  std::vector<Point> edge_sharing = {{1, 0}, {2, 0}, {2, 1}, {1, 1}};
  std::vector<Point> nested = {{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75}, {0.25, 0.75}};
  std::vector<Point> vertex_touch = {{1, 1}, {2, 1}, {2, 2}, {1, 2}};

  CHECK(!polygon_intersects(unit, far));
  CHECK(polygon_intersects(unit, overlapping));
  CHECK(!polygon_intersects(unit, edge_sharing));  // boundary contact is allowed
  CHECK(polygon_intersects(unit, nested));
  CHECK(polygon_intersects(nested, unit));
  CHECK(!polygon_intersects(unit, vertex_touch));
  CHECK(polygon_intersects(unit, unit));  // coincident
}

TEST_CASE("attach_shape shares the edge endpoints exactly") {
  util::Rng rng(3);
  FigureConfig cfg;
  for (int rep = 0; rep < 100; ++rep) {
    CompositeFigure fig;
    fig.shapes.push_back(sample_initial_shape(rng, cfg, false));
    fig.labels_used = static_cast<int>(fig.shapes[0].labels.size());
    auto edges = attachable_edges(fig);
    REQUIRE(!edges.empty());
    int e = edges[rng.bounded(edges.size())];
    auto [p0, p1] = fig.shapes[0].edge(e);
    try {
      attach_shape(fig, ShapeKind::Square, e, rng, cfg.ranges);
    } catch (const OverlapRejection&) {
      continue;
    }
    auto& s = fig.shapes[1];
    // Shared endpoints are copied bit-for-bit, reversed orientation.
    CHECK(s.vertices[0].x == p1.x);
    CHECK(s.vertices[0].y == p1.y);
    CHECK(s.vertices[1].x == p0.x);
    CHECK(s.vertices[1].y == p0.y);
    // Shared letters reused, no duplicates introduced.
    CHECK(labels_consistent(fig));
  }
}

TEST_CASE("attach_shape rejects non-extendable edges") {
  util::Rng rng(4);
  FigureConfig cfg;
  CompositeFigure fig;
  fig.shapes.push_back(make_canonical_shape(ShapeKind::Rectangle, 4.0, rng, cfg.ranges));
  auto& labels = fig.shapes[0].labels;
  labels = {"A", "B", "C", "D"};
  fig.labels_used = 4;
  // Rectangle extends only through edges 0 and 2; edge 1 must throw.
  CHECK_THROWS_AS(attach_shape(fig, ShapeKind::Square, 1, rng, cfg.ranges), Error);
}

TEST_CASE("sampled figures: labels consistent, attributes true, no overlap") {
  util::Rng rng(5);
  FigureConfig cfg;
  int curved_shapes = 0;
  for (int rep = 0; rep < 300; ++rep) {
    auto fig = sample_figure(rng, cfg);
    REQUIRE(!fig.shapes.empty());
    CHECK(labels_consistent(fig));

    for (auto& s : fig.shapes) {
      if (!kind_info(s.kind).polygonal) ++curved_shapes;
      auto oracle = recompute_attributes(s);
      for (auto& [k, v] : oracle) {
        INFO(s.name() << " " << k.to_string());
        CHECK(near(s.attributes.at(k), v, 1e-6));
      }
    }

    // Every shape after the first records its parent edge and shares it.
    for (std::size_t i = 1; i < fig.shapes.size(); ++i) {
      auto& s = fig.shapes[i];
      REQUIRE(s.parent_edge.has_value());
      auto [p0, p1] = fig.shapes[i - 1].edge(*s.parent_edge);
      CHECK(s.vertices[0].x == p1.x);
      CHECK(s.vertices[0].y == p1.y);
      CHECK(s.vertices[1].x == p0.x);
      CHECK(s.vertices[1].y == p0.y);
    }

    // Pairwise interiors stay disjoint (Monte-Carlo oracle).
    for (std::size_t i = 0; i < fig.shapes.size(); ++i) {
      for (std::size_t j = i + 1; j < fig.shapes.size(); ++j) {
        auto pts = interior_samples(fig.shapes[i], rng, 40);
        auto poly_j = boundary_polygon(fig.shapes[j]);
        for (auto p : pts) {
          // tolerance band keeps tangent circles from flagging
          CHECK(!point_strictly_inside(p, poly_j, 1e-6));
        }
      }
    }
  }
  CHECK(curved_shapes > 0);  // terminal kinds do appear
}

TEST_CASE("figures honor hop bounds and terminal placement") {
  util::Rng rng(6);
  FigureConfig cfg;
  cfg.min_hops = 2;
  cfg.max_hops = 3;
  std::set<std::size_t> sizes;
  for (int rep = 0; rep < 200; ++rep) {
    auto fig = sample_figure(rng, cfg);
    sizes.insert(fig.shapes.size());
    for (std::size_t i = 0; i + 1 < fig.shapes.size(); ++i)
      CHECK(!kind_info(fig.shapes[i].kind).terminal_only);
  }
  for (auto n : sizes) CHECK(n >= 1);  // shortened chains allowed under rejection
  CHECK(sizes.count(2) + sizes.count(3) > 0);
}

TEST_CASE("display_name uses the letter ring") {
  util::Rng rng(7);
  GeomRanges ranges;
  auto sq = make_canonical_shape(ShapeKind::Square, 4.0, rng, ranges);
  sq.labels = {"A", "B", "C", "D"};
  CHECK(display_name(sq) == "square ABCD");
  auto circ = make_canonical_shape(ShapeKind::Circle, 4.0, rng, ranges);
  circ.labels = {"A", "B", "E"};
  CHECK(display_name(circ) == "circle E");
}
