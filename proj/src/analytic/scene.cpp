#include "diagen/analytic/scene.hpp"

#include <cassert>
#include <cmath>
#include <optional>

#include "diagen/geom/intersect.hpp"
#include "diagen/util/format.hpp"

namespace diagen::analytic {

namespace {

using geom::kPi;
using geom::Point;

double round1(double v) { return std::round(v * 10.0) / 10.0; }

/// Uniform integer in [lo, hi] after rounding inward; nullopt when empty.
std::optional<int> int_between(util::Rng& rng, double lo, double hi) {
  int l = static_cast<int>(std::ceil(lo - 1e-9));
  int h = static_cast<int>(std::floor(hi + 1e-9));
  if (l > h) return std::nullopt;
  return rng.uniform_int(l, h);
}

}  // namespace

std::string_view fig_kind_name(FigKind kind) {
  switch (kind) {
    case FigKind::Point: return "point";
    case FigKind::Segment: return "segment";
    case FigKind::Line: return "line";
    case FigKind::Circle: return "circle";
    case FigKind::Ellipse: return "ellipse";
    case FigKind::Rectangle: return "rectangle";
    case FigKind::Square: return "square";
    case FigKind::Polygon: return "polygon";
    case FigKind::Sector: return "sector";
  }
  return "point";
}

std::optional<FigKind> fig_kind_from_name(std::string_view name) {
  for (FigKind k : all_fig_kinds())
    if (fig_kind_name(k) == name) return k;
  return std::nullopt;
}

const std::vector<FigKind>& all_fig_kinds() {
  static const std::vector<FigKind> kAll = {
      FigKind::Point,     FigKind::Segment, FigKind::Line,
      FigKind::Circle,    FigKind::Ellipse, FigKind::Rectangle,
      FigKind::Square,    FigKind::Polygon, FigKind::Sector,
  };
  return kAll;
}

bool SceneFigure::linear() const {
  return kind == FigKind::Point || kind == FigKind::Segment || kind == FigKind::Line;
}

double SceneFigure::area() const {
  switch (kind) {
    case FigKind::Circle:
      return kPi * size_params[0] * size_params[0];
    case FigKind::Ellipse:
      return kPi * size_params[0] * size_params[1];
    case FigKind::Rectangle:
      return size_params[0] * size_params[1];
    case FigKind::Square:
      return size_params[0] * size_params[0];
    case FigKind::Polygon:
      return 0.5 * sides * size_params[0] * size_params[0] * std::sin(2 * kPi / sides);
    case FigKind::Sector:
      return geom::deg2rad(size_params[1]) / 2 * size_params[0] * size_params[0];
    default:
      return 0.0;
  }
}

geom::Point SceneFigure::centroid() const {
  switch (kind) {
    case FigKind::Segment:
    case FigKind::Line:
      return {(anchor.x + size_params[0]) / 2, (anchor.y + size_params[1]) / 2};
    case FigKind::Rectangle:
      return {anchor.x + size_params[0] / 2, anchor.y - size_params[1] / 2};
    case FigKind::Square:
      return {anchor.x + size_params[0] / 2, anchor.y + size_params[0] / 2};
    case FigKind::Sector: {
      double r = size_params[0];
      double sweep = geom::deg2rad(size_params[1]);
      double mid = geom::deg2rad(size_params[2]) + sweep / 2;
      double d = 4 * r * std::sin(sweep / 2) / (3 * sweep);
      return {anchor.x + d * std::cos(mid), anchor.y + d * std::sin(mid)};
    }
    default:
      return anchor;  // point, circle, ellipse, polygon
  }
}

std::vector<geom::Point> SceneFigure::footprint(int segments_per_turn) const {
  std::vector<Point> out;
  switch (kind) {
    case FigKind::Point:
      out.push_back(anchor);
      break;
    case FigKind::Segment:
    case FigKind::Line:
      out.push_back(anchor);
      out.push_back({size_params[0], size_params[1]});
      break;
    case FigKind::Circle:
    case FigKind::Ellipse: {
      double rx = size_params[0];
      double ry = kind == FigKind::Circle ? rx : size_params[1];
      for (int i = 0; i < segments_per_turn; ++i) {
        double a = 2 * kPi * i / segments_per_turn;
        out.push_back({anchor.x + rx * std::cos(a), anchor.y + ry * std::sin(a)});
      }
      break;
    }
    case FigKind::Rectangle: {
      double w = size_params[0], h = size_params[1];
      out = {{anchor.x, anchor.y - h},
             {anchor.x + w, anchor.y - h},
             {anchor.x + w, anchor.y},
             {anchor.x, anchor.y}};
      break;
    }
    case FigKind::Square: {
      double s = size_params[0];
      out = {{anchor.x, anchor.y},
             {anchor.x + s, anchor.y},
             {anchor.x + s, anchor.y + s},
             {anchor.x, anchor.y + s}};
      break;
    }
    case FigKind::Polygon: {
      for (int i = 0; i < sides; ++i) {
        double a = kPi / 2 + 2 * kPi * i / sides;
        out.push_back({anchor.x + size_params[0] * std::cos(a),
                       anchor.y + size_params[0] * std::sin(a)});
      }
      break;
    }
    case FigKind::Sector: {
      double r = size_params[0];
      double sweep = size_params[1], start = size_params[2];
      int segs = std::max(8, static_cast<int>(std::ceil(sweep / 360.0 * segments_per_turn)));
      out.push_back(anchor);
      for (int i = 0; i <= segs; ++i) {
        double a = geom::deg2rad(start + sweep * i / segs);
        out.push_back({anchor.x + r * std::cos(a), anchor.y + r * std::sin(a)});
      }
      break;
    }
  }
  return out;
}

bool SceneFigure::contains(geom::Point p) const {
  switch (kind) {
    case FigKind::Point:
    case FigKind::Segment:
    case FigKind::Line:
      return false;
    case FigKind::Circle: {
      double r = size_params[0];
      return geom::dist(p, anchor) < r - 1e-9;
    }
    case FigKind::Ellipse: {
      double nx = (p.x - anchor.x) / size_params[0];
      double ny = (p.y - anchor.y) / size_params[1];
      return nx * nx + ny * ny < 1.0 - 1e-9;
    }
    default: {
      auto poly = footprint();
      return geom::point_strictly_inside(p, poly);
    }
  }
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Above: return "above";
    case Relation::Below: return "below";
    case Relation::LeftOf: return "left_of";
    case Relation::RightOf: return "right_of";
    case Relation::TopLeftOf: return "top_left_of";
    case Relation::TopRightOf: return "top_right_of";
    case Relation::BottomLeftOf: return "bottom_left_of";
    case Relation::BottomRightOf: return "bottom_right_of";
    case Relation::OverlappingLinear: return "overlapping_linear";
  }
  return "above";
}

Relation relation_of(const SceneFigure& a, const SceneFigure& b, double threshold) {
  Point ca = a.centroid(), cb = b.centroid();
  double dx = cb.x - ca.x, dy = cb.y - ca.y;
  bool x_tied = std::abs(dx) <= threshold;
  bool y_tied = std::abs(dy) <= threshold;
  if (x_tied && y_tied) return Relation::OverlappingLinear;
  if (x_tied) return dy > 0 ? Relation::Above : Relation::Below;
  if (y_tied) return dx > 0 ? Relation::RightOf : Relation::LeftOf;
  if (dx > 0) return dy > 0 ? Relation::TopRightOf : Relation::BottomRightOf;
  return dy > 0 ? Relation::TopLeftOf : Relation::BottomLeftOf;
}

namespace {

/// One placement attempt; nullopt when the sampled parameters cannot fit.
std::optional<SceneFigure> try_sample_figure(util::Rng& rng, const CoordRange& range,
                                             const AnalyticConfig& cfg) {
  SceneFigure fig;
  fig.kind = rng.pick(all_fig_kinds());
  double frac = rng.uniform_real(cfg.min_area_fraction, cfg.max_area_fraction);
  double target = frac * range.area();

  auto anchor_int = [&](double xlo, double xhi, double ylo,
                        double yhi) -> std::optional<Point> {
    auto x = int_between(rng, xlo, xhi);
    auto y = int_between(rng, ylo, yhi);
    if (!x || !y) return std::nullopt;
    return Point{static_cast<double>(*x), static_cast<double>(*y)};
  };

  switch (fig.kind) {
    case FigKind::Point: {
      auto p = anchor_int(range.x_min + 1, range.x_max - 1, range.y_min + 1,
                          range.y_max - 1);
      if (!p) return std::nullopt;
      fig.anchor = *p;
      break;
    }
    case FigKind::Segment:
    case FigKind::Line: {
      auto p = anchor_int(range.x_min + 1, range.x_max - 1, range.y_min + 1,
                          range.y_max - 1);
      auto q = anchor_int(range.x_min + 1, range.x_max - 1, range.y_min + 1,
                          range.y_max - 1);
      if (!p || !q) return std::nullopt;
      if (p->x == q->x && p->y == q->y) return std::nullopt;
      fig.anchor = *p;
      fig.size_params = {q->x, q->y};
      break;
    }
    case FigKind::Circle: {
      double r = round1(std::sqrt(target / kPi));
      auto c = anchor_int(range.x_min + r, range.x_max - r, range.y_min + r,
                          range.y_max - r);
      if (!c) return std::nullopt;
      fig.anchor = *c;
      fig.size_params = {r};
      break;
    }
    case FigKind::Ellipse: {
      double aspect = rng.uniform_real(0.6, 1.8);
      double rx = round1(std::sqrt(target * aspect / kPi));
      double ry = round1(target / (kPi * rx));
      auto c = anchor_int(range.x_min + rx, range.x_max - rx, range.y_min + ry,
                          range.y_max - ry);
      if (!c) return std::nullopt;
      fig.anchor = *c;
      fig.size_params = {rx, ry};
      break;
    }
    case FigKind::Rectangle: {
      double aspect = rng.uniform_real(0.5, 2.0);
      double w = round1(std::sqrt(target * aspect));
      double h = round1(target / w);
      auto c = anchor_int(range.x_min, range.x_max - w, range.y_min + h, range.y_max);
      if (!c) return std::nullopt;
      fig.anchor = *c;  // top-left corner
      fig.size_params = {w, h};
      break;
    }
    case FigKind::Square: {
      double s = round1(std::sqrt(target));
      auto c = anchor_int(range.x_min, range.x_max - s, range.y_min, range.y_max - s);
      if (!c) return std::nullopt;
      fig.anchor = *c;  // base left corner
      fig.size_params = {s};
      break;
    }
    case FigKind::Polygon: {
      fig.sides = rng.uniform_int(5, 6);
      double r = round1(std::sqrt(2 * target / (fig.sides * std::sin(2 * kPi / fig.sides))));
      auto c = anchor_int(range.x_min + r, range.x_max - r, range.y_min + r,
                          range.y_max - r);
      if (!c) return std::nullopt;
      fig.anchor = *c;
      fig.size_params = {r};
      break;
    }
    case FigKind::Sector: {
      static const std::vector<int> kSweeps = {45, 60, 90, 120};
      static const std::vector<int> kStarts = {0, 30, 60, 90, 120, 150,
                                               180, 210, 240, 270, 300, 330};
      double sweep = rng.pick(kSweeps);
      double start = rng.pick(kStarts);
      double r = round1(std::sqrt(2 * target / geom::deg2rad(sweep)));
      // Place so the whole supporting disc fits: always valid, no orientation
      // dependent bounds needed.
      auto c = anchor_int(range.x_min + r, range.x_max - r, range.y_min + r,
                          range.y_max - r);
      if (!c) return std::nullopt;
      fig.anchor = *c;
      fig.size_params = {r, sweep, start};
      break;
    }
  }

  for (const Point& p : fig.footprint())
    if (!range.contains(p)) return std::nullopt;
  return fig;
}

}  // namespace

Scene sample_scene(util::Rng& rng, const AnalyticConfig& cfg) {
  Scene scene;
  scene.range.x_min = rng.uniform_int(-12, -8);
  scene.range.x_max = rng.uniform_int(8, 12);
  scene.range.y_min = rng.uniform_int(-12, -8);
  scene.range.y_max = rng.uniform_int(8, 12);

  int want = rng.uniform_int(cfg.min_figures, cfg.max_figures);
  for (int i = 0; i < want; ++i) {
    for (int attempt = 0; attempt < cfg.place_retries; ++attempt) {
      auto fig = try_sample_figure(rng, scene.range, cfg);
      if (!fig) continue;
      if (!fig->linear()) {
        bool clash = false;
        auto mine = fig->footprint();
        for (const auto& other : scene.figures) {
          if (other.linear()) continue;
          auto theirs = other.footprint();
          if (geom::polygon_intersects(mine, theirs)) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
      }
      scene.figures.push_back(std::move(*fig));
      break;
    }
  }
  return scene;
}

geom::Point sample_in_figure(util::Rng& rng, const SceneFigure& fig) {
  assert(!fig.linear());
  auto poly = fig.footprint();
  double xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
  for (const Point& p : poly) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  for (int i = 0; i < 100000; ++i) {
    Point p{rng.uniform_real(xlo, xhi), rng.uniform_real(ylo, yhi)};
    if (fig.contains(p)) return p;
  }
  return fig.centroid();  // unreachable for sane figures
}

std::string figure_section(const SceneFigure& fig) {
  return "analytic_fig/" + std::string(fig_kind_name(fig.kind));
}

caption::SlotMap figure_slots(const SceneFigure& fig) {
  using util::format_coord;
  caption::SlotMap slots;
  switch (fig.kind) {
    case FigKind::Point:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      break;
    case FigKind::Segment:
    case FigKind::Line:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      slots["x2"] = format_coord(fig.size_params[0]);
      slots["y2"] = format_coord(fig.size_params[1]);
      break;
    case FigKind::Circle:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      slots["r"] = format_coord(fig.size_params[0]);
      break;
    case FigKind::Ellipse:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      slots["rx"] = format_coord(fig.size_params[0]);
      slots["ry"] = format_coord(fig.size_params[1]);
      break;
    case FigKind::Rectangle:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      slots["w"] = format_coord(fig.size_params[0]);
      slots["h"] = format_coord(fig.size_params[1]);
      break;
    case FigKind::Square:
      slots["bx"] = format_coord(fig.anchor.x);
      slots["by"] = format_coord(fig.anchor.y);
      slots["side"] = format_coord(fig.size_params[0]);
      break;
    case FigKind::Polygon:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      slots["r"] = format_coord(fig.size_params[0]);
      slots["ngon"] = fig.sides == 5 ? "pentagon" : "hexagon";
      break;
    case FigKind::Sector:
      slots["x"] = format_coord(fig.anchor.x);
      slots["y"] = format_coord(fig.anchor.y);
      slots["r"] = format_coord(fig.size_params[0]);
      slots["deg"] = util::format_quantity(fig.size_params[1]);
      break;
  }
  return slots;
}

std::string figure_phrase(const Scene& scene, std::size_t index) {
  static const char* kOrdinals[] = {"first", "second", "third", "fourth",
                                    "fifth", "sixth", "seventh", "eighth"};
  auto noun = [](const SceneFigure& f) {
    if (f.kind == FigKind::Polygon)
      return std::string(f.sides == 5 ? "pentagon" : "hexagon");
    return std::string(fig_kind_name(f.kind));
  };
  std::string mine = noun(scene.figures[index]);
  int total = 0, ordinal = 0;
  for (std::size_t i = 0; i < scene.figures.size(); ++i) {
    if (noun(scene.figures[i]) != mine) continue;
    ++total;
    if (i < index) ++ordinal;
  }
  if (total <= 1) return "the " + mine;
  assert(ordinal < 8);
  return "the " + std::string(kOrdinals[ordinal]) + " " + mine;
}

}  // namespace diagen::analytic
