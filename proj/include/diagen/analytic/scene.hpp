#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagen/caption/templates.hpp"
#include "diagen/geom/types.hpp"
#include "diagen/util/rng.hpp"

namespace diagen::analytic {

enum class FigKind {
  Point,
  Segment,
  Line,
  Circle,
  Ellipse,
  Rectangle,
  Square,
  Polygon,
  Sector,
};

inline constexpr int kFigKindCount = 9;

std::string_view fig_kind_name(FigKind kind);
std::optional<FigKind> fig_kind_from_name(std::string_view name);
const std::vector<FigKind>& all_fig_kinds();

/// Axis-aligned coordinate window the scene lives in.
struct CoordRange {
  double x_min = -10, x_max = 10;
  double y_min = -10, y_max = 10;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool contains(geom::Point p, double margin = 0.0) const {
    return p.x >= x_min + margin && p.x <= x_max - margin && p.y >= y_min + margin &&
           p.y <= y_max - margin;
  }
};

/// One placed figure. The anchor is kind-specific: the point itself, the
/// first endpoint of a segment or line, the center of a circle, ellipse,
/// polygon or sector, a rectangle's top-left corner, a square's base (bottom)
/// left corner. size_params:
///   segment/line: {x2, y2}   circle: {r}        ellipse: {rx, ry}
///   rectangle: {w, h}        square: {side}     polygon: {circumradius}
///   sector: {radius, sweep_deg, start_deg}
struct SceneFigure {
  FigKind kind = FigKind::Point;
  geom::Point anchor;
  std::vector<double> size_params;
  int sides = 0;  // polygon only: 5 or 6

  bool linear() const;            // zero-area kinds: point, segment, line
  double area() const;            // 0 for linear kinds
  geom::Point centroid() const;   // true area centroid (midpoint for linear)
  /// Boundary polygon for area kinds (counterclockwise, curved parts as
  /// `segments_per_turn` chords per full turn); endpoints for linear kinds.
  std::vector<geom::Point> footprint(int segments_per_turn = 64) const;
  /// Strict interior test; always false for linear kinds.
  bool contains(geom::Point p) const;
};

struct Scene {
  CoordRange range;
  std::vector<SceneFigure> figures;
};

/// Spatial relation between consecutive figures, judged on centroids.
enum class Relation {
  Above,
  Below,
  LeftOf,
  RightOf,
  TopLeftOf,
  TopRightOf,
  BottomLeftOf,
  BottomRightOf,
  OverlappingLinear,
};

std::string_view relation_name(Relation r);  // template section suffixes

/// Relation of `b` relative to `a`: displacements within `threshold` on an
/// axis collapse to that axis's midline, within threshold on both axes the
/// figures overlap as far as the caption is concerned.
Relation relation_of(const SceneFigure& a, const SceneFigure& b,
                     double threshold = 1.0);

struct AnalyticConfig {
  int min_figures = 2;
  int max_figures = 4;
  double min_area_fraction = 0.04;  // of the coordinate range's area
  double max_area_fraction = 0.25;
  int place_retries = 20;
  double relation_threshold = 1.0;
};

/// Samples a scene: integer-bounded coordinate window, then figures placed
/// one by one. Area figures are rejected until their interiors are disjoint
/// from all earlier area figures and they fit inside the window; a figure
/// that cannot be placed within place_retries attempts is dropped.
Scene sample_scene(util::Rng& rng, const AnalyticConfig& cfg);

/// Uniform point inside an area figure (rejection from its bounding box).
geom::Point sample_in_figure(util::Rng& rng, const SceneFigure& fig);

/// Template section for the figure's descriptive sentence.
std::string figure_section(const SceneFigure& fig);

/// Slot values for the figure's descriptive sentence.
caption::SlotMap figure_slots(const SceneFigure& fig);

/// Noun phrase naming figure `index` in the scene ("the circle", "the second
/// square"); ordinals appear once a kind occurs more than once.
std::string figure_phrase(const Scene& scene, std::size_t index);

}  // namespace diagen::analytic
