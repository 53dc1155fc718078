#pragma once

#include <string>
#include <vector>

#include "diagen/analytic/scene.hpp"
#include "diagen/fn/families.hpp"
#include "diagen/fn/features.hpp"
#include "diagen/geom/types.hpp"
#include "diagen/record.hpp"

namespace diagen::render {

struct RenderStyle {
  int canvas_px = 448;
  double stroke_width = 2.0;
  double font_size = 14.0;
  bool monochrome = true;       // diagrams use a monochromatic scheme
  int margin_px = 22;           // ~5% of the default canvas
  std::string stroke = "#000000";
};

/// World -> canvas map: uniform scale, centered, y flipped (SVG grows down).
struct FitTransform {
  double scale = 1.0;
  double x_off = 0.0;
  double y_off = 0.0;

  double x(double wx) const { return x_off + scale * wx; }
  double y(double wy) const { return y_off - scale * wy; }
  geom::Point map(geom::Point w) const { return {x(w.x), y(w.y)}; }
};

/// Fits the world box into the canvas minus margins; `band_px` reserves a
/// strip at the bottom (the rendered-question area).
FitTransform fit_transform(double x_min, double x_max, double y_min, double y_max,
                           const RenderStyle& style, double band_px = 0.0);

/// Tight world bounds of a composite figure, curved boundaries included;
/// returns the {min, max} corners. This is the box render_plane fits to the
/// canvas, so markers in the SVG can be checked against an expected
/// transform.
std::pair<geom::Point, geom::Point> figure_bbox(const geom::CompositeFigure& fig);

/// Composite plane figure with vertex letters and optional numeric
/// annotations; a non-empty `question_text` is typeset in a band below the
/// figure (the vision-only variant). Throws AnnotationMismatch when an
/// annotation points at a shape or attribute the figure does not have.
std::string render_plane(const geom::CompositeFigure& fig,
                         const std::vector<Condition>& annotations,
                         const RenderStyle& style, const std::string& question_text = "");

/// Grid, axes and integer tick labels for the coordinate window, as a <g>
/// fragment. Identical ranges yield identical fragments.
std::string render_axes(const analytic::CoordRange& range, const RenderStyle& style);

/// Analytic scene: axes fragment plus each figure at true coordinates.
std::string render_analytic(const analytic::Scene& scene, const RenderStyle& style);

/// Function curve sampled at >= 512 points, split at poles and breakpoints
/// and clipped in y; zero and extremum x-coordinates are labeled on the
/// x-axis. Condition texts (expression/domain annotations of the vision
/// variants) are typeset inside the plot; `question_text` as in render_plane.
std::string render_function(const fn::FunctionSpec& spec,
                            const fn::FunctionFeatures& features,
                            const RenderStyle& style,
                            const std::vector<Condition>& annotations = {},
                            const std::string& question_text = "");

}  // namespace diagen::render
