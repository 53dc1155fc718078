#pragma once

#include "diagen/geom/types.hpp"
#include "diagen/util/rng.hpp"

namespace diagen::geom {

/// Sampling ranges for free shape attributes.
struct GeomRanges {
  int side_min = 3;
  int side_max = 12;
  std::vector<int> vertex_angles = {30, 40, 50, 60, 70, 80, 90, 100, 110, 120};
  std::vector<int> arc_angles = {30, 45, 60, 90, 120};
  std::vector<int> oblique_angles = {30, 45, 60, 120, 135, 150};
  std::vector<double> top_ratios = {0.4, 0.5, 0.6};
  int trapezoid_height_max = 8;
};

struct FigureConfig {
  int min_hops = 1;
  int max_hops = 3;
  int attach_retries = 8;
  GeomRanges ranges;
};

/// Canonical-frame construction: initial side from (0,0) to (initial_side, 0),
/// body in the upper half-plane. Free attributes are sampled from `ranges`.
/// Labels are left empty; figure assembly assigns them.
ShapeInstance make_canonical_shape(ShapeKind kind, double initial_side, util::Rng& rng,
                                   const GeomRanges& ranges);

/// First shape of a figure, placed with its initial side on the horizontal
/// axis and fresh labels assigned. Terminal-only kinds are eligible only when
/// `allow_terminal` (single-shape figures).
ShapeInstance sample_initial_shape(util::Rng& rng, const FigureConfig& cfg,
                                   bool allow_terminal);

/// Grows `fig` by one shape sharing edge `edge_index` of the current last
/// shape, placed on the half-plane away from that shape. Shared endpoints are
/// copied exactly; shared vertices reuse their letters and new vertices get
/// fresh ones. Throws OverlapRejection when the candidate's interior meets any
/// existing shape's interior, and Error when the edge is not extendable.
void attach_shape(CompositeFigure& fig, ShapeKind kind, int edge_index, util::Rng& rng,
                  const GeomRanges& ranges);

/// Edges of the figure's last shape a next shape may grow from (declared
/// extendable minus the edge it is itself attached by).
std::vector<int> attachable_edges(const CompositeFigure& fig);

/// Full figure growth: hop count uniform in [min_hops, max_hops]; kinds
/// uniform (terminal-only kinds only in the last position); per-hop placement
/// retried up to attach_retries times, then the chain is shortened.
CompositeFigure sample_figure(util::Rng& rng, const FigureConfig& cfg);

/// Letter <-> point consistency: every label names exactly one point and
/// every labeled point carries exactly one letter.
bool labels_consistent(const CompositeFigure& fig, double tol = 1e-9);

/// Kind-aware display name ("square ABCD", "circle E", "semicircle AB").
std::string display_name(const ShapeInstance& shape);

}  // namespace diagen::geom
