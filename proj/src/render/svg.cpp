#include "diagen/render/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "diagen/errors.hpp"
#include "diagen/fn/expression.hpp"
#include "diagen/util/format.hpp"

namespace diagen::render {

namespace {

using geom::Point;
using geom::ShapeInstance;
using geom::ShapeKind;

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  if (buf == std::string("-0.00")) return "0.00";
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void add_line(std::string& body, Point a, Point b, const std::string& stroke,
              double width, const char* dash = nullptr) {
  body += "<line x1=\"" + f2(a.x) + "\" y1=\"" + f2(a.y) + "\" x2=\"" + f2(b.x) +
          "\" y2=\"" + f2(b.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
          f2(width) + "\"";
  if (dash) body += std::string(" stroke-dasharray=\"") + dash + "\"";
  body += "/>\n";
}

void add_circle(std::string& body, Point c, double r, const std::string& fill,
                const std::string& stroke, double width, const char* cls = nullptr) {
  body += "<circle";
  if (cls) body += std::string(" class=\"") + cls + "\"";
  body += " cx=\"" + f2(c.x) + "\" cy=\"" + f2(c.y) + "\" r=\"" + f2(r) + "\" fill=\"" +
          fill + "\"";
  if (width > 0)
    body += " stroke=\"" + stroke + "\" stroke-width=\"" + f2(width) + "\"";
  body += "/>\n";
}

void add_path(std::string& body, const std::vector<Point>& pts, bool closed,
              const std::string& fill, const std::string& stroke, double width,
              const char* cls = nullptr) {
  if (pts.size() < 2) return;
  body += "<path";
  if (cls) body += std::string(" class=\"") + cls + "\"";
  body += " d=\"M " + f2(pts[0].x) + " " + f2(pts[0].y);
  for (std::size_t i = 1; i < pts.size(); ++i)
    body += " L " + f2(pts[i].x) + " " + f2(pts[i].y);
  if (closed) body += " Z";
  body += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
          f2(width) + "\"/>\n";
}

void add_text(std::string& body, Point pos, double size, const std::string& text,
              const std::string& fill, const char* anchor = "middle",
              const char* cls = nullptr) {
  body += "<text";
  if (cls) body += std::string(" class=\"") + cls + "\"";
  body += " x=\"" + f2(pos.x) + "\" y=\"" + f2(pos.y) + "\" font-size=\"" + f2(size) +
          "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\" fill=\"" + fill +
          "\">" + escape_xml(text) + "</text>\n";
}

std::vector<Point> arc_points(Point center, double r, double a0, double a1, int n) {
  std::vector<Point> pts;
  pts.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double a = a0 + (a1 - a0) * i / n;
    pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return pts;
}

/// Closed boundary of a plane shape, world coordinates, curved parts sampled.
/// Orientation is the canonical counterclockwise one (attachment maps are
/// rigid, so the body always lies left of vertex0 -> vertex1).
std::vector<Point> shape_boundary(const ShapeInstance& s) {
  switch (s.kind) {
    case ShapeKind::Circle: {
      Point c = s.vertices[2];
      double r = s.attributes.at(geom::AttrKey::radius());
      return arc_points(c, r, 0, 2 * geom::kPi, 64);
    }
    case ShapeKind::Semicircle: {
      Point a = s.vertices[0], b = s.vertices[1];
      Point c = (a + b) * 0.5;
      double r = geom::dist(a, b) / 2;
      double a0 = std::atan2(b.y - c.y, b.x - c.x);
      std::vector<Point> pts = {a};
      auto arc = arc_points(c, r, a0, a0 + geom::kPi, 32);
      pts.insert(pts.end(), arc.begin(), arc.end());
      return pts;
    }
    case ShapeKind::Sector: {
      Point c = s.vertices[0], p0 = s.vertices[1];
      double r = s.attributes.at(geom::AttrKey::radius());
      double a0 = std::atan2(p0.y - c.y, p0.x - c.x);
      double sweep = geom::deg2rad(s.attributes.at(geom::AttrKey::arc_angle()));
      std::vector<Point> pts = {c};
      auto arc = arc_points(c, r, a0, a0 + sweep, 32);
      pts.insert(pts.end(), arc.begin(), arc.end());
      return pts;
    }
    default:
      return s.vertices;
  }
}

Point normalize_or(Point v, Point fallback) {
  double n = geom::norm(v);
  if (n < 1e-12) return fallback;
  return v * (1.0 / n);
}

/// Canvas-space direction of a world-space direction (y flips).
Point canvas_dir(Point world_dir) { return {world_dir.x, -world_dir.y}; }

std::vector<std::string> wrap_text(const std::string& text, std::size_t width) {
  std::vector<std::string> lines;
  std::string line;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(' ', pos);
    if (next == std::string::npos) next = text.size();
    std::string word = text.substr(pos, next - pos);
    if (!line.empty() && line.size() + 1 + word.size() > width) {
      lines.push_back(line);
      line.clear();
    }
    if (!line.empty()) line += ' ';
    line += word;
    pos = next + 1;
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

constexpr double kBandLineHeight = 16.0;
constexpr std::size_t kBandWrapWidth = 60;

double band_height(const std::vector<std::string>& lines) {
  return lines.empty() ? 0.0 : kBandLineHeight * lines.size() + 14.0;
}

void add_question_band(std::string& body, const std::vector<std::string>& lines,
                       const RenderStyle& style) {
  if (lines.empty()) return;
  double top = style.canvas_px - band_height(lines);
  add_line(body, {8, top}, {static_cast<double>(style.canvas_px) - 8, top}, "#888888",
           1.0);
  for (std::size_t i = 0; i < lines.size(); ++i)
    add_text(body, {12.0, top + 12.0 + kBandLineHeight * i}, 12.0, lines[i], "#000000",
             "start", "question");
}

std::string svg_open(const RenderStyle& style) {
  std::string head =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(style.canvas_px) + "\" height=\"" + std::to_string(style.canvas_px) +
      "\" viewBox=\"0 0 " + std::to_string(style.canvas_px) + " " +
      std::to_string(style.canvas_px) + "\">\n";
  head += "<rect width=\"" + std::to_string(style.canvas_px) + "\" height=\"" +
          std::to_string(style.canvas_px) + "\" fill=\"#ffffff\"/>\n";
  return head;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf"};

}  // namespace

std::pair<Point, Point> figure_bbox(const geom::CompositeFigure& fig) {
  Point lo = {1e300, 1e300}, hi = {-1e300, -1e300};
  for (const auto& shape : fig.shapes)
    for (const auto& p : shape_boundary(shape)) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  return {lo, hi};
}

FitTransform fit_transform(double x_min, double x_max, double y_min, double y_max,
                           const RenderStyle& style, double band_px) {
  double w = std::max(x_max - x_min, 1e-9);
  double h = std::max(y_max - y_min, 1e-9);
  double avail_w = style.canvas_px - 2.0 * style.margin_px;
  double avail_h = style.canvas_px - 2.0 * style.margin_px - band_px;
  FitTransform t;
  t.scale = std::min(avail_w / w, avail_h / h);
  double cx = (x_min + x_max) / 2, cy = (y_min + y_max) / 2;
  t.x_off = style.canvas_px / 2.0 - t.scale * cx;
  t.y_off = (style.canvas_px - band_px) / 2.0 + t.scale * cy;
  return t;
}

std::string render_plane(const geom::CompositeFigure& fig,
                         const std::vector<Condition>& annotations,
                         const RenderStyle& style, const std::string& question_text) {
  std::vector<std::vector<Point>> boundaries;
  boundaries.reserve(fig.shapes.size());
  for (const auto& shape : fig.shapes) boundaries.push_back(shape_boundary(shape));
  auto [lo, hi] = figure_bbox(fig);

  auto lines = question_text.empty() ? std::vector<std::string>{}
                                     : wrap_text(question_text, kBandWrapWidth);
  FitTransform t = fit_transform(lo.x, hi.x, lo.y, hi.y, style, band_height(lines));
  Point world_center = (lo + hi) * 0.5;

  std::string body = svg_open(style);

  // Outlines.
  for (std::size_t i = 0; i < fig.shapes.size(); ++i) {
    const auto& shape = fig.shapes[i];
    if (shape.kind == ShapeKind::Circle) {
      Point c = t.map(shape.vertices[2]);
      double r = shape.attributes.at(geom::AttrKey::radius()) * t.scale;
      add_circle(body, c, r, "none", style.stroke, style.stroke_width);
      continue;
    }
    std::vector<Point> pts;
    pts.reserve(boundaries[i].size());
    for (const auto& p : boundaries[i]) pts.push_back(t.map(p));
    add_path(body, pts, true, "none", style.stroke, style.stroke_width, "shape");
  }

  // Vertex markers and letters (shared vertices drawn once).
  std::map<std::string, Point> letters;
  for (const auto& shape : fig.shapes)
    for (std::size_t j = 0; j < shape.labels.size(); ++j)
      letters.emplace(shape.labels[j], shape.vertices[j]);
  for (const auto& [letter, world] : letters) {
    Point pos = t.map(world);
    add_circle(body, pos, 2.2, style.stroke, style.stroke, 0, "vertex");
    Point dir = canvas_dir(normalize_or(world - world_center, {0.7, 0.7}));
    add_text(body, pos + dir * 13.0 + Point{0, 4}, style.font_size, letter, style.stroke,
             "middle", "vertex-label");
  }

  // Numeric annotations.
  for (const auto& c : annotations) {
    if (c.shape_index < 0 || c.shape_index >= static_cast<int>(fig.shapes.size()))
      throw AnnotationMismatch("annotation shape index out of range");
    const auto& shape = fig.shapes[c.shape_index];
    if (!shape.attributes.count(c.key))
      throw AnnotationMismatch("annotation attribute " + c.key.to_string() +
                               " missing on " + shape.name());
    std::string value = util::format_quantity(c.value);
    switch (c.key.tag) {
      case geom::AttrKey::Tag::Side: {
        auto [a, b] = shape.edge(c.key.index);
        Point mid = (a + b) * 0.5;
        Point dir = canvas_dir(normalize_or(mid - shape.centroid(), {0, 1}));
        add_text(body, t.map(mid) + dir * 14.0 + Point{0, 4}, style.font_size - 2, value,
                 style.stroke, "middle", "annotation");
        break;
      }
      case geom::AttrKey::Tag::Angle: {
        int m = static_cast<int>(shape.vertices.size());
        int i = c.key.index;
        Point v = shape.vertices[i];
        Point ra = shape.vertices[(i + m - 1) % m] - v;
        Point rb = shape.vertices[(i + 1) % m] - v;
        double ta = std::atan2(ra.y, ra.x), tb = std::atan2(rb.y, rb.x);
        double delta = tb - ta;
        while (delta <= -geom::kPi) delta += 2 * geom::kPi;
        while (delta > geom::kPi) delta -= 2 * geom::kPi;
        std::vector<Point> arc;
        for (int k = 0; k <= 8; ++k) {
          double ang = ta + delta * k / 8;
          Point w = v + Point{std::cos(ang), std::sin(ang)} * (16.0 / t.scale);
          arc.push_back(t.map(w));
        }
        add_path(body, arc, false, "none", style.stroke, 1.0);
        Point bis = normalize_or(normalize_or(ra, {1, 0}) + normalize_or(rb, {0, 1}),
                                 {0.7, 0.7});
        add_text(body, t.map(v) + canvas_dir(bis) * 30.0 + Point{0, 4},
                 style.font_size - 2, value + "\xC2\xB0", style.stroke, "middle",
                 "annotation");
        break;
      }
      case geom::AttrKey::Tag::Radius: {
        Point center, rim;
        double r = shape.attributes.at(geom::AttrKey::radius());
        if (shape.kind == ShapeKind::Circle) {
          center = shape.vertices[2];
          rim = center + Point{-0.7071, 0.7071} * r;
        } else if (shape.kind == ShapeKind::Semicircle) {
          Point a = shape.vertices[0], b = shape.vertices[1];
          center = (a + b) * 0.5;
          rim = center + normalize_or(geom::perp(b - a), {0, 1}) * r;
        } else {  // sector: the radius is the first straight edge
          auto [a, b] = shape.edge(0);
          center = a;
          rim = b;
        }
        if (shape.kind != ShapeKind::Sector)
          add_line(body, t.map(center), t.map(rim), style.stroke, 1.0, "4 3");
        Point mid = (center + rim) * 0.5;
        Point dir = canvas_dir(normalize_or(geom::perp(rim - center), {0, 1}));
        add_text(body, t.map(mid) + dir * 10.0 + Point{0, 4}, style.font_size - 2, value,
                 style.stroke, "middle", "annotation");
        break;
      }
      case geom::AttrKey::Tag::ArcAngle: {
        Point v = shape.vertices[0];
        Point ra = shape.vertices[1] - v;
        double sweep = geom::deg2rad(shape.attributes.at(geom::AttrKey::arc_angle()));
        double ta = std::atan2(ra.y, ra.x);
        std::vector<Point> arc;
        for (int k = 0; k <= 8; ++k) {
          double ang = ta + sweep * k / 8;
          Point w = v + Point{std::cos(ang), std::sin(ang)} * (18.0 / t.scale);
          arc.push_back(t.map(w));
        }
        add_path(body, arc, false, "none", style.stroke, 1.0);
        double mid_ang = ta + sweep / 2;
        Point bis = {std::cos(mid_ang), std::sin(mid_ang)};
        add_text(body, t.map(v) + canvas_dir(bis) * 32.0 + Point{0, 4},
                 style.font_size - 2, value + "\xC2\xB0", style.stroke, "middle",
                 "annotation");
        break;
      }
      case geom::AttrKey::Tag::Height: {
        Point top = shape.vertices[3];
        auto [a, b] = shape.edge(0);
        Point dir = normalize_or(b - a, {1, 0});
        Point foot = a + dir * geom::dot(top - a, dir);
        add_line(body, t.map(top), t.map(foot), style.stroke, 1.0, "4 3");
        Point mid = (top + foot) * 0.5;
        add_text(body, t.map(mid) + Point{10, 4}, style.font_size - 2, value,
                 style.stroke, "start", "annotation");
        break;
      }
      default:
        throw AnnotationMismatch("attribute " + c.key.to_string() +
                                 " cannot be drawn on a plane figure");
    }
  }

  add_question_band(body, lines, style);
  body += "</svg>\n";
  return body;
}

std::string render_axes(const analytic::CoordRange& range, const RenderStyle& style) {
  FitTransform t = fit_transform(range.x_min, range.x_max, range.y_min, range.y_max,
                                 style, 0.0);
  std::string g = "<g class=\"axes\">\n";
  // Unit grid.
  for (int gx = static_cast<int>(std::ceil(range.x_min));
       gx <= static_cast<int>(std::floor(range.x_max)); ++gx)
    add_line(g, {t.x(gx), t.y(range.y_min)}, {t.x(gx), t.y(range.y_max)}, "#dddddd", 1.0);
  for (int gy = static_cast<int>(std::ceil(range.y_min));
       gy <= static_cast<int>(std::floor(range.y_max)); ++gy)
    add_line(g, {t.x(range.x_min), t.y(gy)}, {t.x(range.x_max), t.y(gy)}, "#dddddd", 1.0);

  bool x_axis = range.y_min < 0 && range.y_max > 0;
  bool y_axis = range.x_min < 0 && range.x_max > 0;
  if (x_axis)
    add_line(g, {t.x(range.x_min), t.y(0)}, {t.x(range.x_max), t.y(0)}, "#555555", 1.5);
  if (y_axis)
    add_line(g, {t.x(0), t.y(range.y_min)}, {t.x(0), t.y(range.y_max)}, "#555555", 1.5);

  // Integer tick labels; the origin is labeled once.
  if (x_axis)
    for (int gx = static_cast<int>(std::ceil(range.x_min));
         gx <= static_cast<int>(std::floor(range.x_max)); ++gx) {
      if (gx == 0) continue;
      add_text(g, {t.x(gx), t.y(0) + 12}, 9.0, std::to_string(gx), "#555555", "middle",
               "tick");
    }
  if (y_axis)
    for (int gy = static_cast<int>(std::ceil(range.y_min));
         gy <= static_cast<int>(std::floor(range.y_max)); ++gy) {
      if (gy == 0) continue;
      add_text(g, {t.x(0) - 6, t.y(gy) + 3}, 9.0, std::to_string(gy), "#555555", "end",
               "tick");
    }
  if (x_axis && y_axis)
    add_text(g, {t.x(0) - 6, t.y(0) + 12}, 9.0, "0", "#555555", "end", "tick");
  g += "</g>\n";
  return g;
}

std::string render_analytic(const analytic::Scene& scene, const RenderStyle& style) {
  const auto& range = scene.range;
  FitTransform t = fit_transform(range.x_min, range.x_max, range.y_min, range.y_max,
                                 style, 0.0);
  std::string body = svg_open(style);
  body += render_axes(range, style);

  for (std::size_t i = 0; i < scene.figures.size(); ++i) {
    const auto& fig = scene.figures[i];
    std::string stroke =
        style.monochrome ? style.stroke : kPalette[i % (sizeof(kPalette) / sizeof(char*))];
    body += "<g class=\"figure\">\n";
    switch (fig.kind) {
      case analytic::FigKind::Point:
        add_circle(body, t.map(fig.anchor), 3.5, stroke, stroke, 0);
        break;
      case analytic::FigKind::Segment:
        add_line(body, t.map(fig.anchor),
                 t.map({fig.size_params[0], fig.size_params[1]}), stroke,
                 style.stroke_width);
        break;
      case analytic::FigKind::Line: {
        Point a = fig.anchor, b = {fig.size_params[0], fig.size_params[1]};
        Point d = b - a;
        // Extend across the window: clip the infinite line to the range box.
        double ts[2] = {-1e9, 1e9};
        auto clip = [&](double p, double q) {
          if (std::abs(p) < 1e-12) return q >= 0;
          double r = q / p;
          if (p < 0)
            ts[0] = std::max(ts[0], r);
          else
            ts[1] = std::min(ts[1], r);
          return ts[0] <= ts[1];
        };
        bool visible = clip(-d.x, a.x - range.x_min) && clip(d.x, range.x_max - a.x) &&
                       clip(-d.y, a.y - range.y_min) && clip(d.y, range.y_max - a.y);
        if (visible)
          add_line(body, t.map(a + d * ts[0]), t.map(a + d * ts[1]), stroke,
                   style.stroke_width);
        break;
      }
      case analytic::FigKind::Circle:
        add_circle(body, t.map(fig.anchor), fig.size_params[0] * t.scale, "none", stroke,
                   style.stroke_width);
        break;
      case analytic::FigKind::Ellipse: {
        Point c = t.map(fig.anchor);
        body += "<ellipse cx=\"" + f2(c.x) + "\" cy=\"" + f2(c.y) + "\" rx=\"" +
                f2(fig.size_params[0] * t.scale) + "\" ry=\"" +
                f2(fig.size_params[1] * t.scale) + "\" fill=\"none\" stroke=\"" + stroke +
                "\" stroke-width=\"" + f2(style.stroke_width) + "\"/>\n";
        break;
      }
      case analytic::FigKind::Rectangle:
      case analytic::FigKind::Square:
      case analytic::FigKind::Polygon:
      case analytic::FigKind::Sector: {
        std::vector<Point> pts;
        for (const auto& p : fig.footprint(64)) pts.push_back(t.map(p));
        add_path(body, pts, true, "none", stroke, style.stroke_width);
        break;
      }
    }
    body += "</g>\n";
  }
  body += "</svg>\n";
  return body;
}

std::string render_function(const fn::FunctionSpec& spec,
                            const fn::FunctionFeatures& features,
                            const RenderStyle& style,
                            const std::vector<Condition>& annotations,
                            const std::string& question_text) {
  fn::ExprPtr expr = fn::build_expression(spec);

  // Sampling intervals split at poles and piece breakpoints.
  std::vector<double> bounds = {spec.x_lo};
  std::vector<double> internal = fn::pole_positions(spec);
  internal.insert(internal.end(), spec.cuts.begin(), spec.cuts.end());
  std::sort(internal.begin(), internal.end());
  for (double b : internal)
    if (b > spec.x_lo + 1e-9 && b < spec.x_hi - 1e-9) bounds.push_back(b);
  bounds.push_back(spec.x_hi);

  double width = spec.x_hi - spec.x_lo;
  struct Sample {
    double x, y;
    bool finite;
  };
  std::vector<std::vector<Sample>> runs_per_interval;
  double data_lo = 0.0, data_hi = 0.0;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    double lo = bounds[k], hi = bounds[k + 1];
    double inset = (hi - lo) * 1e-6;
    double a = k == 0 ? lo : lo + inset;
    double b = k + 2 == bounds.size() ? hi : hi - inset;
    int n = std::max(24, static_cast<int>(std::ceil(512.0 * (hi - lo) / width)));
    std::vector<Sample> samples;
    samples.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      double x = a + (b - a) * i / n;
      double y = eval(expr, x);
      bool finite = std::isfinite(y) && std::abs(y) < 1e6;
      samples.push_back({x, y, finite});
      if (finite && std::abs(y) <= 12.0) {
        data_lo = std::min(data_lo, y);
        data_hi = std::max(data_hi, y);
      }
    }
    runs_per_interval.push_back(std::move(samples));
  }

  // Vertical window: data clamped to [-12, 12], padded 10% per side; the pad
  // is the clip allowance for steep runs.
  double span = std::max(data_hi - data_lo, 1.0);
  double clip_lo = data_lo - 0.1 * span;
  double clip_hi = data_hi + 0.1 * span;

  auto lines = question_text.empty() ? std::vector<std::string>{}
                                     : wrap_text(question_text, kBandWrapWidth);
  double band = band_height(lines);
  // The axes fragment computes its own fit; reserve the band by shrinking the
  // style's canvas for everything drawn in plot space.
  RenderStyle plot_style = style;
  plot_style.canvas_px = static_cast<int>(style.canvas_px - band);
  analytic::CoordRange window{spec.x_lo, spec.x_hi, clip_lo, clip_hi};
  FitTransform t = fit_transform(window.x_min, window.x_max, window.y_min, window.y_max,
                                 plot_style, 0.0);

  std::string body = svg_open(style);
  body += render_axes(window, plot_style);

  // Curve polylines: contiguous finite samples inside the clip window.
  for (const auto& samples : runs_per_interval) {
    std::vector<Point> run;
    auto flush = [&]() {
      if (run.size() >= 2)
        add_path(body, run, false, "none", style.stroke, style.stroke_width, "curve");
      run.clear();
    };
    for (const auto& s : samples) {
      if (!s.finite || s.y < clip_lo || s.y > clip_hi) {
        flush();
        continue;
      }
      run.push_back(t.map({s.x, s.y}));
    }
    flush();
  }

  // Zero and extremum x-coordinates, labeled on the x-axis.
  bool x_axis_visible = window.y_min < 0 && window.y_max > 0;
  double axis_y = x_axis_visible ? t.y(0) : t.y(window.y_min);
  for (double z : features.zeros) {
    add_circle(body, {t.x(z), axis_y}, 3.0, style.stroke, style.stroke, 0, "zero");
    add_text(body, {t.x(z), axis_y - 8}, 11.0, util::format_quantity(z), style.stroke,
             "middle", "zero-label");
  }
  for (const auto& e : features.extrema) {
    add_circle(body, t.map({e.x, std::clamp(e.y, clip_lo, clip_hi)}), 3.0, style.stroke,
               style.stroke, 0, "extremum");
    add_text(body, {t.x(e.x), axis_y - 8}, 11.0, util::format_quantity(e.x), style.stroke,
             "middle", "extremum-label");
  }

  // Stated conditions (vision variants) as a text block in the top left.
  double text_y = style.margin_px + 4.0;
  for (const auto& c : annotations) {
    add_text(body, {style.margin_px + 2.0, text_y}, 12.0, c.text, "#000000", "start",
             "condition");
    text_y += kBandLineHeight;
  }

  add_question_band(body, lines, style);
  body += "</svg>\n";
  return body;
}

}  // namespace diagen::render
