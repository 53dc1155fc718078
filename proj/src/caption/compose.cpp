#include "diagen/caption/compose.hpp"

#include <algorithm>

#include "diagen/errors.hpp"
#include "diagen/geom/catalog.hpp"
#include "diagen/plane/problem.hpp"
#include "diagen/util/format.hpp"
#include "diagen/util/text.hpp"

namespace diagen::caption {

namespace {

using geom::AttrKey;
using geom::ShapeInstance;
using geom::ShapeKind;

/// Attribute keys a caption may state for a shape. Values are read straight
/// off the shape, so an over-determined choice stays consistent.
std::vector<AttrKey> statable_attributes(ShapeKind kind) {
  using K = AttrKey;
  switch (kind) {
    case ShapeKind::Square:
    case ShapeKind::EquilateralTriangle:
      return {K::side(0)};
    case ShapeKind::Rectangle:
      return {K::side(0), K::side(1)};
    case ShapeKind::IsoscelesTriangle:
      return {K::side(0), K::angle(0)};
    case ShapeKind::RightTriangle:
      return {K::side(0), K::side(2), K::angle(1)};
    case ShapeKind::Sector:
      return {K::radius(), K::arc_angle()};
    case ShapeKind::Circle:
    case ShapeKind::Semicircle:
      return {K::radius()};
    case ShapeKind::Parallelogram:
      return {K::side(0), K::side(1), K::angle(0)};
    case ShapeKind::Trapezoid:
      return {K::side(0), K::side(2), K::height(), K::angle(0)};
  }
  return {};
}

void append_sentence(std::string& text, const std::string& sentence) {
  if (!text.empty()) text += " ";
  text += sentence;
}

/// Description sentence plus a random non-empty subset of the statable
/// attributes, stated through the shared condition wording.
void describe_shape(std::string& text, util::Rng& rng, const TemplateSet& templates,
                    const geom::CompositeFigure& fig, std::size_t index) {
  const ShapeInstance& shape = fig.shapes[index];
  if (index == 0) {
    SlotMap slots;
    slots["shape"] = geom::display_name(shape);
    slots["letters"] = shape.name();
    if (shape.kind == ShapeKind::Circle) slots["center"] = shape.labels[2];
    std::string section = "shape_desc/" + std::string(geom::kind_name(shape.kind));
    append_sentence(text, instantiate(templates.pick(rng, section), slots));
  } else {
    const ShapeInstance& prev = fig.shapes[index - 1];
    SlotMap slots;
    slots["edge"] = prev.edge_name(*shape.parent_edge);
    slots["prev"] = geom::display_name(prev);
    slots["shape"] = geom::display_name(shape);
    bool tangent = shape.kind == ShapeKind::Circle;
    append_sentence(
        text, instantiate(templates.pick(rng, tangent ? "conjunction_tangent" : "conjunction"),
                          slots));
  }

  std::vector<AttrKey> pool = statable_attributes(shape.kind);
  std::vector<AttrKey> chosen;
  for (AttrKey key : pool)
    if (rng.bernoulli(0.5)) chosen.push_back(key);
  if (chosen.empty() && !pool.empty())
    chosen.push_back(pool[rng.uniform_int(0, static_cast<int>(pool.size()) - 1)]);
  for (AttrKey key : chosen) {
    Condition c;
    c.shape_index = static_cast<int>(index);
    c.key = key;
    c.value = shape.attributes.at(key);
    c.role = Condition::Role::Initial;
    append_sentence(text, plane::condition_sentence(rng, templates, shape, c));
  }
}

}  // namespace

Caption compose_plane_caption(util::Rng& rng, const TemplateSet& templates,
                              const geom::CompositeFigure& fig) {
  Caption caption;
  for (std::size_t i = 0; i < fig.shapes.size(); ++i)
    describe_shape(caption.text, rng, templates, fig, i);
  caption.numerals = util::extract_numerals(caption.text);
  return caption;
}

Caption compose_analytic_caption(util::Rng& rng, const TemplateSet& templates,
                                 const analytic::Scene& scene) {
  Caption caption;
  for (const analytic::SceneFigure& fig : scene.figures)
    append_sentence(caption.text,
                    instantiate(templates.pick(rng, analytic::figure_section(fig)),
                                analytic::figure_slots(fig)));
  for (std::size_t i = 0; i + 1 < scene.figures.size(); ++i) {
    analytic::Relation rel = analytic::relation_of(scene.figures[i], scene.figures[i + 1]);
    SlotMap slots;
    slots["a"] = analytic::figure_phrase(scene, i);
    slots["b"] = analytic::figure_phrase(scene, i + 1);
    std::string section = "analytic_rel/" + std::string(analytic::relation_name(rel));
    append_sentence(caption.text, instantiate(templates.pick(rng, section), slots));
  }
  caption.numerals = util::extract_numerals(caption.text);
  return caption;
}

Caption compose_function_caption(util::Rng& rng, const TemplateSet& templates,
                                 const fn::FunctionSpec& spec,
                                 const fn::FunctionFeatures& features) {
  using util::format_quantity;
  Caption caption;
  append_sentence(caption.text, instantiate(templates.pick(rng, "function/expression"),
                                            {{"expr", spec.expression_text}}));
  append_sentence(caption.text,
                  instantiate(templates.pick(rng, "function/domain"),
                              {{"lo", format_quantity(spec.x_lo)},
                               {"hi", format_quantity(spec.x_hi)}}));
  if (features.zeros.empty()) {
    append_sentence(caption.text, templates.pick(rng, "function/no_zeros"));
  } else {
    std::vector<std::string> zs;
    for (double z : features.zeros) zs.push_back(format_quantity(z));
    append_sentence(caption.text, instantiate(templates.pick(rng, "function/zeros"),
                                              {{"zeros", util::join_with_and(zs)}}));
  }
  if (!features.extrema.empty()) {
    for (const fn::Extremum& e : features.extrema) {
      std::string section =
          e.is_max ? "function/extremum_max" : "function/extremum_min";
      append_sentence(caption.text,
                      instantiate(templates.pick(rng, section),
                                  {{"x", format_quantity(e.x)}, {"y", format_quantity(e.y)}}));
    }
  } else if (features.asymptotes.empty()) {
    // "Monotonic across the range" is only true without interior poles.
    append_sentence(caption.text, templates.pick(rng, "function/no_extrema"));
  }
  if (!features.asymptotes.empty()) {
    std::vector<std::string> xs;
    for (double x : features.asymptotes) xs.push_back(format_quantity(x));
    append_sentence(caption.text, instantiate(templates.pick(rng, "function/asymptote"),
                                              {{"xs", util::join_with_and(xs)}}));
  }
  caption.numerals = util::extract_numerals(caption.text);
  return caption;
}

RefineResult refine_caption(const Caption& caption, RefinementClient& client) {
  RefineResult result;
  result.text = caption.text;
  std::string rewritten;
  try {
    rewritten = client.refine(caption.text);
  } catch (const Error& e) {
    result.warning = std::string("refinement unavailable: ") + e.what();
    return result;
  }
  std::vector<std::string> before = caption.numerals;
  std::vector<std::string> after = util::extract_numerals(rewritten);
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  if (before != after) {
    result.warning = "refinement dropped or altered numerals; original kept";
    return result;
  }
  result.text = rewritten;
  result.refined = true;
  return result;
}

}  // namespace diagen::caption
