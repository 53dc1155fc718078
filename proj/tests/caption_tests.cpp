#include <algorithm>
#include <string>

#include "diagen/analytic/scene.hpp"
#include "diagen/caption/compose.hpp"
#include "diagen/errors.hpp"
#include "diagen/fn/families.hpp"
#include "diagen/fn/features.hpp"
#include "diagen/geom/build.hpp"
#include "diagen/geom/catalog.hpp"
#include "diagen/util/format.hpp"
#include "diagen/util/text.hpp"
#include "doctest.h"

using namespace diagen;
using caption::Caption;

static bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST_CASE("plane captions state every shape and at least one value") {
  const auto& templates = caption::default_templates();
  util::Rng rng(808);
  geom::FigureConfig cfg;
  for (int i = 0; i < 300; ++i) {
    geom::CompositeFigure fig = geom::sample_figure(rng, cfg);
    Caption cap = caption::compose_plane_caption(rng, templates, fig);
    CHECK(!cap.text.empty());
    CHECK(!cap.numerals.empty());
    CHECK(cap.numerals == util::extract_numerals(cap.text));
    // Each shape is mentioned by kind noun at least once.
    for (const auto& shape : fig.shapes)
      CHECK(contains(cap.text, std::string(geom::kind_name(shape.kind))));
  }
}

TEST_CASE("analytic captions mention every figure and relation") {
  const auto& templates = caption::default_templates();
  util::Rng rng(909);
  analytic::AnalyticConfig cfg;
  for (int i = 0; i < 200; ++i) {
    analytic::Scene scene = analytic::sample_scene(rng, cfg);
    Caption cap = caption::compose_analytic_caption(rng, templates, scene);
    CHECK(!cap.text.empty());
    CHECK(cap.numerals == util::extract_numerals(cap.text));
    for (const auto& fig : scene.figures) {
      // The anchor's display coordinates appear somewhere in the text.
      auto slots = analytic::figure_slots(fig);
      for (const auto& [slot, value] : slots)
        if (slot != "ngon") CHECK(contains(cap.text, value));
    }
  }
}

TEST_CASE("function caption covers the worked cubic example") {
  fn::FunctionSpec spec;
  spec.family = fn::Family::Polynomial;
  spec.params = {-3, -2, -2, -2};
  spec.x_lo = -3;
  spec.x_hi = 4;
  spec.expression_text = "y = " + fn::poly_text(spec.params);
  fn::FunctionFeatures features = fn::scan_features(spec);
  REQUIRE(features.zeros.size() == 1);

  const auto& templates = caption::default_templates();
  util::Rng rng(11);
  Caption cap = caption::compose_function_caption(rng, templates, spec, features);
  CHECK(contains(cap.text, spec.expression_text));
  CHECK(contains(cap.text, "-0.83"));
  CHECK(contains(cap.text, "-3"));
  CHECK(contains(cap.text, "4"));
  // The derivative -9x^2 - 4x - 2 has no real root: strictly decreasing,
  // so the caption must not report interior extrema.
  CHECK(features.extrema.empty());
  CHECK(cap.numerals == util::extract_numerals(cap.text));
}

TEST_CASE("function caption covers sine zeros and extrema") {
  fn::FunctionSpec spec;
  spec.family = fn::Family::Sine;
  spec.params = {1, 1, 0};
  spec.x_lo = -geom::kPi;
  spec.x_hi = geom::kPi;
  spec.expression_text = "y = sin(x)";
  fn::FunctionFeatures features = fn::scan_features(spec);

  const auto& templates = caption::default_templates();
  util::Rng rng(12);
  Caption cap = caption::compose_function_caption(rng, templates, spec, features);
  CHECK(contains(cap.text, "-3.14"));
  CHECK(contains(cap.text, "3.14"));
  CHECK(contains(cap.text, "1.57"));
  CHECK(contains(cap.text, "-1.57"));
}

TEST_CASE("absolute-value caption reports the kink minimum") {
  fn::FunctionSpec spec;
  spec.family = fn::Family::Absolute;
  spec.params = {2, 4};
  spec.x_lo = -5;
  spec.x_hi = 5;
  spec.expression_text = "y = |2x + 4|";
  fn::FunctionFeatures features = fn::scan_features(spec);
  REQUIRE(!features.extrema.empty());

  const auto& templates = caption::default_templates();
  util::Rng rng(13);
  Caption cap = caption::compose_function_caption(rng, templates, spec, features);
  CHECK(contains(cap.text, "(-2, 0)"));
  CHECK(contains(cap.text, "minimum"));
}

TEST_CASE("tangent caption lists asymptotes and skips the monotone claim") {
  util::Rng sampler(21);
  fn::FunctionSpec spec = fn::sample_function_of(fn::Family::Tangent, sampler);
  fn::FunctionFeatures features = fn::scan_features(spec);
  REQUIRE(!features.asymptotes.empty());

  const auto& templates = caption::default_templates();
  util::Rng rng(14);
  Caption cap = caption::compose_function_caption(rng, templates, spec, features);
  for (double x : features.asymptotes)
    CHECK(contains(cap.text, util::format_quantity(x)));
  if (features.extrema.empty()) CHECK(!contains(cap.text, "monoton"));
}

TEST_CASE("random function captions keep numeral fidelity") {
  const auto& templates = caption::default_templates();
  util::Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    fn::FunctionSpec spec = fn::sample_function(rng);
    fn::FunctionFeatures features = fn::scan_features(spec);
    Caption cap = caption::compose_function_caption(rng, templates, spec, features);
    CHECK(!cap.text.empty());
    CHECK(cap.numerals == util::extract_numerals(cap.text));
  }
}

namespace {

/// Scripted refinement backend for the guard tests.
class ScriptedClient final : public caption::RefinementClient {
 public:
  explicit ScriptedClient(std::string reply, bool fail = false)
      : reply_(std::move(reply)), fail_(fail) {}
  std::string refine(const std::string&) override {
    if (fail_) throw ClientUnavailable("backend offline");
    return reply_;
  }

 private:
  std::string reply_;
  bool fail_;
};

}  // namespace

TEST_CASE("refinement accepts rewrites that keep the numerals") {
  Caption cap;
  cap.text = "Side AB measures 5 units. The angle opens to 36.5 degrees.";
  cap.numerals = util::extract_numerals(cap.text);

  SUBCASE("identity backend") {
    caption::IdentityClient client;
    auto result = caption::refine_caption(cap, client);
    CHECK(result.refined);
    CHECK(result.text == cap.text);
    CHECK(result.warning.empty());
  }
  SUBCASE("reordered numerals are still a valid multiset") {
    ScriptedClient client("At 36.5 degrees the angle opens; side AB spans 5 units.");
    auto result = caption::refine_caption(cap, client);
    CHECK(result.refined);
    CHECK(result.text != cap.text);
  }
  SUBCASE("a dropped numeral falls back to the original") {
    ScriptedClient client("Side AB measures 5 units and an angle appears.");
    auto result = caption::refine_caption(cap, client);
    CHECK(!result.refined);
    CHECK(result.text == cap.text);
    CHECK(!result.warning.empty());
  }
  SUBCASE("an altered numeral falls back to the original") {
    ScriptedClient client("Side AB measures 6 units. The angle opens to 36.5 degrees.");
    auto result = caption::refine_caption(cap, client);
    CHECK(!result.refined);
    CHECK(result.text == cap.text);
  }
  SUBCASE("transport failure falls back with a warning") {
    ScriptedClient client("", true);
    auto result = caption::refine_caption(cap, client);
    CHECK(!result.refined);
    CHECK(result.text == cap.text);
    CHECK(!result.warning.empty());
  }
}
