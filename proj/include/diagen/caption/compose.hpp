#pragma once

#include <string>
#include <vector>

#include "diagen/analytic/scene.hpp"
#include "diagen/caption/templates.hpp"
#include "diagen/fn/features.hpp"
#include "diagen/geom/build.hpp"

namespace diagen::caption {

/// A composed caption and the numerals it states. Any rewrite of the text
/// must preserve the numerals as a multiset.
struct Caption {
  std::string text;
  std::vector<std::string> numerals;
};

/// Figure description: first shape's wording, a conjunction per attached
/// shape, then a random half of the statable attributes (at least one).
Caption compose_plane_caption(util::Rng& rng, const TemplateSet& templates,
                              const geom::CompositeFigure& fig);

/// One sentence per figure plus one relation sentence per consecutive pair.
Caption compose_analytic_caption(util::Rng& rng, const TemplateSet& templates,
                                 const analytic::Scene& scene);

/// Expression, domain, zeros (or their absence), extrema (or monotonicity),
/// and any vertical asymptotes.
Caption compose_function_caption(util::Rng& rng, const TemplateSet& templates,
                                 const fn::FunctionSpec& spec,
                                 const fn::FunctionFeatures& features);

/// External rewriting backend for captions.
class RefinementClient {
 public:
  virtual ~RefinementClient() = default;
  /// Returns rewritten text; throws ClientUnavailable on transport failure.
  virtual std::string refine(const std::string& caption) = 0;
};

/// Default no-op backend.
class IdentityClient final : public RefinementClient {
 public:
  std::string refine(const std::string& caption) override { return caption; }
};

struct RefineResult {
  std::string text;
  bool refined = false;
  std::string warning;  // set when falling back to the original text
};

/// Runs the caption through `client`. The rewrite is accepted only when it
/// preserves the caption's numeral multiset; otherwise (or when the client
/// fails) the original text is kept and a warning is reported.
RefineResult refine_caption(const Caption& caption, RefinementClient& client);

}  // namespace diagen::caption
