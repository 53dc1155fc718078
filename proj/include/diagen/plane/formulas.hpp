#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diagen/geom/types.hpp"

namespace diagen::plane {

enum class QuestionType {
  Perimeter,
  Area,
  BaseLength,
  Angle,
  ArcLength,
  ExtendedEdge,
};

inline constexpr int kQuestionTypeCount = 6;

std::string_view question_type_name(QuestionType t);
std::optional<QuestionType> question_type_from_name(std::string_view name);
const std::vector<QuestionType>& all_question_types();

/// Context handed to a formula's explanation builder.
struct ExplainCtx {
  const geom::ShapeInstance& shape;   // the shape the formula lives on
  const geom::ShapeInstance* next;    // the shape grown from it (meta steps only)
  std::span<const double> inputs;     // values in Formula::inputs order
  geom::AttrKey output_key;
  double output;
};

/// One registered per-shape identity. Meta formulas derive the length of one
/// of the shape's edges (feeding the next shape's initial side); question
/// formulas derive a final target. For every formula that participates in
/// multi-shape chains, inputs[0] is the shape's own initial side — the value
/// inherited through the chain; the remaining inputs are the extra conditions
/// (C_m or C_q) the chain must state. Angle formulas consume only an angle
/// and are restricted to single-shape figures.
struct Formula {
  std::string_view id;
  std::vector<geom::AttrKey> inputs;
  geom::AttrKey output;
  double (*eval)(std::span<const double>);
  std::string (*explain)(const ExplainCtx&);
};

/// Formula deriving edge `edge` of a shape of this kind from its initial
/// side, or nullptr when that edge cannot continue a chain.
const Formula* meta_formula(geom::ShapeKind kind, int edge);

struct QuestionOption {
  QuestionType type;
  const Formula* formula;
  bool root_only;  // single-shape figures only (angle questions)
};

/// Eligible (question type, formula) pairs for a final shape of this kind.
const std::vector<QuestionOption>& question_options(geom::ShapeKind kind);

/// Attribute keys that may be stated as redundant conditions of this kind
/// (true facts never consumed by any reasoning step).
const std::vector<geom::AttrKey>& redundant_candidates(geom::ShapeKind kind);

/// Three-letter angle name "ABC" for the interior angle at vertex i.
std::string angle_name(const geom::ShapeInstance& shape, int i);

}  // namespace diagen::plane
