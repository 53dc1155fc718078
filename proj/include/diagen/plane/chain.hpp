#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagen/geom/build.hpp"
#include "diagen/plane/formulas.hpp"
#include "diagen/record.hpp"
#include "diagen/util/rng.hpp"

namespace diagen::plane {

/// One deduction: `formula` applied to shape `shape_index`, reading the
/// condition values in `inputs` and producing `output`. For meta steps the
/// produced value is restated as the next shape's initial side (the same
/// segment); the last step produces the question target.
struct ReasoningStep {
  int shape_index = 0;
  const Formula* formula = nullptr;
  std::vector<Condition> inputs;
  Condition output;
  std::string explanation;
};

/// A sampled figure together with the full reasoning path over it. `given`
/// is minimal by construction: every condition is consumed by exactly one
/// step and no step input is derivable from the others.
struct DeductionChain {
  geom::CompositeFigure figure;
  QuestionType question = QuestionType::Perimeter;
  std::vector<ReasoningStep> steps;  // one per shape; the last is the question
  std::vector<Condition> given;      // statement order
  Condition target;
  double answer = 0.0;
};

struct PlaneConfig {
  geom::FigureConfig figure;
  std::map<QuestionType, double> question_weights = {
      {QuestionType::Perimeter, 3.0},  {QuestionType::Area, 3.0},
      {QuestionType::BaseLength, 1.0}, {QuestionType::Angle, 1.0},
      {QuestionType::ArcLength, 1.0},  {QuestionType::ExtendedEdge, 1.0},
  };
  double redundant_probability = 0.5;
};

/// Builds the chain over an already sampled figure. The only random choice is
/// the question (weighted over the last shape's eligible options).
DeductionChain build_chain_for(geom::CompositeFigure figure, util::Rng& rng,
                               const PlaneConfig& cfg);

/// Samples a figure and builds its chain.
DeductionChain build_chain(util::Rng& rng, const PlaneConfig& cfg);

/// Hex digest of a canonical serialization of the figure, conditions, steps
/// and answer; reruns of the same seed reproduce it byte for byte.
std::string chain_digest(const DeductionChain& chain);

}  // namespace diagen::plane
