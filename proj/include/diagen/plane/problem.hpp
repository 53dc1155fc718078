#pragma once

#include "diagen/caption/templates.hpp"
#include "diagen/plane/chain.hpp"

namespace diagen::plane {

/// A synthesized problem before version placement: the chain plus the stated
/// conditions (given + redundant) with their display sentences, the question
/// wording, the rationale, and optional multiple-choice options.
struct BaseProblem {
  DeductionChain chain;
  std::vector<Condition> conditions;  // statement order; never Derived
  std::string question_sentence;      // includes the options clause for MC
  std::vector<std::string> rationale;
  std::vector<std::string> choices;  // empty for open-ended
  int answer_index = -1;             // position of the true value in choices
  std::string answer_text;           // formatted value, or the option letter
  double numeric_answer = 0.0;
  std::string digest;
};

/// The true value plus three distinct perturbed distractors, shuffled.
/// Throws DegenerateDistractors when three distinct display values cannot be
/// produced.
struct MultipleChoice {
  std::vector<std::string> options;
  int answer_index = 0;
};
MultipleChoice make_multiple_choice(util::Rng& rng, double answer);

/// Display sentence for one stated condition.
std::string condition_sentence(util::Rng& rng, const caption::TemplateSet& templates,
                               const geom::ShapeInstance& shape, const Condition& c);

/// Builds a full problem: chain, redundant conditions, sentences; converts to
/// multiple choice with probability `mc_fraction`.
BaseProblem synthesize_problem(util::Rng& rng, const PlaneConfig& cfg,
                               const caption::TemplateSet& templates,
                               double mc_fraction);

/// One placement version of the base problem. Conditions are split between
/// question text and diagram annotations according to the version tag; all
/// versions share conditions, rationale, options and answer.
ProblemRecord emit_version(const BaseProblem& base, util::Rng& rng, VersionTag version);

/// All four versions in all_versions() order.
std::vector<ProblemRecord> emit_versions(const BaseProblem& base, util::Rng& rng);

/// Re-derives the answer from the stated conditions (checking that dropping
/// any single non-redundant condition breaks the derivation), re-checks the
/// digest and rationale, and audits every emitted record's partition.
VerificationReport verify_problem(const BaseProblem& base,
                                  const std::vector<ProblemRecord>& records);

}  // namespace diagen::plane
