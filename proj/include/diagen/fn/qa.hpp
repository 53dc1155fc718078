#pragma once

#include <string>
#include <vector>

#include "diagen/caption/templates.hpp"
#include "diagen/fn/families.hpp"
#include "diagen/fn/features.hpp"
#include "diagen/record.hpp"
#include "diagen/util/rng.hpp"

namespace diagen::fn {

enum class FnQuestion {
  Derivative,
  Extrema,
};

std::string_view fn_question_name(FnQuestion q);

/// A function problem before version splitting. The two stated conditions
/// are the expression (Initial) and the display domain (Question), carried
/// with shape_index -1 so the shared record machinery applies unchanged.
struct FunctionProblem {
  FunctionSpec spec;
  FunctionFeatures features;
  FnQuestion question = FnQuestion::Derivative;
  std::vector<Condition> conditions;
  std::string question_sentence;
  std::vector<std::string> rationale;
  std::vector<std::string> choices;  // empty unless multiple choice
  int answer_index = -1;
  std::string answer_text;
  double numeric_answer = 0.0;  // slope at the probe / key extremum value
  double probe_x = 0.0;         // derivative questions: where the slope is read
  std::string digest;
};

/// Samples a function, scans its features, and builds a derivative or
/// extrema problem with a forward rationale; multiple choice with
/// probability `mc_fraction`. Extrema questions fall back to derivative
/// questions when neither interior extrema nor a sound monotonicity
/// argument is available (poles or discontinuities in the way).
FunctionProblem synthesize_function_problem(util::Rng& rng,
                                            const caption::TemplateSet& templates,
                                            double mc_fraction);

ProblemRecord emit_version(const FunctionProblem& base, util::Rng& rng, VersionTag version);
std::vector<ProblemRecord> emit_versions(const FunctionProblem& base, util::Rng& rng);

/// Digest of the problem's full derivation (family, parameters, domain,
/// question, probe, answer).
std::string function_digest(const FunctionProblem& base);

/// Independent re-check: features re-scanned, the derivative answer compared
/// against central finite differences at the probe, extremum values and sign
/// changes re-confirmed, answer/rationale/choice coherence, and every emitted
/// version checked against the base.
VerificationReport verify_function_problem(const FunctionProblem& base,
                                           const std::vector<ProblemRecord>& records);

}  // namespace diagen::fn
