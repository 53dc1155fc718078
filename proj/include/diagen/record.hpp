#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagen/geom/types.hpp"
#include "diagen/util/rng.hpp"

namespace diagen {

/// One stated fact about the scene. For plane problems the key addresses an
/// attribute of figure shape `shape_index`; function records reuse the
/// machinery with shape_index -1 and the Expression/Domain pseudo-keys.
struct Condition {
  enum class Role {
    Initial,    // O1: the first shape's anchor attribute
    Meta,       // C_m: consumed by a meta reasoning step
    Question,   // C_q: consumed only by the final question step
    Redundant,  // stated but never consumed
    Derived,    // intermediate step output, never part of `given`
  };

  int shape_index = 0;
  geom::AttrKey key;
  double value = 0.0;
  Role role = Role::Initial;
  std::string text;  // display form, e.g. "the radius of circle E is 3"

  friend bool operator==(const Condition& a, const Condition& b) {
    return a.shape_index == b.shape_index && a.key == b.key && a.value == b.value &&
           a.role == b.role;
  }
};

std::string_view role_name(Condition::Role role);
std::optional<Condition::Role> role_from_name(std::string_view name);

enum class VersionTag {
  TextDominant,
  TextLite,
  VisionDominant,
  VisionOnly,
};

inline constexpr int kVersionCount = 4;

std::string_view version_name(VersionTag v);       // "text_dominant", ...
std::optional<VersionTag> version_from_name(std::string_view name);
const std::vector<VersionTag>& all_versions();

enum class Subject {
  PlaneGeometry,
  AnalyticGeometry,
  Function,
};

std::string_view subject_name(Subject s);
std::optional<Subject> subject_from_name(std::string_view name);

/// One dataset row of the instruct set.
struct ProblemRecord {
  std::string id;
  Subject subject = Subject::PlaneGeometry;
  VersionTag version = VersionTag::TextDominant;
  std::string question_text;                  // empty for vision-only
  std::vector<Condition> text_conditions;     // conditions stated in the text
  std::vector<Condition> diagram_annotations; // conditions rendered in the image
  std::vector<std::string> choices;           // empty unless multiple choice
  std::string answer;                         // value text, or the choice letter
  std::vector<std::string> rationale;         // forward-order explanations
  double numeric_answer = 0.0;
  bool render_question = false;               // vision-only: question lives in the SVG
  std::string svg_path;
  std::string chain_digest;
  std::uint64_t seed = 0;
};

/// One dataset row of the caption set.
struct CaptionRecord {
  std::string id;
  Subject subject = Subject::PlaneGeometry;
  std::string caption;
  std::string svg_path;
  std::uint64_t seed = 0;
  bool refined = false;
};

/// Outcome of an independent re-check of a generated problem.
struct VerificationReport {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(std::string msg) {
    ok = false;
    issues.push_back(std::move(msg));
  }
};

/// The version-independent part of a problem, referenced from the subject
/// engine's base struct. Every emitted version shares these fields verbatim.
struct ProblemCore {
  const std::vector<Condition>& conditions;
  const std::string& question_sentence;
  const std::vector<std::string>& choices;
  const std::string& answer_text;
  const std::vector<std::string>& rationale;
  double numeric_answer;
  const std::string& digest;
};

/// Splits the conditions between question text and diagram annotations per
/// the version tag and assembles the question text (empty for vision-only,
/// which renders the question instead).
ProblemRecord emit_record_version(const ProblemCore& core, Subject subject,
                                  util::Rng& rng, VersionTag version);

/// Checks one emitted version against its core: shared fields equal, the two
/// condition lists interleave back into the base order, and the version's
/// placement rules hold.
void check_version_record(const ProblemCore& core, const ProblemRecord& rec,
                          VerificationReport& rep);

}  // namespace diagen
