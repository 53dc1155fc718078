#include "diagen/record.hpp"

namespace diagen {

std::string_view role_name(Condition::Role role) {
  switch (role) {
    case Condition::Role::Initial:
      return "initial";
    case Condition::Role::Meta:
      return "meta";
    case Condition::Role::Question:
      return "question";
    case Condition::Role::Redundant:
      return "redundant";
    case Condition::Role::Derived:
      return "derived";
  }
  return "?";
}

std::optional<Condition::Role> role_from_name(std::string_view name) {
  for (auto r : {Condition::Role::Initial, Condition::Role::Meta, Condition::Role::Question,
                 Condition::Role::Redundant, Condition::Role::Derived})
    if (role_name(r) == name) return r;
  return std::nullopt;
}

std::string_view version_name(VersionTag v) {
  switch (v) {
    case VersionTag::TextDominant:
      return "text_dominant";
    case VersionTag::TextLite:
      return "text_lite";
    case VersionTag::VisionDominant:
      return "vision_dominant";
    case VersionTag::VisionOnly:
      return "vision_only";
  }
  return "?";
}

std::optional<VersionTag> version_from_name(std::string_view name) {
  for (auto v : all_versions())
    if (version_name(v) == name) return v;
  return std::nullopt;
}

const std::vector<VersionTag>& all_versions() {
  static const std::vector<VersionTag> tags = {
      VersionTag::TextDominant, VersionTag::TextLite, VersionTag::VisionDominant,
      VersionTag::VisionOnly};
  return tags;
}

std::string_view subject_name(Subject s) {
  switch (s) {
    case Subject::PlaneGeometry:
      return "plane_geometry";
    case Subject::AnalyticGeometry:
      return "analytic_geometry";
    case Subject::Function:
      return "function";
  }
  return "?";
}

std::optional<Subject> subject_from_name(std::string_view name) {
  for (auto s : {Subject::PlaneGeometry, Subject::AnalyticGeometry, Subject::Function})
    if (subject_name(s) == name) return s;
  return std::nullopt;
}

ProblemRecord emit_record_version(const ProblemCore& core, Subject subject,
                                  util::Rng& rng, VersionTag version) {
  ProblemRecord rec;
  rec.subject = subject;
  rec.version = version;
  rec.choices = core.choices;
  rec.answer = core.answer_text;
  rec.rationale = core.rationale;
  rec.numeric_answer = core.numeric_answer;
  rec.chain_digest = core.digest;

  switch (version) {
    case VersionTag::TextDominant:
      rec.text_conditions = core.conditions;
      break;
    case VersionTag::TextLite:
      for (const auto& c : core.conditions)
        (rng.bernoulli(0.5) ? rec.text_conditions : rec.diagram_annotations).push_back(c);
      break;
    case VersionTag::VisionDominant:
    case VersionTag::VisionOnly:
      rec.diagram_annotations = core.conditions;
      break;
  }

  if (version == VersionTag::VisionOnly) {
    rec.render_question = true;
  } else {
    std::string text;
    for (const auto& c : rec.text_conditions) {
      text += c.text;
      text += " ";
    }
    text += core.question_sentence;
    rec.question_text = std::move(text);
  }
  return rec;
}

void check_version_record(const ProblemCore& core, const ProblemRecord& rec,
                          VerificationReport& rep) {
  const std::string tag(version_name(rec.version));
  if (rec.numeric_answer != core.numeric_answer || rec.answer != core.answer_text ||
      rec.chain_digest != core.digest || rec.choices != core.choices ||
      rec.rationale != core.rationale)
    rep.fail(tag + ": shared fields diverge from the base problem");

  // text_conditions and diagram_annotations must interleave back into the
  // base statement order: a disjoint, exhaustive split.
  std::size_t ti = 0, ai = 0;
  bool split_ok = true;
  for (const auto& c : core.conditions) {
    if (ti < rec.text_conditions.size() && rec.text_conditions[ti] == c)
      ++ti;
    else if (ai < rec.diagram_annotations.size() && rec.diagram_annotations[ai] == c)
      ++ai;
    else
      split_ok = false;
  }
  split_ok = split_ok && ti == rec.text_conditions.size() &&
             ai == rec.diagram_annotations.size();
  if (!split_ok) rep.fail(tag + ": conditions do not partition the base set");

  switch (rec.version) {
    case VersionTag::TextDominant:
      if (!rec.diagram_annotations.empty()) rep.fail(tag + ": unexpected annotations");
      break;
    case VersionTag::TextLite:
      break;
    case VersionTag::VisionDominant:
    case VersionTag::VisionOnly:
      if (!rec.text_conditions.empty()) rep.fail(tag + ": unexpected text conditions");
      break;
  }
  if (rec.version == VersionTag::VisionOnly) {
    if (!rec.render_question || !rec.question_text.empty())
      rep.fail(tag + ": question must live in the diagram");
  } else {
    if (rec.render_question) rep.fail(tag + ": unexpected render_question");
    if (rec.question_text.size() < core.question_sentence.size() ||
        rec.question_text.compare(
            rec.question_text.size() - core.question_sentence.size(),
            core.question_sentence.size(), core.question_sentence) != 0)
      rep.fail(tag + ": question text does not end with the question");
  }
}

}  // namespace diagen
