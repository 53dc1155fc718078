#include "diagen/plane/problem.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "diagen/errors.hpp"
#include "diagen/util/format.hpp"
#include "diagen/util/text.hpp"

namespace diagen::plane {

namespace {

using geom::AttrKey;
using util::format_quantity;

std::string option_letter(int index) { return std::string(1, static_cast<char>('A' + index)); }

/// Values stated or derived so far, addressed by (shape, attribute).
using KnownMap = std::map<std::pair<int, AttrKey>, double>;

/// Runs the chain forward from `known`; nullopt when a step input is absent.
std::optional<double> forward_eval(const DeductionChain& chain, KnownMap known) {
  double answer = 0.0;
  for (const auto& step : chain.steps) {
    std::vector<double> vals;
    for (const auto& input : step.inputs) {
      auto it = known.find({input.shape_index, input.key});
      if (it == known.end()) return std::nullopt;
      vals.push_back(it->second);
    }
    answer = step.formula->eval(vals);
    known[{step.output.shape_index, step.output.key}] = answer;
  }
  return answer;
}

KnownMap stated_values(const std::vector<Condition>& conditions, bool include_redundant) {
  KnownMap known;
  for (const auto& c : conditions)
    if (include_redundant || c.role != Condition::Role::Redundant)
      known[{c.shape_index, c.key}] = c.value;
  return known;
}

bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

std::string condition_sentence(util::Rng& rng, const caption::TemplateSet& templates,
                               const geom::ShapeInstance& shape, const Condition& c) {
  caption::SlotMap slots;
  slots["shape"] = geom::display_name(shape);
  slots["value"] = format_quantity(c.value);
  std::string section;
  switch (c.key.tag) {
    case AttrKey::Tag::Side:
      section = "attribute/side";
      slots["edge"] = shape.edge_name(c.key.index);
      break;
    case AttrKey::Tag::Angle:
      section = "attribute/angle";
      slots["angle"] = angle_name(shape, c.key.index);
      break;
    case AttrKey::Tag::Radius:
      section = "attribute/radius";
      break;
    case AttrKey::Tag::ArcAngle:
      section = "attribute/arc_angle";
      break;
    case AttrKey::Tag::Height:
      section = "attribute/height";
      break;
    default:
      throw Error("condition " + c.key.to_string() + " has no sentence form");
  }
  return caption::instantiate(templates.pick(rng, section), slots);
}

MultipleChoice make_multiple_choice(util::Rng& rng, double answer) {
  const std::string truth = format_quantity(answer);
  std::vector<std::string> distractors;
  auto offer = [&](double v) {
    if (distractors.size() >= 3 || v <= 0) return;
    std::string s = format_quantity(v);
    if (s == truth) return;
    if (std::find(distractors.begin(), distractors.end(), s) != distractors.end()) return;
    distractors.push_back(std::move(s));
  };
  for (double m : {0.5, 0.75, 1.25, 1.5, 2.0}) offer(answer * m);
  for (double d : {1.0, 2.0, 3.0}) {
    offer(answer + d);
    offer(answer - d);
  }
  if (distractors.size() < 3)
    throw DegenerateDistractors("cannot build three distinct options around " + truth);

  std::vector<int> order = {0, 1, 2, 3};  // 0 = the true value
  rng.shuffle(order);
  MultipleChoice mc;
  mc.options.resize(4);
  for (int i = 0; i < 4; ++i) {
    mc.options[i] = order[i] == 0 ? truth : distractors[order[i] - 1];
    if (order[i] == 0) mc.answer_index = i;
  }
  return mc;
}

BaseProblem synthesize_problem(util::Rng& rng, const PlaneConfig& cfg,
                               const caption::TemplateSet& templates,
                               double mc_fraction) {
  BaseProblem base;
  base.chain = build_chain(rng, cfg);
  const DeductionChain& chain = base.chain;
  const auto& shapes = chain.figure.shapes;

  base.conditions = chain.given;
  std::set<std::pair<int, AttrKey>> used;
  for (const auto& step : chain.steps) {
    for (const auto& input : step.inputs) used.insert({input.shape_index, input.key});
    used.insert({step.output.shape_index, step.output.key});
  }
  for (int i = 0; i < static_cast<int>(shapes.size()); ++i)
    for (AttrKey key : redundant_candidates(shapes[i].kind))
      if (!used.count({i, key}) && rng.bernoulli(cfg.redundant_probability))
        base.conditions.push_back({i, key, shapes[i].attributes.at(key),
                                   Condition::Role::Redundant, {}});

  for (auto& c : base.conditions)
    c.text = condition_sentence(rng, templates, shapes[c.shape_index], c);

  const auto& last = shapes.back();
  caption::SlotMap slots;
  slots["shape"] = geom::display_name(last);
  switch (chain.question) {
    case QuestionType::BaseLength:
    case QuestionType::ExtendedEdge:
      slots["edge"] = last.edge_name(chain.target.key.index);
      break;
    case QuestionType::Angle:
      slots["angle"] = angle_name(last, chain.target.key.index);
      break;
    default:
      break;
  }
  std::string section = "question/" + std::string(question_type_name(chain.question));
  std::string sentence = caption::instantiate(templates.pick(rng, section), slots);

  base.numeric_answer = chain.answer;
  if (rng.bernoulli(mc_fraction)) {
    MultipleChoice mc = make_multiple_choice(rng, chain.answer);
    base.choices = std::move(mc.options);
    base.answer_index = mc.answer_index;
    base.answer_text = option_letter(mc.answer_index);
    sentence += " Choose from:";
    for (int i = 0; i < static_cast<int>(base.choices.size()); ++i)
      sentence += " (" + option_letter(i) + ") " + base.choices[i];
    sentence += ".";
  } else {
    base.answer_text = format_quantity(chain.answer);
  }
  base.question_sentence = std::move(sentence);

  for (const auto& step : chain.steps) base.rationale.push_back(step.explanation);
  base.digest = chain_digest(chain);
  return base;
}

static ProblemCore core_of(const BaseProblem& base) {
  return {base.conditions, base.question_sentence, base.choices,
          base.answer_text, base.rationale,       base.numeric_answer,
          base.digest};
}

ProblemRecord emit_version(const BaseProblem& base, util::Rng& rng, VersionTag version) {
  return emit_record_version(core_of(base), Subject::PlaneGeometry, rng, version);
}

std::vector<ProblemRecord> emit_versions(const BaseProblem& base, util::Rng& rng) {
  std::vector<ProblemRecord> out;
  for (VersionTag v : all_versions()) out.push_back(emit_version(base, rng, v));
  return out;
}

VerificationReport verify_problem(const BaseProblem& base,
                                  const std::vector<ProblemRecord>& records) {
  VerificationReport rep;
  const DeductionChain& chain = base.chain;

  if (chain_digest(chain) != base.digest) rep.fail("chain digest mismatch");

  // Forward derivation from the stated non-redundant conditions.
  KnownMap known = stated_values(base.conditions, false);
  auto derived = forward_eval(chain, known);
  if (!derived) {
    rep.fail("answer not derivable from stated conditions");
  } else if (!close(*derived, chain.answer)) {
    rep.fail("re-derived answer disagrees with chain answer");
  }

  // Minimality: dropping any single non-redundant condition must break a step.
  std::vector<std::pair<int, AttrKey>> stated(known.size());
  std::size_t idx = 0;
  for (const auto& [key, value] : known) {
    (void)value;
    stated[idx++] = key;
  }
  for (const auto& key : stated) {
    KnownMap reduced = known;
    reduced.erase(key);
    if (forward_eval(chain, reduced).has_value())
      rep.fail("condition " + key.second.to_string() + " on shape " +
               std::to_string(key.first) + " is not necessary");
  }

  // Step outputs must agree with the figure's measured attributes.
  for (const auto& step : chain.steps) {
    const auto& shape = chain.figure.shapes[step.output.shape_index];
    auto it = shape.attributes.find(step.output.key);
    if (it != shape.attributes.end() && !close(step.output.value, it->second))
      rep.fail("step " + std::string(step.formula->id) +
               " output disagrees with the figure");
  }

  if (chain.answer != base.numeric_answer) rep.fail("numeric answer mismatch");

  // The rationale's closing value must restate the answer.
  if (base.rationale.empty()) {
    rep.fail("empty rationale");
  } else {
    const std::string& final_line = base.rationale.back();
    auto pos = final_line.rfind('=');
    auto numerals = pos == std::string::npos
                        ? std::vector<std::string>{}
                        : util::extract_numerals(final_line.substr(pos + 1));
    if (numerals.empty() || numerals.front() != format_quantity(base.numeric_answer))
      rep.fail("rationale does not end with the answer value");
  }

  if (!base.choices.empty()) {
    if (base.choices.size() != 4 || base.answer_index < 0 || base.answer_index >= 4)
      rep.fail("malformed multiple-choice options");
    else {
      if (base.choices[base.answer_index] != format_quantity(base.numeric_answer))
        rep.fail("correct option does not match the answer value");
      if (base.answer_text != option_letter(base.answer_index))
        rep.fail("answer letter does not point at the correct option");
      std::set<std::string> uniq(base.choices.begin(), base.choices.end());
      if (uniq.size() != base.choices.size()) rep.fail("duplicate options");
    }
  } else if (base.answer_text != format_quantity(base.numeric_answer)) {
    rep.fail("answer text does not match the answer value");
  }

  for (const auto& rec : records) check_version_record(core_of(base), rec, rep);
  return rep;
}

}  // namespace diagen::plane
