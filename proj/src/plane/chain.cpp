#include "diagen/plane/chain.hpp"

#include <cassert>
#include <cstdio>

#include "diagen/geom/catalog.hpp"
#include "diagen/util/hash.hpp"

namespace diagen::plane {

namespace {

using geom::AttrKey;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

DeductionChain build_chain_for(geom::CompositeFigure figure, util::Rng& rng,
                               const PlaneConfig& cfg) {
  DeductionChain out;
  out.figure = std::move(figure);
  const auto& shapes = out.figure.shapes;
  const int n = static_cast<int>(shapes.size());
  assert(n >= 1);

  std::vector<QuestionOption> options;
  std::vector<double> weights;
  for (const auto& opt : question_options(shapes.back().kind)) {
    if (opt.root_only && n > 1) continue;
    options.push_back(opt);
    weights.push_back(cfg.question_weights.at(opt.type));
  }
  const QuestionOption& chosen = options[rng.pick_weighted(weights)];
  out.question = chosen.type;

  // The value carried along the chain: the active shape's initial side.
  Condition carried;
  for (int i = 0; i + 1 < n; ++i) {
    const auto& shape = shapes[i];
    const auto& next = shapes[i + 1];
    const Formula* f = meta_formula(shape.kind, next.parent_edge.value());
    assert(f != nullptr);

    ReasoningStep step;
    step.shape_index = i;
    step.formula = f;
    std::vector<double> vals;
    for (std::size_t k = 0; k < f->inputs.size(); ++k) {
      Condition c;
      if (k == 0 && i > 0) {
        c = carried;
      } else {
        c.shape_index = i;
        c.key = f->inputs[k];
        c.value = shape.attributes.at(c.key);
        c.role = (k == 0) ? Condition::Role::Initial : Condition::Role::Meta;
        out.given.push_back(c);
      }
      step.inputs.push_back(c);
      vals.push_back(c.value);
    }
    double value = f->eval(vals);
    step.output = {i + 1, AttrKey::side(0), value, Condition::Role::Derived, {}};
    step.explanation = f->explain({shape, &next, vals, f->output, value});
    carried = step.output;
    out.steps.push_back(std::move(step));
  }

  const Formula* qf = chosen.formula;
  ReasoningStep step;
  step.shape_index = n - 1;
  step.formula = qf;
  std::vector<double> vals;
  for (std::size_t k = 0; k < qf->inputs.size(); ++k) {
    Condition c;
    if (k == 0 && n > 1) {
      assert(qf->inputs[0] == AttrKey::side(0));
      c = carried;
    } else {
      c.shape_index = n - 1;
      c.key = qf->inputs[k];
      c.value = shapes[n - 1].attributes.at(c.key);
      c.role = (k == 0) ? Condition::Role::Initial : Condition::Role::Question;
      out.given.push_back(c);
    }
    step.inputs.push_back(c);
    vals.push_back(c.value);
  }
  double answer = qf->eval(vals);
  step.output = {n - 1, qf->output, answer, Condition::Role::Derived, {}};
  step.explanation = qf->explain({shapes[n - 1], nullptr, vals, qf->output, answer});
  out.steps.push_back(std::move(step));

  out.target = out.steps.back().output;
  out.answer = answer;
  return out;
}

DeductionChain build_chain(util::Rng& rng, const PlaneConfig& cfg) {
  return build_chain_for(geom::sample_figure(rng, cfg.figure), rng, cfg);
}

std::string chain_digest(const DeductionChain& chain) {
  std::string text = "plane-chain-v1\n";
  const auto& shapes = chain.figure.shapes;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& s = shapes[i];
    text += "shape:" + std::to_string(i) + ":" + std::string(geom::kind_name(s.kind));
    text += ":parent=";
    text += s.parent_edge ? std::to_string(*s.parent_edge) : std::string("-");
    text += ":labels=";
    for (const auto& l : s.labels) text += l + ",";
    text += "\n";
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
      text += "vertex:" + std::to_string(j) + ":" + g17(s.vertices[j].x) + ":" +
              g17(s.vertices[j].y) + "\n";
    for (const auto& [key, value] : s.attributes)
      text += "attr:" + key.to_string() + ":" + g17(value) + "\n";
  }
  text += "question:" + std::string(question_type_name(chain.question)) + "\n";
  for (const auto& c : chain.given)
    text += "given:" + std::to_string(c.shape_index) + ":" + c.key.to_string() + ":" +
            std::string(role_name(c.role)) + ":" + g17(c.value) + "\n";
  for (const auto& s : chain.steps)
    text += "step:" + std::to_string(s.shape_index) + ":" + std::string(s.formula->id) +
            ":" + s.output.key.to_string() + ":" + g17(s.output.value) + "\n";
  text += "answer:" + g17(chain.answer) + "\n";
  return util::sha256_hex(text);
}

}  // namespace diagen::plane
