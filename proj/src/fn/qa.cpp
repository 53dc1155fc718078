#include "diagen/fn/qa.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "diagen/errors.hpp"
#include "diagen/fn/expression.hpp"
#include "diagen/util/format.hpp"
#include "diagen/util/hash.hpp"
#include "diagen/util/text.hpp"

namespace diagen::fn {

namespace {

using util::format_exact;
using util::format_quantity;

std::string option_letter(int i) { return std::string(1, static_cast<char>('A' + i)); }

/// x-values the derivative must stay away from: poles, piece breakpoints and
/// the |ax+b| kink.
std::vector<double> special_points(const FunctionSpec& spec) {
  std::vector<double> pts = pole_positions(spec);
  pts.insert(pts.end(), spec.cuts.begin(), spec.cuts.end());
  if (spec.family == Family::Absolute && spec.params[0] != 0.0)
    pts.push_back(-spec.params[1] / spec.params[0]);
  return pts;
}

double pick_probe(const FunctionSpec& spec, util::Rng& rng) {
  std::vector<double> avoid = special_points(spec);
  double w = spec.x_hi - spec.x_lo;
  double lo = spec.x_lo + 0.05 * w, hi = spec.x_hi - 0.05 * w;
  for (int attempt = 0; attempt < 200; ++attempt) {
    double x = rng.uniform_real(lo, hi);
    bool clear = true;
    for (double s : avoid)
      if (std::abs(x - s) < 0.15) clear = false;
    if (clear) return x;
  }
  throw Error("no safe derivative probe found");
}

/// Copies of the spec with mangled coefficients; their derivative strings
/// make plausible wrong options.
FunctionSpec scale_params(const FunctionSpec& spec, double factor) {
  FunctionSpec out = spec;
  switch (spec.family) {
    case Family::Polynomial:
      for (double& c : out.params) c *= factor;
      break;
    case Family::PiecewisePolynomial:
      for (auto& seg : out.segments)
        for (double& c : seg) c *= factor;
      break;
    default:
      out.params[0] *= factor;  // amplitude / leading factor
      break;
  }
  return out;
}

/// Shuffled four-option block; index 0 of the pre-shuffle order is the truth.
void assign_choices(util::Rng& rng, std::vector<std::string> options,
                    FunctionProblem& base) {
  std::vector<int> order = {0, 1, 2, 3};
  rng.shuffle(order);
  base.choices.assign(4, "");
  for (int i = 0; i < 4; ++i) {
    base.choices[i] = options[order[i]];
    if (order[i] == 0) base.answer_index = i;
  }
}

std::vector<std::string> derivative_options(const FunctionSpec& spec) {
  std::string truth = derivative_text(spec);
  std::vector<std::string> options = {truth};
  auto push_unique = [&](std::string s) {
    if (std::find(options.begin(), options.end(), s) == options.end())
      options.push_back(std::move(s));
  };
  push_unique(derivative_text(scale_params(spec, -1.0)));
  push_unique(derivative_text(scale_params(spec, 2.0)));
  // The classic trap: not differentiating at all.
  push_unique("y' = " + spec.expression_text.substr(4));
  push_unique(derivative_text(scale_params(spec, 3.0)));
  if (options.size() < 4) throw DegenerateDistractors("derivative options collapsed");
  options.resize(4);
  return options;
}

std::string extremum_phrase(const Extremum& e, double dx, double dy) {
  return std::string(e.is_max ? "a local maximum at " : "a local minimum at ") +
         util::format_point(e.x + dx, e.y + dy, 2);
}

std::string extrema_answer(const std::vector<Extremum>& extrema, double dx, double dy) {
  std::vector<std::string> phrases;
  for (const Extremum& e : extrema) phrases.push_back(extremum_phrase(e, dx, dy));
  return util::join_with_and(phrases);
}

std::string endpoint_answer(double x_max, double y_max, double x_min, double y_min,
                            double dy) {
  return "no interior extrema; the maximum is " + format_quantity(y_max + dy) +
         " at x = " + format_quantity(x_max) + " and the minimum is " +
         format_quantity(y_min + dy) + " at x = " + format_quantity(x_min);
}

std::string family_derivation_line(const FunctionSpec& spec, const std::string& d) {
  switch (spec.family) {
    case Family::Sine:
      return "The derivative of the sine is the cosine, scaled by the inner slope "
             "through the chain rule, so " + d + ".";
    case Family::Cosine:
      return "The derivative of the cosine is minus the sine, scaled by the inner "
             "slope through the chain rule, so " + d + ".";
    case Family::Tangent:
      return "The tangent differentiates to one over cosine squared, times the inner "
             "slope, so " + d + ".";
    case Family::Polynomial:
      return "Differentiating term by term lowers each power by one, so " + d + ".";
    case Family::PiecewisePolynomial:
      return "Each piece differentiates independently on its own interval, so " + d + ".";
    case Family::Logarithmic:
      return "The derivative of a logarithm is the inner slope over the argument "
             "times the natural log of the base, so " + d + ".";
    case Family::Absolute:
      return "Away from its kink, the absolute value differentiates to the sign of "
             "its argument times the inner slope, so " + d + ".";
  }
  return d;
}

bool monotone_endpoint_case(const FunctionFeatures& features) {
  return features.extrema.empty() && features.asymptotes.empty() &&
         features.monotone.size() == 1;
}

void build_derivative_problem(FunctionProblem& base, util::Rng& rng, bool mc) {
  const FunctionSpec& spec = base.spec;
  std::string d = derivative_text(spec);
  base.probe_x = pick_probe(spec, rng);
  ExprPtr dexpr = differentiate(build_expression(spec));
  base.numeric_answer = eval(dexpr, base.probe_x);

  base.rationale.push_back("The function is " + spec.expression_text +
                           " on the interval [" + format_quantity(spec.x_lo) + ", " +
                           format_quantity(spec.x_hi) + "].");
  base.rationale.push_back(family_derivation_line(spec, d));
  base.rationale.push_back("As a check, at x = " + format_quantity(base.probe_x) +
                           " the slope evaluates to " + d.substr(0, 2) + " = " +
                           format_quantity(base.numeric_answer) + ".");
  if (mc) {
    assign_choices(rng, derivative_options(spec), base);
    base.answer_text = option_letter(base.answer_index);
  } else {
    base.answer_text = d;
  }
}

void build_extrema_problem(FunctionProblem& base, util::Rng& rng, bool mc) {
  const FunctionSpec& spec = base.spec;
  const FunctionFeatures& f = base.features;
  std::string d = derivative_text(spec);
  base.rationale.push_back("The function is " + spec.expression_text +
                           " on the interval [" + format_quantity(spec.x_lo) + ", " +
                           format_quantity(spec.x_hi) + "].");
  std::string truth;
  if (!f.extrema.empty()) {
    base.rationale.push_back("Interior critical points solve " + d + " = 0.");
    for (const Extremum& e : f.extrema) {
      base.rationale.push_back(
          std::string("The slope changes from ") +
          (e.is_max ? "positive to negative" : "negative to positive") + " across x = " +
          format_quantity(e.x) + ", a local " + (e.is_max ? "maximum" : "minimum") +
          " with y = " + format_quantity(e.y) + ".");
    }
    base.numeric_answer = f.extrema.back().y;
    truth = extrema_answer(f.extrema, 0, 0);
    if (mc) {
      std::vector<std::string> options = {truth, extrema_answer(f.extrema, 0, 1),
                                          extrema_answer(f.extrema, 0, -1),
                                          extrema_answer(f.extrema, 1, 0)};
      assign_choices(rng, std::move(options), base);
    }
  } else {
    bool increasing = f.monotone[0].increasing;
    ExprPtr expr = build_expression(spec);
    double y_lo = eval(expr, spec.x_lo), y_hi = eval(expr, spec.x_hi);
    double x_max = increasing ? spec.x_hi : spec.x_lo;
    double y_max = increasing ? y_hi : y_lo;
    double x_min = increasing ? spec.x_lo : spec.x_hi;
    double y_min = increasing ? y_lo : y_hi;
    base.rationale.push_back("The derivative " + d +
                             " has no zero inside the domain, so the function is " +
                             (increasing ? "increasing" : "decreasing") + " throughout.");
    base.rationale.push_back("The extreme values therefore sit at the endpoints: the "
                             "minimum is y(" + format_quantity(x_min) + ") = " +
                             format_quantity(y_min) + ".");
    base.rationale.push_back("Likewise the maximum is y(" + format_quantity(x_max) +
                             ") = " + format_quantity(y_max) + ".");
    base.numeric_answer = y_max;
    truth = endpoint_answer(x_max, y_max, x_min, y_min, 0);
    if (mc) {
      std::vector<std::string> options = {truth,
                                          endpoint_answer(x_max, y_max, x_min, y_min, 1),
                                          endpoint_answer(x_max, y_max, x_min, y_min, -1),
                                          endpoint_answer(x_max, y_max, x_min, y_min, 2)};
      assign_choices(rng, std::move(options), base);
    }
  }
  base.answer_text = mc ? option_letter(base.answer_index) : truth;
}

}  // namespace

std::string_view fn_question_name(FnQuestion q) {
  return q == FnQuestion::Derivative ? "derivative" : "extrema";
}

std::string function_digest(const FunctionProblem& base) {
  const FunctionSpec& spec = base.spec;
  std::string text = "function-chain-v1\n";
  text += "family:" + std::string(family_name(spec.family)) + "\n";
  for (double p : spec.params) text += "param:" + format_exact(p) + "\n";
  for (const auto& seg : spec.segments) {
    text += "segment:";
    for (double c : seg) text += format_exact(c) + ",";
    text += "\n";
  }
  for (double c : spec.cuts) text += "cut:" + format_exact(c) + "\n";
  text += "domain:" + format_exact(spec.x_lo) + ":" + format_exact(spec.x_hi) + "\n";
  text += "question:" + std::string(fn_question_name(base.question)) + "\n";
  if (base.question == FnQuestion::Derivative)
    text += "probe:" + format_exact(base.probe_x) + "\n";
  text += "answer:" + base.answer_text + "\n";
  text += "numeric:" + format_exact(base.numeric_answer) + "\n";
  return util::sha256_hex(text);
}

FunctionProblem synthesize_function_problem(util::Rng& rng,
                                            const caption::TemplateSet& templates,
                                            double mc_fraction) {
  FunctionProblem base;
  base.spec = sample_function(rng);
  base.features = scan_features(base.spec);

  Condition expr_cond;
  expr_cond.shape_index = -1;
  expr_cond.key = geom::AttrKey::expression();
  expr_cond.role = Condition::Role::Initial;
  expr_cond.text = caption::instantiate(templates.pick(rng, "function/expression"),
                                        {{"expr", base.spec.expression_text}});
  Condition dom_cond;
  dom_cond.shape_index = -1;
  dom_cond.key = geom::AttrKey::domain();
  dom_cond.role = Condition::Role::Question;
  dom_cond.text = caption::instantiate(templates.pick(rng, "function/domain"),
                                       {{"lo", format_quantity(base.spec.x_lo)},
                                        {"hi", format_quantity(base.spec.x_hi)}});
  base.conditions = {expr_cond, dom_cond};

  bool want_extrema = rng.bernoulli(0.5);
  bool extrema_ok =
      !base.features.extrema.empty() || monotone_endpoint_case(base.features);
  base.question =
      (want_extrema && extrema_ok) ? FnQuestion::Extrema : FnQuestion::Derivative;

  std::string section = base.question == FnQuestion::Extrema ? "fnq/extrema"
                                                             : "fnq/derivative";
  std::string sentence = caption::instantiate(
      templates.pick(rng, section), {{"expr", base.spec.expression_text}});

  bool mc = rng.bernoulli(mc_fraction);
  if (base.question == FnQuestion::Derivative)
    build_derivative_problem(base, rng, mc);
  else
    build_extrema_problem(base, rng, mc);

  if (mc) {
    sentence += " Choose from:";
    for (int i = 0; i < static_cast<int>(base.choices.size()); ++i)
      sentence += " (" + option_letter(i) + ") " + base.choices[i];
    sentence += ".";
  }
  base.question_sentence = std::move(sentence);
  base.digest = function_digest(base);
  return base;
}

static ProblemCore core_of(const FunctionProblem& base) {
  return {base.conditions, base.question_sentence, base.choices,
          base.answer_text, base.rationale,       base.numeric_answer,
          base.digest};
}

ProblemRecord emit_version(const FunctionProblem& base, util::Rng& rng,
                           VersionTag version) {
  return emit_record_version(core_of(base), Subject::Function, rng, version);
}

std::vector<ProblemRecord> emit_versions(const FunctionProblem& base, util::Rng& rng) {
  std::vector<ProblemRecord> out;
  for (VersionTag v : all_versions()) out.push_back(emit_version(base, rng, v));
  return out;
}

VerificationReport verify_function_problem(const FunctionProblem& base,
                                           const std::vector<ProblemRecord>& records) {
  VerificationReport rep;
  const FunctionSpec& spec = base.spec;

  if (function_digest(base) != base.digest) rep.fail("digest mismatch");

  if (base.conditions.size() != 2 ||
      base.conditions[0].key != geom::AttrKey::expression() ||
      base.conditions[1].key != geom::AttrKey::domain())
    rep.fail("conditions are not the expression/domain pair");
  else {
    if (base.conditions[0].text.find(spec.expression_text) == std::string::npos)
      rep.fail("expression condition does not state the expression");
    if (base.conditions[1].text.find(format_quantity(spec.x_lo)) == std::string::npos ||
        base.conditions[1].text.find(format_quantity(spec.x_hi)) == std::string::npos)
      rep.fail("domain condition does not state the endpoints");
  }

  // Features must agree with a fresh scan.
  FunctionFeatures fresh = scan_features(spec);
  auto list_close = [](const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > 1e-7) return false;
    return true;
  };
  std::vector<double> ex_x, fresh_x;
  for (const auto& e : base.features.extrema) ex_x.push_back(e.x);
  for (const auto& e : fresh.extrema) fresh_x.push_back(e.x);
  if (!list_close(base.features.zeros, fresh.zeros)) rep.fail("zeros differ from re-scan");
  if (!list_close(ex_x, fresh_x)) rep.fail("extrema differ from re-scan");
  if (!list_close(base.features.asymptotes, fresh.asymptotes))
    rep.fail("asymptotes differ from re-scan");

  ExprPtr expr = build_expression(spec);
  ExprPtr dexpr = differentiate(expr);

  if (base.question == FnQuestion::Derivative) {
    double h = 1e-5;
    double fd = (eval(expr, base.probe_x + h) - eval(expr, base.probe_x - h)) / (2 * h);
    if (std::abs(fd - base.numeric_answer) >
        1e-4 * std::max(1.0, std::abs(base.numeric_answer)))
      rep.fail("slope at the probe disagrees with finite differences");
    if (base.probe_x <= spec.x_lo || base.probe_x >= spec.x_hi)
      rep.fail("probe outside the domain");
    for (double s : special_points(spec))
      if (std::abs(base.probe_x - s) < 0.1) rep.fail("probe too close to a special point");
    std::string truth = derivative_text(spec);
    if (base.choices.empty()) {
      if (base.answer_text != truth) rep.fail("answer is not the derivative");
    } else if (base.answer_index < 0 ||
               base.answer_index >= static_cast<int>(base.choices.size()) ||
               base.choices[base.answer_index] != truth) {
      rep.fail("correct option is not the derivative");
    }
  } else {
    if (!base.features.extrema.empty()) {
      for (const Extremum& e : base.features.extrema) {
        if (std::abs(eval(expr, e.x) - e.y) > 1e-6)
          rep.fail("extremum value does not lie on the curve");
        double delta = 1e-4;
        double left = eval(dexpr, e.x - delta), right = eval(dexpr, e.x + delta);
        bool ok = e.is_max ? (left > 0 && right < 0) : (left < 0 && right > 0);
        if (!ok)
          rep.fail("slope does not change sign as reported at x = " +
                   format_quantity(e.x));
      }
      if (base.numeric_answer != base.features.extrema.back().y)
        rep.fail("numeric answer is not the final extremum value");
    } else {
      if (!monotone_endpoint_case(base.features))
        rep.fail("endpoint-extrema branch used without monotonicity");
      bool increasing = base.features.monotone.empty()
                            ? true
                            : base.features.monotone[0].increasing;
      double prev = eval(expr, spec.x_lo);
      for (int i = 1; i <= 200; ++i) {
        double x = spec.x_lo + (spec.x_hi - spec.x_lo) * i / 200.0;
        double y = eval(expr, x);
        if (increasing ? y + 1e-9 < prev : y - 1e-9 > prev) {
          rep.fail("function is not monotone as claimed");
          break;
        }
        prev = y;
      }
      double expected =
          eval(expr, increasing ? spec.x_hi : spec.x_lo);
      if (std::abs(base.numeric_answer - expected) > 1e-9)
        rep.fail("numeric answer is not the endpoint maximum");
    }
  }

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
      if (base.answer_text != option_letter(base.answer_index))
        rep.fail("answer letter does not point at the correct option");
      std::set<std::string> uniq(base.choices.begin(), base.choices.end());
      if (uniq.size() != base.choices.size()) rep.fail("duplicate options");
    }
  }

  for (const auto& rec : records) {
    if (rec.subject != Subject::Function) rep.fail("record subject is not function");
    check_version_record(core_of(base), rec, rep);
  }
  return rep;
}

}  // namespace diagen::fn
