#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "diagen/caption/templates.hpp"
#include "diagen/fn/expression.hpp"
#include "diagen/fn/qa.hpp"
#include "diagen/util/format.hpp"
#include "doctest.h"

using namespace diagen;
using fn::FnQuestion;
using fn::FunctionProblem;

static FunctionProblem make_problem(std::uint64_t seed, double mc_fraction) {
  util::Rng rng(seed);
  return fn::synthesize_function_problem(rng, caption::default_templates(), mc_fraction);
}

TEST_CASE("synthesized function problems verify across all versions") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    double mc = seed % 3 == 0 ? 1.0 : (seed % 3 == 1 ? 0.0 : 0.5);
    FunctionProblem base = make_problem(seed, mc);
    util::Rng rng(seed ^ 0xabcdef);
    auto records = fn::emit_versions(base, rng);
    auto report = fn::verify_function_problem(base, records);
    if (!report.ok) {
      CAPTURE(seed);
      CAPTURE(report.issues.front());
    }
    REQUIRE(report.ok);
  }
}

TEST_CASE("derivative questions carry the canonical derivative") {
  int seen = 0;
  for (std::uint64_t seed = 1; seed <= 120 || seen < 30; ++seed) {
    REQUIRE(seed < 4000);
    FunctionProblem base = make_problem(seed, 0.0);
    if (base.question != FnQuestion::Derivative) continue;
    ++seen;
    CHECK(base.answer_text == fn::derivative_text(base.spec));
    CHECK(base.answer_text.rfind("y' = ", 0) == 0);
    // The probe slope must match the symbolic derivative evaluated there.
    fn::ExprPtr d = fn::differentiate(fn::build_expression(base.spec));
    CHECK(base.numeric_answer == doctest::Approx(eval(d, base.probe_x)).epsilon(1e-12));
  }
}

TEST_CASE("extrema questions only appear when the branch is sound") {
  int extrema_count = 0;
  for (std::uint64_t seed = 500; seed < 900; ++seed) {
    FunctionProblem base = make_problem(seed, 0.0);
    if (base.question != FnQuestion::Extrema) continue;
    ++extrema_count;
    bool has_interior = !base.features.extrema.empty();
    bool monotone_ok = base.features.asymptotes.empty() &&
                       base.features.monotone.size() == 1;
    CHECK((has_interior || monotone_ok));
    if (has_interior) {
      CHECK(base.numeric_answer == base.features.extrema.back().y);
      CHECK(base.answer_text.find("local") != std::string::npos);
    } else {
      CHECK(base.answer_text.find("no interior extrema") != std::string::npos);
      CHECK(base.answer_text.find("maximum") != std::string::npos);
      CHECK(base.answer_text.find("minimum") != std::string::npos);
    }
  }
  CHECK(extrema_count > 60);
}

TEST_CASE("multiple-choice function problems are well formed") {
  for (std::uint64_t seed = 1000; seed < 1150; ++seed) {
    FunctionProblem base = make_problem(seed, 1.0);
    REQUIRE(base.choices.size() == 4);
    std::set<std::string> uniq(base.choices.begin(), base.choices.end());
    CHECK(uniq.size() == 4);
    REQUIRE(base.answer_index >= 0);
    REQUIRE(base.answer_index < 4);
    CHECK(base.answer_text == std::string(1, static_cast<char>('A' + base.answer_index)));
    CHECK(base.question_sentence.find(" Choose from:") != std::string::npos);
    if (base.question == FnQuestion::Derivative)
      CHECK(base.choices[base.answer_index] == fn::derivative_text(base.spec));
  }
}

TEST_CASE("question sentence states the expression and ends with the question") {
  for (std::uint64_t seed = 2000; seed < 2100; ++seed) {
    FunctionProblem base = make_problem(seed, 0.0);
    CHECK(base.question_sentence.find(base.spec.expression_text) != std::string::npos);
    CHECK(base.conditions.size() == 2);
    CHECK(base.conditions[0].role == Condition::Role::Initial);
    CHECK(base.conditions[1].role == Condition::Role::Question);
  }
}

TEST_CASE("function digests are deterministic and seed-sensitive") {
  FunctionProblem a = make_problem(42, 0.5);
  FunctionProblem b = make_problem(42, 0.5);
  FunctionProblem c = make_problem(43, 0.5);
  CHECK(a.digest == b.digest);
  CHECK(a.digest != c.digest);
  CHECK(a.digest.size() == 64);
}

TEST_CASE("verification flags corrupted function problems") {
  FunctionProblem base = make_problem(7, 0.0);
  util::Rng rng(7);
  auto records = fn::emit_versions(base, rng);
  REQUIRE(fn::verify_function_problem(base, records).ok);

  SUBCASE("mutated numeric answer") {
    FunctionProblem bad = base;
    bad.numeric_answer += 0.5;
    CHECK(!fn::verify_function_problem(bad, {}).ok);
  }
  SUBCASE("mutated answer text") {
    FunctionProblem bad = base;
    bad.answer_text += " + 1";
    CHECK(!fn::verify_function_problem(bad, {}).ok);
  }
  SUBCASE("mutated rationale") {
    FunctionProblem bad = base;
    bad.rationale.back() = "Therefore the result = 123456.";
    CHECK(!fn::verify_function_problem(bad, {}).ok);
  }
  SUBCASE("dropped condition") {
    FunctionProblem bad = base;
    bad.conditions.pop_back();
    CHECK(!fn::verify_function_problem(bad, {}).ok);
  }
  SUBCASE("shifted extremum") {
    FunctionProblem bad = base;
    if (!bad.features.extrema.empty()) {
      bad.features.extrema[0].x += 0.3;
      CHECK(!fn::verify_function_problem(bad, {}).ok);
    }
  }
  SUBCASE("tampered version record") {
    FunctionProblem good = base;
    auto tampered = records;
    if (!tampered[0].text_conditions.empty()) {
      tampered[0].text_conditions.pop_back();
      CHECK(!fn::verify_function_problem(good, tampered).ok);
    }
  }
  SUBCASE("probe moved onto a pole") {
    FunctionProblem bad = make_problem(7, 0.0);
    if (bad.question == FnQuestion::Derivative) {
      bad.probe_x = bad.spec.x_lo - 1;
      bad.digest = fn::function_digest(bad);
      CHECK(!fn::verify_function_problem(bad, {}).ok);
    }
  }
}

TEST_CASE("endpoint extrema answers match direct evaluation") {
  int seen = 0;
  for (std::uint64_t seed = 3000; seed < 3400 && seen < 25; ++seed) {
    FunctionProblem base = make_problem(seed, 0.0);
    if (base.question != FnQuestion::Extrema || !base.features.extrema.empty()) continue;
    ++seen;
    fn::ExprPtr expr = fn::build_expression(base.spec);
    double y_lo = eval(expr, base.spec.x_lo);
    double y_hi = eval(expr, base.spec.x_hi);
    CHECK(base.numeric_answer == doctest::Approx(std::max(y_lo, y_hi)).epsilon(1e-12));
    CHECK(base.answer_text.find(util::format_quantity(std::max(y_lo, y_hi))) !=
          std::string::npos);
    CHECK(base.answer_text.find(util::format_quantity(std::min(y_lo, y_hi))) !=
          std::string::npos);
  }
  CHECK(seen >= 10);
}
