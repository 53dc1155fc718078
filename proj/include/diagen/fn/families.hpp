#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagen/fn/expression.hpp"
#include "diagen/util/rng.hpp"

namespace diagen::fn {

enum class Family {
  Sine,
  Cosine,
  Tangent,
  Polynomial,
  PiecewisePolynomial,
  Logarithmic,
  Absolute,
};

inline constexpr int kFamilyCount = 7;

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

/// A sampled function. Parameter layout by family:
///   Sine/Cosine/Tangent: params = {amplitude, frequency, phase}
///   Polynomial:          params = coefficients, highest power first
///   Logarithmic:         params = {a, b, c, d} for a*log_b(c*x + d)
///   Absolute:            params = {a, b} for |a*x + b|
///   PiecewisePolynomial: segments = per-piece coefficients (highest first),
///                        cuts = interior breakpoints; params empty
struct FunctionSpec {
  Family family = Family::Polynomial;
  std::vector<double> params;
  std::vector<std::vector<double>> segments;
  std::vector<double> cuts;
  double x_lo = -1.0;
  double x_hi = 1.0;
  std::string expression_text;  // canonical "y = ..." display
};

/// Uniform family choice, then family-specific parameter sampling within the
/// engine's fixed ranges.
FunctionSpec sample_function(util::Rng& rng);
FunctionSpec sample_function_of(Family family, util::Rng& rng);

/// Expression tree of the sampled function.
ExprPtr build_expression(const FunctionSpec& spec);

/// Canonical derivative display ("y' = ..."), one line per piece for the
/// piecewise family.
std::string derivative_text(const FunctionSpec& spec);

/// Vertical poles of the function inside [x_lo, x_hi] (tangent family), or
/// the logarithm's asymptote when it exists; empty otherwise.
std::vector<double> pole_positions(const FunctionSpec& spec);

}  // namespace diagen::fn
