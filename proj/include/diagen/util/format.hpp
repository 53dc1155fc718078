#pragma once

#include <string>
#include <vector>

namespace diagen::util {

/// Rounds to `decimals` places (half away from zero) and renders with a fixed
/// number of digits; values that round to a whole number are rendered bare
/// ("4", not "4.00"). Negative zero never appears.
std::string format_number(double v, int decimals);

/// Display form for lengths, angles, areas and answers: 2 decimals.
inline std::string format_quantity(double v) { return format_number(v, 2); }

/// Display form for scene coordinates: integers or 1-decimal reals.
inline std::string format_coord(double v) { return format_number(v, 1); }

/// "(x, y)" with coordinate formatting.
std::string format_point(double x, double y, int decimals = 1);

/// Join with ", " and a final connective ("a, b and c").
std::string join_with_and(const std::vector<std::string>& parts);

/// Round-trip exact rendering (%.17g); digest material, never display text.
std::string format_exact(double v);

}  // namespace diagen::util
